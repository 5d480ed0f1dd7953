#pragma once

// Random and grid instance generators for the law engine.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "ifss/relation.hpp"

namespace ifss::detail {

/// Deterministic generator. mt19937_64's output sequence is fixed by the
/// standard, and the conversions below avoid the implementation-defined
/// standard distributions, so a seed reproduces the same instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// mu uniform on [0, 1], then nu uniform on [0, 1 - mu].
IFValue random_ifvalue(Rng& rng);
/// A value below `v` in the intuitionistic order.
IFValue shrink_value(Rng& rng, IFValue v);

Universe random_universe(Rng& rng, std::size_t max_size);
/// Between min_size and max_size identifiers drawn from prefix1..prefixN.
ParamSet random_params(Rng& rng, std::string_view prefix, std::size_t pool, std::size_t min_size,
                       std::size_t max_size);
IFSet random_ifset(Rng& rng, const Universe& universe);
IFSoftSet random_soft_set(Rng& rng, const Universe& universe, const ParamSet& params);

/// A relation from `left` to `right`: a random restriction of the product of
/// two random soft sets, with some values lowered.
IFSoftRelation random_relation(Rng& rng, const NormPair& pair, const Universe& universe,
                               const ParamSet& left, const ParamSet& right);
/// Drops some pairs of `r` and lowers some values.
IFSoftRelation sub_relation(Rng& rng, const IFSoftRelation& r);
/// Closes the domain under swap, copying R(a, b) to R(b, a) for a <= b.
IFSoftRelation symmetrize(const IFSoftRelation& r);

/// Square relations biased towards satisfying the corresponding predicate
/// under Min/Max. They are candidates only; callers filter with the predicate.
IFSoftRelation transitive_candidate(Rng& rng, const NormPair& pair, const Universe& universe,
                                    const ParamSet& params);
IFSoftRelation equivalence_candidate(Rng& rng, const NormPair& pair, const Universe& universe,
                                     const ParamSet& params);
IFSoftRelation reflexive_candidate(Rng& rng, const NormPair& pair, const Universe& universe,
                                   const ParamSet& params);

/// Every (mu, nu) = (i*step, j*step) with mu + nu <= 1, in (i, j) order.
std::vector<IFValue> grid_values(double step);

}  // namespace ifss::detail
