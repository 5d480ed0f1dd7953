#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ifss/softset.hpp"

namespace ifss {

struct ParamPair {
  ParamId first;
  ParamId second;

  friend auto operator<=>(const ParamPair&, const ParamPair&) = default;
};

std::string to_string(const ParamPair& pair);

/// A soft relation (R, C) from parameters A to parameters B: C is a subset
/// of A x B and every pair in C carries an IF set over the shared universe.
///
/// A relation built by cartesian_product or make_relation is contained in
/// the product of its generating soft sets. A relation built directly (for
/// instance when parsed from a file) carries no generators, so only the
/// structural invariants below are enforced.
class IFSoftRelation {
 public:
  using Assignment = std::map<ParamPair, IFSet>;

  /// Throws DomainError when a pair lies outside left x right and
  /// UniverseMismatch when a value lives on another universe.
  IFSoftRelation(Universe universe, ParamSet left, ParamSet right, Assignment assignment);

  const Universe& universe() const noexcept { return universe_; }
  const ParamSet& left_params() const noexcept { return left_; }
  const ParamSet& right_params() const noexcept { return right_; }
  const Assignment& assignment() const noexcept { return assignment_; }

  std::set<ParamPair> domain() const;
  std::size_t size() const noexcept { return assignment_.size(); }
  bool empty() const noexcept { return assignment_.empty(); }
  bool is_square() const { return left_ == right_; }

  bool contains(const ParamPair& pair) const { return assignment_.contains(pair); }
  /// nullptr when the pair is outside the domain.
  const IFSet* find(const ParamPair& pair) const;
  /// Throws DomainError when the pair is outside the domain.
  const IFSet& at(const ParamPair& pair) const;

 private:
  Universe universe_;
  ParamSet left_;
  ParamSet right_;
  Assignment assignment_;
};

/// (F, A) x (G, B): domain A x B, H(a, b) = F(a) meet G(b).
IFSoftRelation cartesian_product(const NormPair& pair, const IFSoftSet& left,
                                 const IFSoftSet& right);

/// Restricts a product to `keep`, inheriting its values. Throws DomainError
/// for a pair outside the product's domain.
IFSoftRelation make_relation(const IFSoftRelation& product, const std::set<ParamPair>& keep);

/// Builds a relation with explicit values, each of which must be an IF subset
/// of the product's value at the same pair (ConstraintError otherwise).
IFSoftRelation make_relation(const IFSoftRelation& product, IFSoftRelation::Assignment values);

/// R^-1(b, a) = R(a, b); left and right parameter sets swap.
IFSoftRelation inverse(const IFSoftRelation& r);

/// (R1 o R2)(a, c) over the witnessed pairs only. With several middle
/// parameters b, the per-witness meets R1(a, b) meet R2(b, c) are folded
/// with the join (t-conorm on mu, t-norm on nu), which is sup-min
/// composition under Min/Max.
///
/// Throws ParamMismatch unless r1's right parameters equal r2's left
/// parameters, and UniverseMismatch for different universes.
IFSoftRelation compose(const NormPair& pair, const IFSoftRelation& r1, const IFSoftRelation& r2);

/// n-fold left-associated composition, n >= 1. Throws ParamMismatch for a
/// non-square relation and DomainError for n == 0.
IFSoftRelation power(const NormPair& pair, const IFSoftRelation& r, unsigned n);

/// inner's domain is contained in outer's and values are pointwise <=.
/// Throws UniverseMismatch for different universes.
bool relation_subset(const IFSoftRelation& inner, const IFSoftRelation& outer);

/// First reason relation_subset fails, or nullopt.
std::optional<std::string> relation_subset_violation(const IFSoftRelation& inner,
                                                     const IFSoftRelation& outer);

/// Same universe, parameter sets and domain; degrees within tolerance.
bool relation_equal(const IFSoftRelation& a, const IFSoftRelation& b,
                    double tolerance = kCompareTolerance);

/// First reason relation_equal fails, or nullopt.
std::optional<std::string> relation_difference(const IFSoftRelation& a, const IFSoftRelation& b,
                                               double tolerance = kCompareTolerance);

}  // namespace ifss
