#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>

namespace ifss {

/// Slack allowed on mu + nu <= 1 at construction.
inline constexpr double kConstraintTolerance = 1e-9;
/// Slack used by every order and equality comparison between degrees.
inline constexpr double kCompareTolerance = 1e-9;

/// A real number in [0, 1]. Construction rejects anything outside the
/// interval (including NaN); nothing is ever clamped.
class UnitScalar {
 public:
  explicit UnitScalar(double value);

  double value() const noexcept { return value_; }

  friend auto operator<=>(UnitScalar, UnitScalar) = default;

 private:
  double value_;
};

/// Membership / non-membership pair (mu, nu) with mu + nu <= 1.
class IFValue {
 public:
  IFValue(UnitScalar mu, UnitScalar nu);

  /// (1, 0): full membership.
  static IFValue top() noexcept;
  /// (0, 1): full non-membership.
  static IFValue bottom() noexcept;

  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }

  /// Exact component equality. Use ifv_approx_equal for computed values.
  friend bool operator==(const IFValue&, const IFValue&) = default;

 private:
  IFValue(double mu, double nu, std::nullptr_t) noexcept : mu_(mu), nu_(nu) {}

  double mu_;
  double nu_;
};

/// Throws RangeError for a component outside [0, 1] and ConstraintError when
/// mu + nu > 1 + kConstraintTolerance.
IFValue make_ifvalue(double mu, double nu);

enum class TNorm { Min, Product, Lukasiewicz };
enum class TConorm { Max, ProbSum, BoundedSum };

UnitScalar tnorm_apply(TNorm kind, UnitScalar a, UnitScalar b) noexcept;
UnitScalar tconorm_apply(TConorm kind, UnitScalar a, UnitScalar b) noexcept;

std::string_view to_string(TNorm kind) noexcept;
std::string_view to_string(TConorm kind) noexcept;

/// A t-norm together with its dual t-conorm. Only the three dual
/// combinations are constructible, which keeps mu + nu <= 1 closed under
/// meet and join.
class NormPair {
 public:
  /// Throws ConstraintError for a non-dual combination.
  NormPair(TNorm tnorm, TConorm tconorm);

  static NormPair min_max() noexcept;
  static NormPair product_probsum() noexcept;
  static NormPair lukasiewicz() noexcept;

  /// "minmax", "prodsum" or "lukasiewicz"; throws LookupError otherwise.
  static NormPair from_name(std::string_view name);

  TNorm tnorm() const noexcept { return tnorm_; }
  TConorm tconorm() const noexcept { return tconorm_; }

  /// True iff a*a = a and a<>a = a for all a, i.e. the Min/Max pair.
  bool idempotent() const noexcept { return tnorm_ == TNorm::Min; }

  std::string_view name() const noexcept;

  friend bool operator==(const NormPair&, const NormPair&) = default;

 private:
  TNorm tnorm_;
  TConorm tconorm_;
};

/// Min/Max, Product/ProbSum, Lukasiewicz/BoundedSum in that order.
std::span<const NormPair> builtin_norm_pairs() noexcept;

/// (v.mu * w.mu, v.nu <> w.nu)
IFValue ifv_meet(const NormPair& pair, IFValue v, IFValue w);
/// (v.mu <> w.mu, v.nu * w.nu)
IFValue ifv_join(const NormPair& pair, IFValue v, IFValue w);

/// Intuitionistic order: mu can only grow and nu can only shrink from v to w.
bool ifv_leq(IFValue v, IFValue w) noexcept;
bool ifv_approx_equal(IFValue v, IFValue w,
                      double tolerance = kCompareTolerance) noexcept;

/// Formats a degree with up to 12 significant digits.
std::string format_degree(double value);
/// "(mu, nu)"
std::string to_string(IFValue value);

}  // namespace ifss
