#include "ifss/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ifss/error.hpp"

namespace ifss {

UnitScalar::UnitScalar(double value) : value_(value) {
  // Negated comparison so NaN is rejected too.
  if (!(value >= 0.0 && value <= 1.0)) {
    throw RangeError("degree " + format_degree(value) + " is outside [0, 1]");
  }
}

IFValue::IFValue(UnitScalar mu, UnitScalar nu) : mu_(mu.value()), nu_(nu.value()) {
  if (mu_ + nu_ > 1.0 + kConstraintTolerance) {
    throw ConstraintError("mu + nu = " + format_degree(mu_ + nu_) + " exceeds 1 for " +
                          to_string(*this));
  }
}

IFValue IFValue::top() noexcept { return IFValue(1.0, 0.0, nullptr); }
IFValue IFValue::bottom() noexcept { return IFValue(0.0, 1.0, nullptr); }

IFValue make_ifvalue(double mu, double nu) {
  UnitScalar m(mu);
  UnitScalar n(nu);
  return IFValue(m, n);
}

UnitScalar tnorm_apply(TNorm kind, UnitScalar a, UnitScalar b) noexcept {
  const double x = a.value();
  const double y = b.value();
  switch (kind) {
    case TNorm::Min:
      return UnitScalar(std::min(x, y));
    case TNorm::Product:
      return UnitScalar(x * y);
    case TNorm::Lukasiewicz:
      return UnitScalar(std::max(x + y - 1.0, 0.0));
  }
  return UnitScalar(0.0);
}

UnitScalar tconorm_apply(TConorm kind, UnitScalar a, UnitScalar b) noexcept {
  const double x = a.value();
  const double y = b.value();
  switch (kind) {
    case TConorm::Max:
      return UnitScalar(std::max(x, y));
    case TConorm::ProbSum:
      // x + y - xy written so the rounded result never exceeds 1.
      return UnitScalar(x + y * (1.0 - x));
    case TConorm::BoundedSum:
      return UnitScalar(std::min(x + y, 1.0));
  }
  return UnitScalar(1.0);
}

std::string_view to_string(TNorm kind) noexcept {
  switch (kind) {
    case TNorm::Min: return "min";
    case TNorm::Product: return "product";
    case TNorm::Lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

std::string_view to_string(TConorm kind) noexcept {
  switch (kind) {
    case TConorm::Max: return "max";
    case TConorm::ProbSum: return "probabilistic-sum";
    case TConorm::BoundedSum: return "bounded-sum";
  }
  return "?";
}

namespace {

bool is_dual(TNorm t, TConorm s) {
  return (t == TNorm::Min && s == TConorm::Max) ||
         (t == TNorm::Product && s == TConorm::ProbSum) ||
         (t == TNorm::Lukasiewicz && s == TConorm::BoundedSum);
}

constexpr std::array<std::string_view, 3> kPairNames{"minmax", "prodsum", "lukasiewicz"};

}  // namespace

NormPair::NormPair(TNorm tnorm, TConorm tconorm) : tnorm_(tnorm), tconorm_(tconorm) {
  if (!is_dual(tnorm, tconorm)) {
    throw ConstraintError("t-norm '" + std::string(to_string(tnorm)) +
                          "' and t-conorm '" + std::string(to_string(tconorm)) +
                          "' are not a dual pair");
  }
}

NormPair NormPair::min_max() noexcept { return {TNorm::Min, TConorm::Max}; }
NormPair NormPair::product_probsum() noexcept { return {TNorm::Product, TConorm::ProbSum}; }
NormPair NormPair::lukasiewicz() noexcept { return {TNorm::Lukasiewicz, TConorm::BoundedSum}; }

NormPair NormPair::from_name(std::string_view name) {
  for (const auto& pair : builtin_norm_pairs()) {
    if (pair.name() == name) return pair;
  }
  throw LookupError("unknown norm pair '" + std::string(name) +
                    "' (expected minmax, prodsum or lukasiewicz)");
}

std::string_view NormPair::name() const noexcept {
  return kPairNames[static_cast<std::size_t>(tnorm_)];
}

std::span<const NormPair> builtin_norm_pairs() noexcept {
  static const std::array<NormPair, 3> pairs{NormPair::min_max(), NormPair::product_probsum(),
                                             NormPair::lukasiewicz()};
  return pairs;
}

IFValue ifv_meet(const NormPair& pair, IFValue v, IFValue w) {
  return IFValue(tnorm_apply(pair.tnorm(), UnitScalar(v.mu()), UnitScalar(w.mu())),
                 tconorm_apply(pair.tconorm(), UnitScalar(v.nu()), UnitScalar(w.nu())));
}

IFValue ifv_join(const NormPair& pair, IFValue v, IFValue w) {
  return IFValue(tconorm_apply(pair.tconorm(), UnitScalar(v.mu()), UnitScalar(w.mu())),
                 tnorm_apply(pair.tnorm(), UnitScalar(v.nu()), UnitScalar(w.nu())));
}

bool ifv_leq(IFValue v, IFValue w) noexcept {
  return v.mu() <= w.mu() + kCompareTolerance && v.nu() >= w.nu() - kCompareTolerance;
}

bool ifv_approx_equal(IFValue v, IFValue w, double tolerance) noexcept {
  return std::abs(v.mu() - w.mu()) <= tolerance && std::abs(v.nu() - w.nu()) <= tolerance;
}

std::string format_degree(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_string(IFValue value) {
  return "(" + format_degree(value.mu()) + ", " + format_degree(value.nu()) + ")";
}

}  // namespace ifss
