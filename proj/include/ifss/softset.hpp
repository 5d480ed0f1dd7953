#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifss/algebra.hpp"

namespace ifss {

using ElementId = std::string;
using ParamId = std::string;
using ParamSet = std::set<ParamId, std::less<>>;

/// A finite, non-empty universe of element identifiers. Elements are kept
/// sorted, so two universes over the same identifiers compare equal and
/// serialize identically. Copies share storage.
class Universe {
 public:
  /// Throws DomainError if empty or if an identifier repeats.
  explicit Universe(std::vector<ElementId> elements);

  std::span<const ElementId> elements() const noexcept { return *elements_; }
  std::size_t size() const noexcept { return elements_->size(); }
  std::optional<std::size_t> index_of(std::string_view element) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.elements_ == b.elements_ || *a.elements_ == *b.elements_;
  }

 private:
  std::shared_ptr<const std::vector<ElementId>> elements_;
};

/// An intuitionistic fuzzy subset of a universe: one IFValue per element,
/// stored in universe order.
class IFSet {
 public:
  /// Throws DomainError unless there is exactly one value per element.
  IFSet(Universe universe, std::vector<IFValue> values);

  static IFSet uniform(Universe universe, IFValue value);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const IFValue> values() const noexcept { return values_; }
  const IFValue& operator[](std::size_t i) const noexcept { return values_[i]; }
  /// Throws DomainError for an element outside the universe.
  const IFValue& at(std::string_view element) const;

 private:
  Universe universe_;
  std::vector<IFValue> values_;
};

// Pointwise operations; all throw UniverseMismatch for different universes.
IFSet if_meet(const NormPair& pair, const IFSet& a, const IFSet& b);
IFSet if_join(const NormPair& pair, const IFSet& a, const IFSet& b);
bool if_subset(const IFSet& a, const IFSet& b);
bool if_approx_equal(const IFSet& a, const IFSet& b, double tolerance = kCompareTolerance);

/// The pair (F, A): each parameter of A mapped to an IFSet over one shared
/// universe. A may be empty.
class IFSoftSet {
 public:
  using Assignment = std::map<ParamId, IFSet, std::less<>>;

  explicit IFSoftSet(Universe universe);
  /// Throws UniverseMismatch if any IFSet lives on a different universe.
  IFSoftSet(Universe universe, Assignment assignment);

  const Universe& universe() const noexcept { return universe_; }
  const Assignment& assignment() const noexcept { return assignment_; }
  ParamSet parameters() const;
  std::size_t parameter_count() const noexcept { return assignment_.size(); }
  bool empty() const noexcept { return assignment_.empty(); }
  bool has_parameter(std::string_view param) const;
  /// Throws DomainError for a parameter outside A.
  const IFSet& at(std::string_view param) const;

 private:
  Universe universe_;
  Assignment assignment_;
};

/// Parameters A n B, pointwise meet.
IFSoftSet soft_intersect(const NormPair& pair, const IFSoftSet& left, const IFSoftSet& right);

/// Parameters A u B. Values outside A n B are copied from whichever side
/// owns the parameter; shared parameters are joined pointwise.
IFSoftSet soft_union(const NormPair& pair, const IFSoftSet& left, const IFSoftSet& right);

/// A subset of B and F(e) <= G(e) pointwise for every e in A.
bool soft_subset(const IFSoftSet& left, const IFSoftSet& right);

/// Same universe, same parameters, every degree within tolerance. Never throws.
bool soft_equal(const IFSoftSet& left, const IFSoftSet& right,
                double tolerance = kCompareTolerance);

/// Describes the first place where soft_equal fails, or nullopt if equal.
std::optional<std::string> soft_difference(const IFSoftSet& left, const IFSoftSet& right,
                                           double tolerance = kCompareTolerance);

/// Keeps only the parameters of `s` that are also in `keep`.
IFSoftSet restrict_parameters(const IFSoftSet& s, const ParamSet& keep);

}  // namespace ifss
