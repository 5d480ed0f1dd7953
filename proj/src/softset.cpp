#include "ifss/softset.hpp"

#include <algorithm>
#include <cmath>

#include "ifss/error.hpp"

namespace ifss {

Universe::Universe(std::vector<ElementId> elements) {
  if (elements.empty()) throw DomainError("universe must contain at least one element");
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end()) throw DomainError("duplicate universe element '" + *dup + "'");
  elements_ = std::make_shared<const std::vector<ElementId>>(std::move(elements));
}

std::optional<std::size_t> Universe::index_of(std::string_view element) const {
  auto it = std::lower_bound(elements_->begin(), elements_->end(), element);
  if (it == elements_->end() || *it != element) return std::nullopt;
  return static_cast<std::size_t>(it - elements_->begin());
}

IFSet::IFSet(Universe universe, std::vector<IFValue> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_.size()) {
    throw DomainError("IF set has " + std::to_string(values_.size()) +
                      " values for a universe of " + std::to_string(universe_.size()) +
                      " elements");
  }
}

IFSet IFSet::uniform(Universe universe, IFValue value) {
  std::vector<IFValue> values(universe.size(), value);
  return IFSet(std::move(universe), std::move(values));
}

const IFValue& IFSet::at(std::string_view element) const {
  auto i = universe_.index_of(element);
  if (!i) throw DomainError("element '" + std::string(element) + "' is not in the universe");
  return values_[*i];
}

namespace {

void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) throw UniverseMismatch("operands are defined over different universes");
}

template <typename Op>
IFSet pointwise(const IFSet& a, const IFSet& b, Op op) {
  require_same_universe(a.universe(), b.universe());
  std::vector<IFValue> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(op(a[i], b[i]));
  return IFSet(a.universe(), std::move(out));
}

}  // namespace

IFSet if_meet(const NormPair& pair, const IFSet& a, const IFSet& b) {
  return pointwise(a, b, [&](IFValue v, IFValue w) { return ifv_meet(pair, v, w); });
}

IFSet if_join(const NormPair& pair, const IFSet& a, const IFSet& b) {
  return pointwise(a, b, [&](IFValue v, IFValue w) { return ifv_join(pair, v, w); });
}

bool if_subset(const IFSet& a, const IFSet& b) {
  require_same_universe(a.universe(), b.universe());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ifv_leq(a[i], b[i])) return false;
  }
  return true;
}

bool if_approx_equal(const IFSet& a, const IFSet& b, double tolerance) {
  if (!(a.universe() == b.universe())) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ifv_approx_equal(a[i], b[i], tolerance)) return false;
  }
  return true;
}

IFSoftSet::IFSoftSet(Universe universe) : universe_(std::move(universe)) {}

IFSoftSet::IFSoftSet(Universe universe, Assignment assignment)
    : universe_(std::move(universe)), assignment_(std::move(assignment)) {
  for (const auto& [param, set] : assignment_) {
    if (!(set.universe() == universe_)) {
      throw UniverseMismatch("parameter '" + param + "' maps to a set over a different universe");
    }
  }
}

ParamSet IFSoftSet::parameters() const {
  ParamSet out;
  for (const auto& entry : assignment_) out.insert(entry.first);
  return out;
}

bool IFSoftSet::has_parameter(std::string_view param) const {
  return assignment_.find(param) != assignment_.end();
}

const IFSet& IFSoftSet::at(std::string_view param) const {
  auto it = assignment_.find(param);
  if (it == assignment_.end()) {
    throw DomainError("parameter '" + std::string(param) + "' is not in the soft set");
  }
  return it->second;
}

IFSoftSet soft_intersect(const NormPair& pair, const IFSoftSet& left, const IFSoftSet& right) {
  require_same_universe(left.universe(), right.universe());
  IFSoftSet::Assignment out;
  for (const auto& [param, set] : left.assignment()) {
    auto it = right.assignment().find(param);
    if (it != right.assignment().end()) out.emplace(param, if_meet(pair, set, it->second));
  }
  return IFSoftSet(left.universe(), std::move(out));
}

IFSoftSet soft_union(const NormPair& pair, const IFSoftSet& left, const IFSoftSet& right) {
  require_same_universe(left.universe(), right.universe());
  IFSoftSet::Assignment out = left.assignment();
  for (const auto& [param, set] : right.assignment()) {
    auto it = out.find(param);
    if (it == out.end()) {
      out.emplace(param, set);
    } else {
      it->second = if_join(pair, it->second, set);
    }
  }
  return IFSoftSet(left.universe(), std::move(out));
}

bool soft_subset(const IFSoftSet& left, const IFSoftSet& right) {
  require_same_universe(left.universe(), right.universe());
  for (const auto& [param, set] : left.assignment()) {
    auto it = right.assignment().find(param);
    if (it == right.assignment().end() || !if_subset(set, it->second)) return false;
  }
  return true;
}

std::optional<std::string> soft_difference(const IFSoftSet& left, const IFSoftSet& right,
                                           double tolerance) {
  if (!(left.universe() == right.universe())) return "universes differ";
  for (const auto& [param, set] : left.assignment()) {
    if (!right.has_parameter(param)) return "parameter '" + param + "' only on the left";
  }
  for (const auto& [param, set] : right.assignment()) {
    if (!left.has_parameter(param)) return "parameter '" + param + "' only on the right";
  }
  const auto elements = left.universe().elements();
  for (const auto& [param, set] : left.assignment()) {
    const IFSet& other = right.at(param);
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (!ifv_approx_equal(set[i], other[i], tolerance)) {
        return "at (" + param + ", " + elements[i] + "): " + to_string(set[i]) +
               " != " + to_string(other[i]);
      }
    }
  }
  return std::nullopt;
}

bool soft_equal(const IFSoftSet& left, const IFSoftSet& right, double tolerance) {
  return !soft_difference(left, right, tolerance).has_value();
}

IFSoftSet restrict_parameters(const IFSoftSet& s, const ParamSet& keep) {
  IFSoftSet::Assignment out;
  for (const auto& [param, set] : s.assignment()) {
    if (keep.contains(param)) out.emplace(param, set);
  }
  return IFSoftSet(s.universe(), std::move(out));
}

}  // namespace ifss
