#include "ifss/relation.hpp"

#include "ifss/error.hpp"

namespace ifss {

std::string to_string(const ParamPair& pair) {
  return "(" + pair.first + ", " + pair.second + ")";
}

IFSoftRelation::IFSoftRelation(Universe universe, ParamSet left, ParamSet right,
                               Assignment assignment)
    : universe_(std::move(universe)),
      left_(std::move(left)),
      right_(std::move(right)),
      assignment_(std::move(assignment)) {
  for (const auto& [pair, set] : assignment_) {
    if (!left_.contains(pair.first) || !right_.contains(pair.second)) {
      throw DomainError("pair " + to_string(pair) + " is outside the parameter product");
    }
    if (!(set.universe() == universe_)) {
      throw UniverseMismatch("pair " + to_string(pair) + " maps to a set over a different universe");
    }
  }
}

std::set<ParamPair> IFSoftRelation::domain() const {
  std::set<ParamPair> out;
  for (const auto& entry : assignment_) out.insert(entry.first);
  return out;
}

const IFSet* IFSoftRelation::find(const ParamPair& pair) const {
  auto it = assignment_.find(pair);
  return it == assignment_.end() ? nullptr : &it->second;
}

const IFSet& IFSoftRelation::at(const ParamPair& pair) const {
  if (const IFSet* set = find(pair)) return *set;
  throw DomainError("pair " + to_string(pair) + " is not in the relation's domain");
}

IFSoftRelation cartesian_product(const NormPair& pair, const IFSoftSet& left,
                                 const IFSoftSet& right) {
  if (!(left.universe() == right.universe())) {
    throw UniverseMismatch("cartesian product of soft sets over different universes");
  }
  IFSoftRelation::Assignment out;
  for (const auto& [a, fa] : left.assignment()) {
    for (const auto& [b, gb] : right.assignment()) {
      out.emplace(ParamPair{a, b}, if_meet(pair, fa, gb));
    }
  }
  return IFSoftRelation(left.universe(), left.parameters(), right.parameters(), std::move(out));
}

IFSoftRelation make_relation(const IFSoftRelation& product, const std::set<ParamPair>& keep) {
  IFSoftRelation::Assignment out;
  for (const auto& p : keep) out.emplace(p, product.at(p));
  return IFSoftRelation(product.universe(), product.left_params(), product.right_params(),
                        std::move(out));
}

IFSoftRelation make_relation(const IFSoftRelation& product, IFSoftRelation::Assignment values) {
  for (const auto& [p, set] : values) {
    if (!if_subset(set, product.at(p))) {
      throw ConstraintError("value at " + to_string(p) +
                            " is not contained in the cartesian product");
    }
  }
  return IFSoftRelation(product.universe(), product.left_params(), product.right_params(),
                        std::move(values));
}

IFSoftRelation inverse(const IFSoftRelation& r) {
  IFSoftRelation::Assignment out;
  for (const auto& [p, set] : r.assignment()) out.emplace(ParamPair{p.second, p.first}, set);
  return IFSoftRelation(r.universe(), r.right_params(), r.left_params(), std::move(out));
}

IFSoftRelation compose(const NormPair& pair, const IFSoftRelation& r1, const IFSoftRelation& r2) {
  if (!(r1.universe() == r2.universe())) {
    throw UniverseMismatch("composition of relations over different universes");
  }
  if (r1.right_params() != r2.left_params()) {
    throw ParamMismatch("composition needs the first relation's right parameters to equal the "
                        "second relation's left parameters");
  }

  // r2 grouped by its first component so each (a, b) in r1 meets the
  // matching row directly.
  std::map<ParamId, std::vector<const std::pair<const ParamPair, IFSet>*>> rows;
  for (const auto& entry : r2.assignment()) rows[entry.first.first].push_back(&entry);

  IFSoftRelation::Assignment out;
  for (const auto& [ab, left_value] : r1.assignment()) {
    auto row = rows.find(ab.second);
    if (row == rows.end()) continue;
    for (const auto* bc : row->second) {
      ParamPair ac{ab.first, bc->first.second};
      IFSet term = if_meet(pair, left_value, bc->second);
      auto it = out.find(ac);
      if (it == out.end()) {
        out.emplace(std::move(ac), std::move(term));
      } else {
        it->second = if_join(pair, it->second, term);
      }
    }
  }
  return IFSoftRelation(r1.universe(), r1.left_params(), r2.right_params(), std::move(out));
}

IFSoftRelation power(const NormPair& pair, const IFSoftRelation& r, unsigned n) {
  if (n == 0) throw DomainError("relation power needs n >= 1");
  if (!r.is_square()) throw ParamMismatch("relation power needs a relation on one parameter set");
  IFSoftRelation acc = r;
  for (unsigned i = 1; i < n; ++i) acc = compose(pair, acc, r);
  return acc;
}

std::optional<std::string> relation_subset_violation(const IFSoftRelation& inner,
                                                     const IFSoftRelation& outer) {
  if (!(inner.universe() == outer.universe())) {
    throw UniverseMismatch("subset test between relations over different universes");
  }
  const auto elements = inner.universe().elements();
  for (const auto& [p, set] : inner.assignment()) {
    const IFSet* other = outer.find(p);
    if (other == nullptr) return "pair " + to_string(p) + " is missing from the outer relation";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (!ifv_leq(set[i], (*other)[i])) {
        return "at " + to_string(p) + ", element " + elements[i] + ": " + to_string(set[i]) +
               " is not <= " + to_string((*other)[i]);
      }
    }
  }
  return std::nullopt;
}

bool relation_subset(const IFSoftRelation& inner, const IFSoftRelation& outer) {
  return !relation_subset_violation(inner, outer).has_value();
}

std::optional<std::string> relation_difference(const IFSoftRelation& a, const IFSoftRelation& b,
                                               double tolerance) {
  if (!(a.universe() == b.universe())) return "universes differ";
  if (a.left_params() != b.left_params()) return "left parameter sets differ";
  if (a.right_params() != b.right_params()) return "right parameter sets differ";
  for (const auto& [p, set] : a.assignment()) {
    if (!b.contains(p)) return "pair " + to_string(p) + " only in the first relation";
  }
  for (const auto& [p, set] : b.assignment()) {
    if (!a.contains(p)) return "pair " + to_string(p) + " only in the second relation";
  }
  const auto elements = a.universe().elements();
  for (const auto& [p, set] : a.assignment()) {
    const IFSet& other = b.at(p);
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (!ifv_approx_equal(set[i], other[i], tolerance)) {
        return "at " + to_string(p) + ", element " + elements[i] + ": " + to_string(set[i]) +
               " != " + to_string(other[i]);
      }
    }
  }
  return std::nullopt;
}

bool relation_equal(const IFSoftRelation& a, const IFSoftRelation& b, double tolerance) {
  return !relation_difference(a, b, tolerance).has_value();
}

}  // namespace ifss
