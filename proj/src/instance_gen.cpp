#include "instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ifss::detail {

IFValue random_ifvalue(Rng& rng) {
  const double mu = rng.unit();
  const double nu = rng.unit() * (1.0 - mu);
  return make_ifvalue(mu, nu);
}

IFValue shrink_value(Rng& rng, IFValue v) {
  const double mu = v.mu() * rng.unit();
  const double nu = v.nu() + rng.unit() * std::max(0.0, 1.0 - mu - v.nu());
  return make_ifvalue(mu, std::min(nu, 1.0));
}

Universe random_universe(Rng& rng, std::size_t max_size) {
  const std::size_t n = 1 + rng.below(max_size);
  std::vector<ElementId> elements;
  for (std::size_t i = 1; i <= n; ++i) elements.push_back("x" + std::to_string(i));
  return Universe(std::move(elements));
}

ParamSet random_params(Rng& rng, std::string_view prefix, std::size_t pool, std::size_t min_size,
                       std::size_t max_size) {
  max_size = std::min(max_size, pool);
  const std::size_t n = min_size + rng.below(max_size - min_size + 1);
  std::vector<std::size_t> ids(pool);
  for (std::size_t i = 0; i < pool; ++i) ids[i] = i + 1;
  // Partial Fisher-Yates.
  ParamSet out;
  for (std::size_t i = 0; i < n; ++i) {
    std::swap(ids[i], ids[i + rng.below(pool - i)]);
    out.insert(std::string(prefix) + std::to_string(ids[i]));
  }
  return out;
}

IFSet random_ifset(Rng& rng, const Universe& universe) {
  std::vector<IFValue> values;
  values.reserve(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) values.push_back(random_ifvalue(rng));
  return IFSet(universe, std::move(values));
}

IFSoftSet random_soft_set(Rng& rng, const Universe& universe, const ParamSet& params) {
  IFSoftSet::Assignment assignment;
  for (const auto& p : params) assignment.emplace(p, random_ifset(rng, universe));
  return IFSoftSet(universe, std::move(assignment));
}

namespace {

IFSet shrink_set(Rng& rng, const IFSet& set) {
  std::vector<IFValue> values;
  values.reserve(set.size());
  for (const auto& v : set.values()) values.push_back(shrink_value(rng, v));
  return IFSet(set.universe(), std::move(values));
}

IFSoftRelation relation_from(const Universe& universe, const ParamSet& params,
                             IFSoftRelation::Assignment assignment) {
  return IFSoftRelation(universe, params, params, std::move(assignment));
}

}  // namespace

IFSoftRelation random_relation(Rng& rng, const NormPair& pair, const Universe& universe,
                               const ParamSet& left, const ParamSet& right) {
  const IFSoftRelation product = cartesian_product(pair, random_soft_set(rng, universe, left),
                                                   random_soft_set(rng, universe, right));
  IFSoftRelation::Assignment values;
  for (const auto& [p, set] : product.assignment()) {
    if (!rng.chance(0.7)) continue;
    values.emplace(p, rng.chance(0.3) ? shrink_set(rng, set) : set);
  }
  return make_relation(product, std::move(values));
}

IFSoftRelation sub_relation(Rng& rng, const IFSoftRelation& r) {
  IFSoftRelation::Assignment values;
  for (const auto& [p, set] : r.assignment()) {
    if (rng.chance(0.3)) continue;
    values.emplace(p, rng.chance(0.5) ? shrink_set(rng, set) : set);
  }
  return IFSoftRelation(r.universe(), r.left_params(), r.right_params(), std::move(values));
}

IFSoftRelation symmetrize(const IFSoftRelation& r) {
  IFSoftRelation::Assignment values;
  for (const auto& [p, set] : r.assignment()) {
    ParamPair swapped{p.second, p.first};
    if (p.first <= p.second || !r.contains(swapped)) {
      values.insert_or_assign(p, set);
      values.insert_or_assign(swapped, set);
    }
  }
  ParamSet params = r.left_params();
  params.insert(r.right_params().begin(), r.right_params().end());
  return relation_from(r.universe(), params, std::move(values));
}

IFSoftRelation transitive_candidate(Rng& rng, const NormPair& pair, const Universe& universe,
                                    const ParamSet& params) {
  const IFSoftSet f = random_soft_set(rng, universe, params);
  const std::vector<ParamId> ids(params.begin(), params.end());
  const std::size_t n = ids.size();

  std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) linked[i][j] = rng.chance(0.4);
  }
  // Warshall closure of the crisp pair set.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (linked[i][k] && linked[k][j]) linked[i][j] = true;
      }
    }
  }

  IFSoftRelation::Assignment values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (linked[i][j]) {
        values.emplace(ParamPair{ids[i], ids[j]}, if_meet(pair, f.at(ids[i]), f.at(ids[j])));
      }
    }
  }
  if (!values.empty() && rng.chance(0.3)) {
    auto it = std::next(values.begin(), static_cast<std::ptrdiff_t>(rng.below(values.size())));
    it->second = shrink_set(rng, it->second);
  }
  return relation_from(universe, params, std::move(values));
}

IFSoftRelation equivalence_candidate(Rng& rng, const NormPair& pair, const Universe& universe,
                                     const ParamSet& params) {
  const IFSoftSet f = random_soft_set(rng, universe, params);
  const std::vector<ParamId> ids(params.begin(), params.end());
  // Block index per parameter; -1 leaves the parameter out of the domain.
  std::vector<long> block(ids.size());
  for (auto& b : block) b = rng.chance(0.2) ? -1 : static_cast<long>(rng.below(ids.size()));

  IFSoftRelation::Assignment values;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (block[i] >= 0 && block[i] == block[j]) {
        values.emplace(ParamPair{ids[i], ids[j]}, if_meet(pair, f.at(ids[i]), f.at(ids[j])));
      }
    }
  }
  return relation_from(universe, params, std::move(values));
}

IFSoftRelation reflexive_candidate(Rng& rng, const NormPair& pair, const Universe& universe,
                                   const ParamSet& params) {
  const IFSoftRelation base = random_relation(rng, pair, universe, params, params);
  IFSoftRelation::Assignment values = base.assignment();

  ParamSet touched;
  for (const auto& [p, set] : values) {
    touched.insert(p.first);
    touched.insert(p.second);
  }
  for (const auto& a : touched) {
    // Pointwise upper bound of every value in a's row and column, then
    // raised a little further.
    std::vector<double> mu(universe.size(), 0.0);
    std::vector<double> nu(universe.size(), 1.0);
    for (const auto& [p, set] : values) {
      if (p.first != a && p.second != a) continue;
      for (std::size_t i = 0; i < set.size(); ++i) {
        mu[i] = std::max(mu[i], set[i].mu());
        nu[i] = std::min(nu[i], set[i].nu());
      }
    }
    std::vector<IFValue> diagonal;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const double raised = mu[i] + rng.unit() * std::max(0.0, 1.0 - mu[i] - nu[i]);
      diagonal.push_back(make_ifvalue(raised, nu[i] * rng.unit()));
    }
    values.insert_or_assign(ParamPair{a, a}, IFSet(universe, std::move(diagonal)));
  }
  return relation_from(universe, params, std::move(values));
}

std::vector<IFValue> grid_values(double step) {
  const auto n = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
  std::vector<IFValue> out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const double mu = std::min(1.0, static_cast<double>(i) * step);
      const double nu = std::min(1.0, static_cast<double>(j) * step);
      if (mu + nu <= 1.0 + kConstraintTolerance) out.push_back(make_ifvalue(mu, nu));
    }
  }
  return out;
}

}  // namespace ifss::detail
