#include "ifss/laws.hpp"

#include <array>
#include <functional>

#include "ifss/error.hpp"
#include "instance_gen.hpp"

namespace ifss {

namespace {

void require_square(const IFSoftRelation& r, std::string_view what) {
  if (!r.is_square()) {
    throw ParamMismatch(std::string(what) + " needs a relation on a single parameter set");
  }
}

PredicateResult fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

PredicateResult is_symmetric(const IFSoftRelation& r) {
  require_square(r, "symmetry");
  for (const auto& [p, set] : r.assignment()) {
    ParamPair swapped{p.second, p.first};
    const IFSet* mirror = r.find(swapped);
    if (mirror == nullptr) {
      return fail("pair " + to_string(p) + " is present but " + to_string(swapped) + " is not");
    }
    if (!if_approx_equal(set, *mirror)) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (!ifv_approx_equal(set[i], (*mirror)[i])) {
          return fail("R" + to_string(p) + " = " + to_string(set[i]) + " but R" +
                      to_string(swapped) + " = " + to_string((*mirror)[i]) + " at element " +
                      r.universe().elements()[i]);
        }
      }
    }
  }
  return {};
}

PredicateResult is_transitive(const NormPair& pair, const IFSoftRelation& r) {
  require_square(r, "transitivity");
  if (auto why = relation_subset_violation(compose(pair, r, r), r)) {
    return fail("R o R is not contained in R: " + *why);
  }
  return {};
}

PredicateResult is_reflexive(const IFSoftRelation& r) {
  require_square(r, "reflexivity");
  const auto elements = r.universe().elements();
  for (const auto& [p, set] : r.assignment()) {
    for (const ParamId* a : {&p.first, &p.second}) {
      const ParamPair diag{*a, *a};
      const IFSet* top = r.find(diag);
      if (top == nullptr) {
        return fail("pair " + to_string(p) + " is present but " + to_string(diag) + " is not");
      }
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (!ifv_leq(set[i], (*top)[i])) {
          return fail("R" + to_string(p) + " = " + to_string(set[i]) + " exceeds R" +
                      to_string(diag) + " = " + to_string((*top)[i]) + " at element " +
                      elements[i]);
        }
      }
    }
  }
  return {};
}

PredicateResult is_equivalence(const NormPair& pair, const IFSoftRelation& r) {
  if (auto s = is_symmetric(r); !s) return fail("not symmetric: " + *s.witness);
  if (auto t = is_transitive(pair, r); !t) return fail("not transitive: " + *t.witness);
  if (auto f = is_reflexive(r); !f) return fail("not reflexive: " + *f.witness);
  return {};
}

namespace {

constexpr std::array<LawId, 18> kLaws{
    LawId::UnionCommut,
    LawId::IntersectCommut,
    LawId::UnionAssoc,
    LawId::IntersectAssoc,
    LawId::DistribIntersectOverUnion,
    LawId::DistribUnionOverIntersect,
    LawId::InverseInvolution,
    LawId::InverseMonotone,
    LawId::InverseOfCompose,
    LawId::ComposeClosure,
    LawId::SymmetricIffInverseSymmetric,
    LawId::SymmetricIffEqualsInverse,
    LawId::ComposeSymmetricIffCommute,
    LawId::PowerSymmetric,
    LawId::TransitiveInverse,
    LawId::TransitiveSquare,
    LawId::ReflexiveInverse,
    LawId::SymTransImpliesRefl,
};

constexpr std::array<std::string_view, 18> kLawNames{
    "union-commut",
    "intersect-commut",
    "union-assoc",
    "intersect-assoc",
    "distrib-intersect-over-union",
    "distrib-union-over-intersect",
    "inverse-involution",
    "inverse-monotone",
    "inverse-of-compose",
    "compose-closure",
    "symmetric-iff-inverse-symmetric",
    "symmetric-iff-equals-inverse",
    "compose-symmetric-iff-commute",
    "power-symmetric",
    "transitive-inverse",
    "transitive-square",
    "reflexive-inverse",
    "sym-trans-implies-refl",
};

bool is_soft_set_law(LawId law) {
  return static_cast<std::size_t>(law) <= static_cast<std::size_t>(LawId::DistribUnionOverIntersect);
}

std::size_t law_arity(LawId law) {
  return (law == LawId::UnionCommut || law == LawId::IntersectCommut) ? 2 : 3;
}

}  // namespace

std::span<const LawId> all_laws() noexcept { return kLaws; }

std::string_view law_name(LawId law) noexcept {
  return kLawNames[static_cast<std::size_t>(law)];
}

LawId parse_law(std::string_view name) {
  for (std::size_t i = 0; i < kLawNames.size(); ++i) {
    if (kLawNames[i] == name) return kLaws[i];
  }
  throw LookupError("unknown law '" + std::string(name) + "'");
}

bool requires_idempotence(LawId law) noexcept {
  return law == LawId::ComposeClosure || law == LawId::SymTransImpliesRefl ||
         law == LawId::TransitiveSquare;
}

void SearchConfig::validate() const {
  if (max_universe == 0) throw DomainError("max_universe must be at least 1");
  if (max_params == 0) throw DomainError("max_params must be at least 1");
  if (!(grid_step > 0.0 && grid_step <= 1.0)) throw DomainError("grid_step must lie in (0, 1]");
  if (trials == 0) throw DomainError("trials must be at least 1");
  if (candidate_budget == 0) throw DomainError("candidate_budget must be at least 1");
}

namespace {

using detail::Rng;

std::optional<Witness> soft_law_violation(LawId law, const NormPair& pair, const IFSoftSet& x,
                                          const IFSoftSet& y, const IFSoftSet& z) {
  auto meet = [&](const IFSoftSet& a, const IFSoftSet& b) { return soft_intersect(pair, a, b); };
  auto join = [&](const IFSoftSet& a, const IFSoftSet& b) { return soft_union(pair, a, b); };

  std::string label;
  std::optional<std::string> diff;
  switch (law) {
    case LawId::UnionCommut:
      label = "X u Y != Y u X";
      diff = soft_difference(join(x, y), join(y, x));
      break;
    case LawId::IntersectCommut:
      label = "X n Y != Y n X";
      diff = soft_difference(meet(x, y), meet(y, x));
      break;
    case LawId::UnionAssoc:
      label = "X u (Y u Z) != (X u Y) u Z";
      diff = soft_difference(join(x, join(y, z)), join(join(x, y), z));
      break;
    case LawId::IntersectAssoc:
      label = "X n (Y n Z) != (X n Y) n Z";
      diff = soft_difference(meet(x, meet(y, z)), meet(meet(x, y), z));
      break;
    case LawId::DistribIntersectOverUnion:
      label = "X n (Y u Z) != (X n Y) u (X n Z)";
      diff = soft_difference(meet(x, join(y, z)), join(meet(x, y), meet(x, z)));
      break;
    case LawId::DistribUnionOverIntersect:
      label = "X u (Y n Z) != (X u Y) n (X u Z)";
      diff = soft_difference(join(x, meet(y, z)), meet(join(x, y), join(x, z)));
      break;
    default:
      return std::nullopt;
  }
  if (!diff) return std::nullopt;
  Witness w{label + ": " + *diff, {x, y}, {}};
  if (law_arity(law) == 3) w.soft_sets.push_back(z);
  return w;
}

struct RunResult {
  std::optional<Witness> witness;
  std::size_t trials = 0;
  std::size_t generated = 0;
};

/// Single-element universe, single shared parameter, every combination of
/// grid values in lexicographic order.
RunResult run_grid(LawId law, const NormPair& pair, const SearchConfig& config) {
  const Universe universe({"x"});
  std::vector<IFSoftSet> sets;
  for (const auto& v : detail::grid_values(config.grid_step)) {
    sets.emplace_back(universe, IFSoftSet::Assignment{{"e", IFSet::uniform(universe, v)}});
  }

  RunResult result;
  const bool ternary = law_arity(law) == 3;
  for (const auto& x : sets) {
    for (const auto& y : sets) {
      for (std::size_t k = 0; k < (ternary ? sets.size() : 1); ++k) {
        ++result.trials;
        ++result.generated;
        if (auto w = soft_law_violation(law, pair, x, y, sets[k])) {
          result.witness = std::move(w);
          return result;
        }
      }
    }
  }
  return result;
}

/// One random instance. `accepted` is false when a premise filter rejected
/// the candidate; otherwise `witness` holds the violation, if any.
struct Evaluation {
  bool accepted = true;
  std::optional<Witness> witness;
};

const Evaluation kPass{};
const Evaluation kRejected{false, std::nullopt};

Evaluation relation_witness(std::string violation, std::vector<IFSoftRelation> relations) {
  return {true, Witness{std::move(violation), {}, std::move(relations)}};
}

Evaluation evaluate_random(LawId law, const NormPair& pair, const SearchConfig& config, Rng& rng) {
  const Universe universe = detail::random_universe(rng, config.max_universe);
  const std::size_t p = config.max_params;
  auto params = [&](std::string_view prefix, std::size_t min_size) {
    return detail::random_params(rng, prefix, p, min_size, p);
  };

  if (is_soft_set_law(law)) {
    // A pool one larger than the maximum size lets the three parameter sets
    // overlap, nest, or be disjoint.
    auto soft = [&] {
      return detail::random_soft_set(rng, universe,
                                     detail::random_params(rng, "e", p + 1, 0, p));
    };
    IFSoftSet x = soft();
    IFSoftSet y = soft();
    IFSoftSet z = soft();
    return {true, soft_law_violation(law, pair, x, y, z)};
  }

  switch (law) {
    case LawId::InverseInvolution: {
      auto r = detail::random_relation(rng, pair, universe, params("a", 1), params("b", 1));
      if (auto d = relation_difference(inverse(inverse(r)), r, 0.0)) {
        return relation_witness("(R^-1)^-1 != R: " + *d, {r});
      }
      return kPass;
    }
    case LawId::InverseMonotone: {
      auto outer = detail::random_relation(rng, pair, universe, params("a", 1), params("b", 1));
      auto inner = detail::sub_relation(rng, outer);
      if (!relation_subset(inner, outer)) return kRejected;
      if (auto d = relation_subset_violation(inverse(inner), inverse(outer))) {
        return relation_witness("R1 <= R2 but R1^-1 is not <= R2^-1: " + *d, {inner, outer});
      }
      return kPass;
    }
    case LawId::InverseOfCompose: {
      const ParamSet a = params("a", 1);
      const ParamSet b = params("b", 1);
      const ParamSet c = params("c", 1);
      auto r1 = detail::random_relation(rng, pair, universe, a, b);
      auto r2 = detail::random_relation(rng, pair, universe, b, c);
      auto lhs = inverse(compose(pair, r1, r2));
      auto rhs = compose(pair, inverse(r2), inverse(r1));
      if (auto d = relation_difference(lhs, rhs)) {
        return relation_witness("(R1 o R2)^-1 != R2^-1 o R1^-1: " + *d, {r1, r2});
      }
      return kPass;
    }
    case LawId::ComposeClosure: {
      const IFSoftSet f = detail::random_soft_set(rng, universe, params("a", 1));
      const IFSoftSet g = detail::random_soft_set(rng, universe, params("b", 1));
      const IFSoftSet h = detail::random_soft_set(rng, universe, params("c", 1));
      auto r1 = cartesian_product(pair, f, g);
      auto r2 = cartesian_product(pair, g, h);
      if (rng.chance(0.5)) r1 = detail::sub_relation(rng, r1);
      if (rng.chance(0.5)) r2 = detail::sub_relation(rng, r2);
      if (auto d = relation_subset_violation(compose(pair, r1, r2), cartesian_product(pair, f, h))) {
        return {true, Witness{"R1 o R2 is not contained in F x H: " + *d, {f, g, h}, {r1, r2}}};
      }
      return kPass;
    }
    case LawId::SymmetricIffInverseSymmetric:
    case LawId::SymmetricIffEqualsInverse: {
      const ParamSet a = params("a", 1);
      auto r = detail::random_relation(rng, pair, universe, a, a);
      if (rng.chance(0.5)) r = detail::symmetrize(r);
      const bool symmetric = static_cast<bool>(is_symmetric(r));
      if (law == LawId::SymmetricIffInverseSymmetric) {
        const bool inverse_symmetric = static_cast<bool>(is_symmetric(inverse(r)));
        if (symmetric != inverse_symmetric) {
          return relation_witness(std::string("R symmetric = ") + (symmetric ? "true" : "false") +
                                      " but R^-1 symmetric = " +
                                      (inverse_symmetric ? "true" : "false"),
                                  {r});
        }
      } else {
        const bool equal = relation_equal(r, inverse(r));
        if (symmetric != equal) {
          return relation_witness(std::string("R symmetric = ") + (symmetric ? "true" : "false") +
                                      " but R = R^-1 is " + (equal ? "true" : "false"),
                                  {r});
        }
      }
      return kPass;
    }
    case LawId::ComposeSymmetricIffCommute: {
      const ParamSet a = params("a", 1);
      auto r1 = detail::symmetrize(detail::random_relation(rng, pair, universe, a, a));
      auto r2 = detail::symmetrize(detail::random_relation(rng, pair, universe, a, a));
      auto r12 = compose(pair, r1, r2);
      const bool symmetric = static_cast<bool>(is_symmetric(r12));
      const bool commute = relation_equal(r12, compose(pair, r2, r1));
      if (symmetric != commute) {
        return relation_witness(std::string("R1 o R2 symmetric = ") +
                                    (symmetric ? "true" : "false") + " but R1 o R2 = R2 o R1 is " +
                                    (commute ? "true" : "false"),
                                {r1, r2});
      }
      return kPass;
    }
    case LawId::PowerSymmetric: {
      const ParamSet a = params("a", 1);
      auto r = detail::symmetrize(detail::random_relation(rng, pair, universe, a, a));
      if (!is_symmetric(r)) return kRejected;
      for (unsigned n = 2; n <= 4; ++n) {
        if (auto s = is_symmetric(power(pair, r, n)); !s) {
          return relation_witness("R symmetric but R^" + std::to_string(n) +
                                      " is not: " + *s.witness,
                                  {r});
        }
      }
      return kPass;
    }
    case LawId::TransitiveInverse:
    case LawId::TransitiveSquare: {
      const ParamSet a = params("a", 1);
      auto r = rng.chance(0.7) ? detail::transitive_candidate(rng, pair, universe, a)
                               : detail::random_relation(rng, pair, universe, a, a);
      if (!is_transitive(pair, r)) return kRejected;
      if (law == LawId::TransitiveInverse) {
        if (auto t = is_transitive(pair, inverse(r)); !t) {
          return relation_witness("R transitive but R^-1 is not: " + *t.witness, {r});
        }
      } else if (auto t = is_transitive(pair, compose(pair, r, r)); !t) {
        return relation_witness("R transitive but R o R is not: " + *t.witness, {r});
      }
      return kPass;
    }
    case LawId::ReflexiveInverse: {
      const ParamSet a = params("a", 1);
      auto r = rng.chance(0.7) ? detail::reflexive_candidate(rng, pair, universe, a)
                               : detail::random_relation(rng, pair, universe, a, a);
      if (!is_reflexive(r)) return kRejected;
      if (auto f = is_reflexive(inverse(r)); !f) {
        return relation_witness("R reflexive but R^-1 is not: " + *f.witness, {r});
      }
      return kPass;
    }
    case LawId::SymTransImpliesRefl: {
      const ParamSet a = params("a", 1);
      auto r = rng.chance(0.7)
                   ? detail::equivalence_candidate(rng, pair, universe, a)
                   : detail::symmetrize(detail::random_relation(rng, pair, universe, a, a));
      // The premise must be exercised by at least one off-diagonal path.
      bool off_diagonal = false;
      for (const auto& [q, set] : r.assignment()) off_diagonal |= q.first != q.second;
      if (!off_diagonal || !is_symmetric(r) || !is_transitive(pair, r)) return kRejected;
      if (auto f = is_reflexive(r); !f) {
        return relation_witness("R symmetric and transitive but not reflexive: " + *f.witness,
                                {r});
      }
      return kPass;
    }
    default:
      return kPass;
  }
}

RunResult run_random(LawId law, const NormPair& pair, const SearchConfig& config) {
  // Distinct but reproducible streams per (seed, law, norm pair).
  const std::uint64_t stream = config.seed * 0x9E3779B97F4A7C15ULL +
                               static_cast<std::uint64_t>(law) * 131 +
                               static_cast<std::uint64_t>(pair.tnorm());
  Rng rng(stream);
  RunResult result;
  const std::size_t budget = config.trials * config.candidate_budget;
  while (result.trials < config.trials && result.generated < budget) {
    ++result.generated;
    Evaluation e = evaluate_random(law, pair, config, rng);
    if (!e.accepted) continue;
    ++result.trials;
    if (e.witness) {
      result.witness = std::move(e.witness);
      return result;
    }
  }
  return result;
}

}  // namespace

LawVerdict check_law(LawId law, const NormPair& pair, const SearchConfig& config) {
  config.validate();
  LawVerdict verdict{.law = law, .norm_pair = pair};
  if (requires_idempotence(law) && !pair.idempotent()) {
    verdict.checked = false;
    verdict.restriction = "law '" + std::string(law_name(law)) +
                          "' relies on idempotent norms (a*a = a, a<>a = a); not checked under " +
                          std::string(pair.name());
    return verdict;
  }
  if (requires_idempotence(law)) verdict.restriction = "checked under idempotent norms only";

  RunResult total;
  if (is_soft_set_law(law)) total = run_grid(law, pair, config);
  if (!total.witness) {
    RunResult random = run_random(law, pair, config);
    total.witness = std::move(random.witness);
    total.trials += random.trials;
    total.generated += random.generated;
  }
  verdict.holds = !total.witness.has_value();
  verdict.witness = std::move(total.witness);
  verdict.trials = total.trials;
  verdict.generated = total.generated;
  return verdict;
}

std::optional<Witness> search_counterexample(LawId law, const NormPair& pair,
                                             const SearchConfig& config) {
  config.validate();
  if (is_soft_set_law(law)) return run_grid(law, pair, config).witness;
  return run_random(law, pair, config).witness;
}

}  // namespace ifss
