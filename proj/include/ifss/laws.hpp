#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifss/relation.hpp"

namespace ifss {

/// Outcome of a relation predicate. `witness` explains the first failure.
struct PredicateResult {
  bool holds = true;
  std::optional<std::string> witness;

  explicit operator bool() const noexcept { return holds; }
};

// Predicates on relations over one parameter set. Each throws ParamMismatch
// when the relation is not square.

/// Domain closed under swap and R(a, b) = R(b, a).
PredicateResult is_symmetric(const IFSoftRelation& r);
/// R o R is a sub-relation of R; a composed pair outside R's domain fails.
PredicateResult is_transitive(const NormPair& pair, const IFSoftRelation& r);
/// Every parameter in the domain has its diagonal pair, and each R(a, b)
/// is dominated by both R(a, a) and R(b, b).
PredicateResult is_reflexive(const IFSoftRelation& r);
PredicateResult is_equivalence(const NormPair& pair, const IFSoftRelation& r);

enum class LawId {
  UnionCommut,
  IntersectCommut,
  UnionAssoc,
  IntersectAssoc,
  DistribIntersectOverUnion,
  DistribUnionOverIntersect,
  InverseInvolution,
  InverseMonotone,
  InverseOfCompose,
  ComposeClosure,
  SymmetricIffInverseSymmetric,
  SymmetricIffEqualsInverse,
  ComposeSymmetricIffCommute,
  PowerSymmetric,
  TransitiveInverse,
  TransitiveSquare,
  ReflexiveInverse,
  SymTransImpliesRefl,
};

std::span<const LawId> all_laws() noexcept;
/// Stable kebab-case identifier, e.g. "distrib-intersect-over-union".
std::string_view law_name(LawId law) noexcept;
/// Throws LookupError for an unknown identifier.
LawId parse_law(std::string_view name);
/// Laws whose proofs need a*a = a and a<>a = a.
bool requires_idempotence(LawId law) noexcept;

struct SearchConfig {
  std::size_t max_universe = 4;
  std::size_t max_params = 3;
  /// Spacing of the exhaustive (mu, nu) grid used by the soft-set laws.
  double grid_step = 0.25;
  /// Random instances that must pass the law's premise.
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  /// Filtered laws give up after trials * candidate_budget candidates.
  std::size_t candidate_budget = 50;

  /// Throws DomainError for out-of-range settings.
  void validate() const;
};

/// A concrete violating instance.
struct Witness {
  /// The failed comparison, in words.
  std::string violation;
  std::vector<IFSoftSet> soft_sets;
  std::vector<IFSoftRelation> relations;
};

struct LawVerdict {
  LawId law;
  NormPair norm_pair;
  /// False iff `witness` is present.
  bool holds = true;
  /// False when the law was skipped because it needs idempotent norms.
  bool checked = true;
  std::optional<std::string> restriction{};
  std::optional<Witness> witness{};
  /// Instances on which the law was evaluated.
  std::size_t trials = 0;
  /// Candidates generated, including those rejected by a premise filter.
  std::size_t generated = 0;
};

/// Evaluates a law deterministically for the given seed. Soft-set laws run
/// the exhaustive grid and then `trials` random instances; relation laws run
/// random (and, for implications, premise-filtered) instances. Laws needing
/// idempotence are not evaluated under other pairs; the verdict then carries
/// checked = false and a restriction note.
LawVerdict check_law(LawId law, const NormPair& pair, const SearchConfig& config);

/// First violating instance, in canonical grid order for soft-set laws and
/// in generation order for relation laws. Runs regardless of idempotence.
std::optional<Witness> search_counterexample(LawId law, const NormPair& pair,
                                             const SearchConfig& config);

}  // namespace ifss
