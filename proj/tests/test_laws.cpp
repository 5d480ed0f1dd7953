#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifss/error.hpp"
#include "ifss/io.hpp"
#include "ifss/laws.hpp"

using namespace ifss;

namespace {

const NormPair kProd = NormPair::product_probsum();
const NormPair kMinMax = NormPair::min_max();

ParamSet params(std::initializer_list<const char*> names) {
  ParamSet out;
  for (const char* n : names) out.emplace(n);
  return out;
}

IFSet constant(const Universe& u, double mu, double nu) {
  return IFSet::uniform(u, make_ifvalue(mu, nu));
}

SearchConfig quick(std::uint64_t seed = 1) {
  SearchConfig c;
  c.trials = 200;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("is_symmetric examples") {
  const Universe u({"x"});
  const IFSoftRelation diag(u, params({"a", "b"}), params({"a", "b"}),
                            {{ParamPair{"a", "a"}, constant(u, 0.3, 0.3)}});
  CHECK(is_symmetric(diag));

  const IFSoftSet science(u, {{"b", constant(u, 0.7, 0.2)}, {"s", constant(u, 0.4, 0.5)}});
  const auto product = cartesian_product(kProd, science, science);
  CHECK(is_symmetric(make_relation(product, std::set<ParamPair>{{"b", "b"}, {"b", "s"}, {"s", "s"}, {"s", "b"}})));

  const IFSoftRelation one_way(u, params({"a", "b"}), params({"a", "b"}),
                               {{ParamPair{"a", "b"}, constant(u, 0.3, 0.3)}});
  const auto result = is_symmetric(one_way);
  CHECK_FALSE(result.holds);
  CHECK(result.witness.has_value());

  const IFSoftRelation rect(u, params({"a"}), params({"b"}), {});
  CHECK_THROWS_AS(is_symmetric(rect), ParamMismatch);
}

TEST_CASE("is_transitive examples") {
  const Universe u({"x"});
  const ParamSet abc = params({"a", "b", "c"});
  CHECK(is_transitive(kMinMax, IFSoftRelation(u, abc, abc, {})));

  const IFSoftRelation self(u, abc, abc, {{ParamPair{"a", "a"}, constant(u, 0.4, 0.35)}});
  CHECK(is_transitive(kMinMax, self));

  const IFSoftRelation chain(u, abc, abc,
                             {{ParamPair{"a", "b"}, constant(u, 0.5, 0.3)},
                              {ParamPair{"b", "c"}, constant(u, 0.6, 0.2)}});
  const auto result = is_transitive(kMinMax, chain);
  CHECK_FALSE(result.holds);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->find("(a, c)") != std::string::npos);

  // Under Product/ProbSum a single self-loop already shrinks: v*v <= v.
  CHECK(is_transitive(kProd, self));
  const IFSoftRelation rect(u, params({"a"}), params({"b"}), {});
  CHECK_THROWS_AS(is_transitive(kMinMax, rect), ParamMismatch);
}

TEST_CASE("is_reflexive examples") {
  const Universe u({"x", "y"});
  const ParamSet ab = params({"a", "b"});
  CHECK(is_reflexive(IFSoftRelation(u, ab, ab,
                                    {{ParamPair{"a", "a"}, constant(u, 0.2, 0.7)},
                                     {ParamPair{"b", "b"}, constant(u, 0.9, 0.0)}})));

  CHECK(is_reflexive(IFSoftRelation(u, ab, ab,
                                    {{ParamPair{"a", "a"}, IFSet::uniform(u, IFValue::top())},
                                     {ParamPair{"b", "b"}, IFSet::uniform(u, IFValue::top())},
                                     {ParamPair{"a", "b"}, constant(u, 0.8, 0.1)}})));

  const auto low_diag = is_reflexive(IFSoftRelation(u, ab, ab,
                                                    {{ParamPair{"a", "a"}, constant(u, 0.5, 0.4)},
                                                     {ParamPair{"b", "b"}, IFSet::uniform(u, IFValue::top())},
                                                     {ParamPair{"a", "b"}, constant(u, 0.9, 0.05)}}));
  CHECK_FALSE(low_diag.holds);
  CHECK(low_diag.witness.has_value());

  // A parameter used off the diagonal needs its own diagonal pair.
  CHECK_FALSE(is_reflexive(IFSoftRelation(u, ab, ab,
                                          {{ParamPair{"a", "a"}, IFSet::uniform(u, IFValue::top())},
                                           {ParamPair{"a", "b"}, constant(u, 0.1, 0.1)}})));
}

TEST_CASE("is_equivalence examples") {
  const Universe u({"x"});
  const ParamSet ab = params({"a", "b"});
  CHECK(is_equivalence(kMinMax, IFSoftRelation(u, ab, ab, {})));
  CHECK(is_equivalence(kMinMax, IFSoftRelation(u, ab, ab,
                                               {{ParamPair{"a", "a"}, constant(u, 0.5, 0.5)},
                                                {ParamPair{"b", "b"}, constant(u, 0.5, 0.5)}})));
  CHECK_FALSE(is_equivalence(kMinMax, IFSoftRelation(u, ab, ab,
                                                     {{ParamPair{"a", "a"}, constant(u, 0.5, 0.5)},
                                                      {ParamPair{"b", "b"}, constant(u, 0.5, 0.5)},
                                                      {ParamPair{"a", "b"}, constant(u, 0.5, 0.5)}})));
}

TEST_CASE("law identifiers round-trip") {
  CHECK(all_laws().size() == 18u);
  for (LawId law : all_laws()) CHECK(parse_law(law_name(law)) == law);
  CHECK(law_name(LawId::DistribIntersectOverUnion) == "distrib-intersect-over-union");
  CHECK_THROWS_AS(parse_law("no-such-law"), LookupError);
  CHECK(requires_idempotence(LawId::ComposeClosure));
  CHECK(requires_idempotence(LawId::TransitiveSquare));
  CHECK(requires_idempotence(LawId::SymTransImpliesRefl));
  CHECK_FALSE(requires_idempotence(LawId::TransitiveInverse));
}

TEST_CASE("SearchConfig validation") {
  SearchConfig c;
  CHECK_NOTHROW(c.validate());
  c.grid_step = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = SearchConfig{};
  c.max_universe = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("distributivity holds under Min/Max and fails under Product/ProbSum") {
  SearchConfig grid;
  grid.trials = 200;
  const auto ok = check_law(LawId::DistribIntersectOverUnion, kMinMax, grid);
  CHECK(ok.holds);
  CHECK(ok.checked);
  CHECK(ok.trials > 0u);
  CHECK_FALSE(ok.witness.has_value());

  SearchConfig fine = grid;
  fine.grid_step = 0.1;
  const auto bad = check_law(LawId::DistribIntersectOverUnion, kProd, fine);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->soft_sets.size() == 3u);
  CHECK_FALSE(bad.witness->violation.empty());
}

TEST_CASE("search_counterexample examples") {
  SearchConfig fine;
  fine.grid_step = 0.1;
  CHECK(search_counterexample(LawId::DistribUnionOverIntersect, kProd, fine).has_value());
  CHECK_FALSE(search_counterexample(LawId::UnionCommut, kProd, fine).has_value());
  CHECK_FALSE(search_counterexample(LawId::DistribIntersectOverUnion, kMinMax, fine).has_value());
}

TEST_CASE("the reported witness actually violates the law") {
  SearchConfig fine;
  fine.grid_step = 0.1;
  const auto w = search_counterexample(LawId::DistribIntersectOverUnion, kProd, fine);
  REQUIRE(w.has_value());
  REQUIRE(w->soft_sets.size() == 3u);
  const auto& [x, y, z] = std::tie(w->soft_sets[0], w->soft_sets[1], w->soft_sets[2]);
  const auto lhs = soft_intersect(kProd, x, soft_union(kProd, y, z));
  const auto rhs = soft_union(kProd, soft_intersect(kProd, x, y), soft_intersect(kProd, x, z));
  CHECK_FALSE(soft_equal(lhs, rhs));
}

TEST_CASE("involution holds under every pair") {
  for (const auto& pair : builtin_norm_pairs()) {
    const auto v = check_law(LawId::InverseInvolution, pair, quick());
    CHECK(v.holds);
    CHECK(v.trials == 200u);
  }
}

TEST_CASE("every law holds under Min/Max") {
  for (LawId law : all_laws()) {
    CAPTURE(law_name(law));
    const auto v = check_law(law, kMinMax, quick(3));
    CHECK(v.holds);
    CHECK(v.checked);
    CHECK(v.trials >= 100u);
    CHECK(v.generated >= v.trials);
  }
}

TEST_CASE("idempotence-dependent laws are not evaluated under other pairs") {
  for (LawId law : {LawId::ComposeClosure, LawId::TransitiveSquare, LawId::SymTransImpliesRefl}) {
    for (const auto& pair : {kProd, NormPair::lukasiewicz()}) {
      const auto v = check_law(law, pair, quick());
      CHECK_FALSE(v.checked);
      CHECK(v.holds);
      CHECK(v.restriction.has_value());
      CHECK(v.trials == 0u);
    }
  }
  const auto minmax = check_law(LawId::TransitiveSquare, kMinMax, quick());
  CHECK(minmax.checked);
  CHECK(minmax.restriction.has_value());
  CHECK_FALSE(check_law(LawId::TransitiveInverse, kMinMax, quick()).restriction.has_value());
}

TEST_CASE("powers of symmetric relations lose symmetry without distributivity") {
  const auto v = check_law(LawId::PowerSymmetric, kProd, SearchConfig{});
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness->relations.size() == 1u);
  CHECK(is_symmetric(v.witness->relations[0]));
}

TEST_CASE("verdicts are reproducible for a seed") {
  for (LawId law : {LawId::UnionAssoc, LawId::InverseOfCompose, LawId::SymTransImpliesRefl,
                    LawId::PowerSymmetric}) {
    for (const auto& pair : builtin_norm_pairs()) {
      const auto a = serialize_verdict(check_law(law, pair, quick(42)));
      const auto b = serialize_verdict(check_law(law, pair, quick(42)));
      CHECK(a == b);
    }
  }
  const auto a = serialize_verdict(check_law(LawId::InverseOfCompose, kProd, quick(1)));
  const auto b = serialize_verdict(check_law(LawId::InverseOfCompose, kProd, quick(2)));
  CHECK(a == b);  // same outcome and counts; only the instances differ
}
