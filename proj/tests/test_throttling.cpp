#include <doctest.h>

#include "oracles.hpp"
#include "throttle/families.hpp"
#include "throttle/throttling.hpp"

using namespace throttle;

namespace {

oracle::Rule to_oracle(RuleKind rule) {
  switch (rule) {
    case RuleKind::StandardZF: return oracle::Rule::Standard;
    case RuleKind::PSDZF: return oracle::Rule::Psd;
    case RuleKind::PowerDomination: return oracle::Rule::Power;
  }
  return oracle::Rule::Standard;
}

}  // namespace

TEST_SUITE("throttling") {
  TEST_CASE("kind names") {
    CHECK(parse_kind("sum") == ThrottlingKind::Sum);
    CHECK(parse_kind("prodx") == ThrottlingKind::ProductInitialCost);
    CHECK(parse_kind("prodstar") == ThrottlingKind::ProductNoInitialCost);
    for (ThrottlingKind k : kAllKinds) CHECK(parse_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_kind("prod"), std::invalid_argument);
    CHECK(combine(ThrottlingKind::Sum, 3, 2) == 5);
    CHECK(combine(ThrottlingKind::ProductInitialCost, 3, 2) == 9);
    CHECK(combine(ThrottlingKind::ProductNoInitialCost, 3, 2) == 6);
  }

  TEST_CASE("agreement with exhaustive search") {
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : graphs_up_to_isomorphism(n))
        for (RuleKind rule : kAllRules)
          for (int kind = 0; kind < 3; ++kind) {
            if (kind == 2 && !g.has_edge()) continue;
            const ThrottlingResult r = throttle::throttle(rule, kAllKinds[kind], g);
            const auto expected = oracle::throttling(to_oracle(rule), kind, g);
            REQUIRE(expected.has_value());
            CHECK(r.value == *expected);
            CHECK(throttle_set(rule, kAllKinds[kind], g, r.witness) == r.value);
          }
  }

  TEST_CASE("no-initial-cost kind needs an edge") {
    CHECK_THROWS_AS(throttle::throttle(RuleKind::PowerDomination, ThrottlingKind::ProductNoInitialCost, empty(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        throttle_set(RuleKind::StandardZF, ThrottlingKind::ProductNoInitialCost, path(3), VertexSet::full(3)),
        std::invalid_argument);
  }

  TEST_CASE("per-size table") {
    const ThrottlingResult r = throttle::throttle(RuleKind::StandardZF, ThrottlingKind::Sum, complete(5), true);
    REQUIRE(r.per_k.size() == 5);
    for (int k = 1; k <= 3; ++k) CHECK_FALSE(r.per_k[k - 1].has_value());
    CHECK(r.per_k[3] == ThrottleValue(5));
    CHECK(r.per_k[4] == ThrottleValue(5));
    CHECK(r.value == 5);
    CHECK(r.witness.size() == 4);
    CHECK(throttle_k(RuleKind::StandardZF, ThrottlingKind::Sum, complete(5), 4).pt == PropagationTime(1));
  }

  TEST_CASE("witness is the first optimum in size then colex order") {
    const ThrottlingResult r = throttle::throttle(RuleKind::PowerDomination, ThrottlingKind::ProductInitialCost, path(5));
    CHECK(r.value == 3);
    CHECK(r.witness.to_string() == "{2}");
    CHECK(r.witness_pt == 2);
    const ThrottlingResult s = throttle::throttle(RuleKind::PowerDomination, ThrottlingKind::Sum, path(6));
    CHECK(s.value == 3);
    CHECK(s.witness.to_string() == "{1, 4}");
  }

  TEST_CASE("standard product throttling equals the order") {
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : graphs_up_to_isomorphism(n))
        CHECK(throttle::throttle(RuleKind::StandardZF, ThrottlingKind::ProductInitialCost, g).value == std::uint64_t(n));
  }

  TEST_CASE("k(G, p)") {
    CHECK(k_of_p(path(5), 0).k == 5);
    CHECK(k_of_p(path(5), 4).k == 1);
    CHECK(k_of_p(path(5), 1).k == 3);
    CHECK_FALSE(k_of_p(star(5), 4).k.has_value());
    for (int n = 2; n <= 6; ++n)
      for (const Graph& g : enumerate_graphs(n, true))
        CHECK(std::uint64_t(th_star_z_via_identity(g)) ==
              throttle::throttle(RuleKind::StandardZF, ThrottlingKind::ProductNoInitialCost, g).value);
  }

  TEST_CASE("matched sums") {
    CHECK(is_matched_sum(cycle(4)).has_value());
    CHECK_FALSE(is_matched_sum(complete(4)).has_value());
    const auto w = is_matched_sum(fixture("ksum:3").graph);
    REQUIRE(w.has_value());
    CHECK(w->matching.size() == 3);
    CHECK_THROWS_AS(is_matched_sum(path(3)), std::invalid_argument);
  }
}
