#include <doctest.h>

#include "oracles.hpp"
#include "throttle/families.hpp"
#include "throttle/forcing.hpp"

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

TEST_SUITE("forcing") {
  TEST_CASE("rule names") {
    CHECK(parse_rule("zf") == RuleKind::StandardZF);
    CHECK(parse_rule("psd") == RuleKind::PSDZF);
    CHECK(parse_rule("pd") == RuleKind::PowerDomination);
    for (RuleKind r : kAllRules) CHECK(parse_rule(to_string(r)) == r);
    CHECK_THROWS_AS(parse_rule("zz"), std::invalid_argument);
  }

  TEST_CASE("propagation time type") {
    CHECK(PropagationTime(3).value() == 3);
    CHECK_FALSE(PropagationTime::infinity().is_finite());
    CHECK_THROWS_AS(PropagationTime::infinity().value(), std::logic_error);
    CHECK(PropagationTime(2) < PropagationTime::infinity());
  }

  TEST_CASE("agreement with the naive simulator") {
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : graphs_up_to_isomorphism(n))
        for (Mask b = 0; b <= full_mask(n); ++b)
          for (RuleKind rule : kAllRules) {
            const auto expected = oracle::propagation_time(to_oracle(rule), g, b);
            const PropagationTime got = propagation_time(rule, g, b);
            REQUIRE(got.is_finite() == expected.has_value());
            if (expected) CHECK(got.value() == *expected);
          }
  }

  TEST_CASE("empty set and full set") {
    const Graph g = path(4);
    for (RuleKind rule : kAllRules) {
      CHECK(propagation_time(rule, g, VertexSet::full(4)) == PropagationTime(0));
      CHECK_FALSE(propagation_time(rule, g, VertexSet(4)).is_finite());
    }
  }

  TEST_CASE("traces") {
    const PropagationTrace t = propagate(RuleKind::StandardZF, path(5), VertexSet(5, {0}));
    CHECK(t.completed);
    CHECK(t.time() == PropagationTime(4));
    REQUIRE(t.cumulative.size() == 5);
    CHECK(t.fills[0].to_string() == "{1}");
    CHECK(t.final_set().is_full());
    const PropagationTrace s = propagate(RuleKind::StandardZF, star(4), VertexSet(4, {1}));
    CHECK_FALSE(s.completed);
    CHECK_FALSE(s.time().is_finite());
  }

  TEST_CASE("psd splits into components") {
    // Center of a star: every leaf is its own component after removing it.
    CHECK(propagation_time(RuleKind::PSDZF, star(6), VertexSet(6, {0})) == PropagationTime(1));
    CHECK_FALSE(propagation_time(RuleKind::StandardZF, star(6), VertexSet(6, {0})).is_finite());
  }

  TEST_CASE("power domination first step") {
    CHECK(propagation_time(RuleKind::PowerDomination, star(6), VertexSet(6, {0})) == PropagationTime(1));
    CHECK(propagation_time(RuleKind::PowerDomination, path(6), VertexSet(6, {0})) == PropagationTime(5));
    CHECK(step(RuleKind::PowerDomination, path(6), VertexSet(6, {2}), 1).to_string() == "{1, 3}");
  }

  TEST_CASE("twin graph stalls from its centre") {
    const NamedGraph g = fixture("fig4_twin");
    const VertexSet c(g.graph.order(), {g.vertex("c")});
    const VertexSet after = c | step(RuleKind::PowerDomination, g.graph, c, 1);
    CHECK(step(RuleKind::PowerDomination, g.graph, after, 2).empty());
    CHECK_FALSE(is_forcing_set(RuleKind::PowerDomination, g.graph, c));
  }

  TEST_CASE("parameters") {
    CHECK(parameter_number(RuleKind::StandardZF, path(7)).value == 1);
    CHECK(parameter_number(RuleKind::StandardZF, complete(5)).value == 4);
    CHECK(parameter_number(RuleKind::PSDZF, star(7)).value == 1);
    CHECK(parameter_number(RuleKind::StandardZF, star(7)).value == 5);
    CHECK(parameter_number(RuleKind::PowerDomination, cycle(9)).value == 1);
    CHECK(parameter_number(RuleKind::StandardZF, path(7)).witness.to_string() == "{0}");
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : graphs_up_to_isomorphism(n)) {
        const int z = parameter_number(RuleKind::StandardZF, g).value;
        const int zp = parameter_number(RuleKind::PSDZF, g).value;
        const int gp = parameter_number(RuleKind::PowerDomination, g).value;
        CHECK(zp <= z);
        CHECK(gp <= z);
      }
  }

  TEST_CASE("pt_k") {
    CHECK(pt_k(RuleKind::StandardZF, path(7), 1).time == PropagationTime(6));
    CHECK(pt_k(RuleKind::StandardZF, path(7), 2).time == PropagationTime(3));
    CHECK_FALSE(pt_k(RuleKind::StandardZF, star(5), 1).witness.has_value());
    CHECK(graph_propagation_time(RuleKind::StandardZF, path(7)).time == PropagationTime(6));
  }

  TEST_CASE("minimal forcing sets") {
    const auto sets = minimal_forcing_sets(RuleKind::StandardZF, path(3));
    REQUIRE(sets.size() == 2);
    CHECK(sets[0] == bit(0));
    CHECK(sets[1] == bit(2));
  }
}
