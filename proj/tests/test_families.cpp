#include <doctest.h>

#include "oracles.hpp"
#include "throttle/families.hpp"
#include "throttle/suites.hpp"

using namespace throttle;

TEST_SUITE("families") {
  TEST_CASE("generators") {
    CHECK(path(5).size() == 4);
    CHECK(cycle(5).size() == 5);
    CHECK(complete(5).size() == 10);
    CHECK(star(5).degree(0) == 4);
    CHECK(empty(3).size() == 0);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK(small_graph("K3") == complete(3));
    CHECK(small_graph("S4") == star(4));
    CHECK_THROWS_AS(small_graph("Q3"), std::invalid_argument);
  }

  TEST_CASE("spiders") {
    const NamedGraph s = spider({2, 2, 1, 1});
    CHECK(s.graph.order() == 7);
    CHECK(s.graph.degree(s.vertex("c")) == 4);
    CHECK_THROWS_AS(spider({1, 1}), std::invalid_argument);
  }

  TEST_CASE("corona and matched sum") {
    const Graph c = corona(path(3), 2);
    CHECK(c.order() == 9);
    CHECK(c.adjacent(0, 3));
    CHECK(c.adjacent(0, 4));
    CHECK(c.adjacent(2, 8));
    CHECK(oracle::isomorphic(matched_sum(complete(2), complete(2), {{0, 0}, {1, 1}}), cycle(4)));
  }

  TEST_CASE("book graphs") {
    const NamedGraph b = book(3);
    CHECK(b.graph.order() == 8);
    CHECK(b.graph.size() == 10);
    CHECK(b.edge("spine") == Edge(b.vertex("u"), b.vertex("v")));
  }

  TEST_CASE("six-sevenths family") {
    for (const char* h : {"K2", "P4", "C4", "C6"}) {
      const NamedGraph f = family_6n7(small_graph(h));
      CHECK(f.graph.order() % 7 == 0);
      CHECK(f.vertices.count("v1") == 1);
      CHECK(f.vertices.count("u1_3") == 1);
      CHECK(is_connected(f.graph));
    }
    CHECK(fixture("fig1").graph.order() == 28);
    CHECK_THROWS_AS(family_6n7(path(3)), std::invalid_argument);
  }

  TEST_CASE("figure fixtures") {
    CHECK(fixture("fig4_twin").vertices.count("x") == 1);
    CHECK(fixture("fig2_spider_plus_e").graph.order() == 19);
    CHECK(fixture("corona_tower:K2").graph.order() == 9);
    CHECK(fixture("star_plus_edge:6").graph.order() == 6);
    CHECK(fixture("ksum:3").graph.size() == 9);
    CHECK_THROWS_AS(fixture("no_such_graph"), std::invalid_argument);
    for (const std::string& name : fixture_names())
      if (name.find('<') == std::string::npos && name.find(':') == std::string::npos)
        CHECK_NOTHROW(fixture(name));
  }

  TEST_CASE("named transforms") {
    const NamedGraph b = book(3);
    const NamedGraph c = apply_transform(b, "/spine");
    CHECK(c.graph.order() == 7);
    CHECK(c.vertices.count("y") == 1);
    const NamedGraph s = apply_transform(b, "_spine");
    CHECK(s.graph.order() == 9);
    CHECK(s.vertices.count("z") == 1);
    CHECK(apply_transform(b, "-u").graph.order() == 7);
    CHECK(apply_transform(b, "-0,1").graph.size() == 9);
    CHECK(apply_transform(b, "").graph == b.graph);
    CHECK_THROWS(apply_transform(b, "-nobody"));
  }
}
