// Prints one PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "throttle/constructive.hpp"
#include "throttle/domination.hpp"
#include "throttle/families.hpp"
#include "throttle/forcing.hpp"
#include "throttle/graph_io.hpp"
#include "throttle/isomorphism.hpp"
#include "throttle/report.hpp"
#include "throttle/suites.hpp"
#include "throttle/throttling.hpp"

using namespace throttle;

namespace {

constexpr RuleKind PD = RuleKind::PowerDomination;
constexpr RuleKind PSD = RuleKind::PSDZF;
constexpr RuleKind ZF = RuleKind::StandardZF;
constexpr ThrottlingKind SUM = ThrottlingKind::Sum;
constexpr ThrottlingKind PRODX = ThrottlingKind::ProductInitialCost;
constexpr ThrottlingKind PRODSTAR = ThrottlingKind::ProductNoInitialCost;

/// Collects mismatches for one criterion.
class Check {
 public:
  void expect(const std::string& what, long long expected, long long computed) {
    ++count_;
    if (expected != computed) {
      std::ostringstream s;
      s << what << ": expected " << expected << ", got " << computed;
      failures_.push_back(s.str());
    }
  }
  void expect_true(const std::string& what, bool ok) { expect(what, 1, ok ? 1 : 0); }
  void suite(const std::string& name, int nmax, int samples = 200) {
    const Report r = run_property_suite(name, nmax, samples, worker_count());
    ++count_;
    if (!r.ok()) {
      std::ostringstream s;
      s << name << " n<=" << nmax << ": " << r.failed() << " of " << r.records.size() << " violated";
      for (const CaseRecord& c : r.records)
        if (!c.pass) {
          s << " (first " << c.id << " " << c.graph << ": " << c.witness << ")";
          break;
        }
      failures_.push_back(s.str());
    }
  }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

long long th(RuleKind rule, ThrottlingKind kind, const std::string& name, const std::string& transform = "") {
  return static_cast<long long>(throttle::throttle(rule, kind, apply_transform(fixture(name), transform).graph).value);
}

std::string label(RuleKind rule, ThrottlingKind kind, const std::string& name, const std::string& transform) {
  return std::string(to_string(kind)) + "/" + std::string(to_string(rule)) + " " + name + transform;
}

void value(Check& c, RuleKind rule, ThrottlingKind kind, const std::string& name, const std::string& transform,
           long long expected) {
  c.expect(label(rule, kind, name, transform), expected, th(rule, kind, name, transform));
}

void criterion_1(Check& c) {
  const std::vector<std::pair<std::string, int>> hs = {{"K2", 1}, {"P4", 2}, {"C4", 2}, {"C6", 3}};
  for (const auto& [h, k] : hs) {
    const std::string name = "family_6n7:" + h;
    c.expect(name + " order", 7 * k, fixture(name).graph.order());
    value(c, PD, PRODX, name, "", 6 * k);
  }
}

void criterion_2(Check& c) {
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const std::string at = " " + to_graph6(g);
      const auto v = throttle::throttle(PD, PRODX, g).value;
      c.expect_true("bound" + at, 7 * v <= 6 * static_cast<std::uint64_t>(n));
      const BoundCertificate cert = construct_pd_certificate(g, BoundTarget::ProductSixSevenths);
      c.expect_true("certificate" + at, cert.pt <= 2 && 7 * cert.value <= 6 * static_cast<std::uint64_t>(n));
    }
}

void criterion_3(Check& c) {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n, true)) {
      const std::string at = " " + to_graph6(g);
      const auto bound = static_cast<std::uint64_t>(n / 3 + 2);
      c.expect_true("bound" + at, throttle::throttle(PD, SUM, g).value <= bound);
      c.expect_true("certificate" + at, construct_pd_certificate(g, BoundTarget::SumThirdPlusTwo).value <= bound);
    }
  c.expect("ex11_57:K2 order", 7, fixture("ex11_57:K2").graph.order());
  value(c, PD, SUM, "ex11_57:K2", "", 4);
}

void criterion_4(Check& c) {
  const NamedGraph s = fixture("spider:2,2,1,1");
  c.expect("gamma spider:2,2,1,1", 3, domination_number(s.graph).value);
  value(c, PD, PRODX, "spider:2,2,1,1", "", 3);
  c.expect_true("converse fails", check_six_sevenths_equality(s.graph).converse_counterexample);
}

void criterion_5(Check& c) {
  for (RuleKind r : {PD, PSD}) {
    value(c, r, PRODSTAR, "fig2_spider_plus_e", "-e", 3);
    value(c, r, PRODX, "fig2_spider_plus_e", "-e", 4);
    value(c, r, PRODSTAR, "fig2_spider_plus_e", "", 6);
    value(c, r, PRODX, "fig2_spider_plus_e", "", 8);
  }
  c.expect_true("G-e is S(3,3,3,3,3,3)", are_isomorphic(apply_transform(fixture("fig2_spider_plus_e"), "-e").graph,
                                                      fixture("spider:3,3,3,3,3,3").graph));
}

void criterion_6(Check& c) {
  value(c, PD, PRODSTAR, "fig3_H1", "", 1);
  value(c, PD, PRODSTAR, "fig3_H1", "-e", 2);
  value(c, PD, PRODX, "fig3_H2", "", 3);
  value(c, PD, PRODX, "fig3_H2", "-e", 6);
  value(c, PSD, PRODSTAR, "fig3_H3", "", 3);
  value(c, PSD, PRODSTAR, "fig3_H3", "-e", 6);
  value(c, PSD, PRODX, "fig3_H3", "", 4);
  value(c, PSD, PRODX, "fig3_H3", "-e", 8);
}

void criterion_7(Check& c) {
  for (RuleKind r : {PD, PSD}) {
    value(c, r, PRODSTAR, "fig4_twin", "", 4);
    value(c, r, PRODX, "fig4_twin", "", 6);
    value(c, r, PRODSTAR, "fig4_twin", "-x", 2);
    value(c, r, PRODX, "fig4_twin", "-x", 3);
  }
}

void criterion_8(Check& c) {
  value(c, PD, PRODSTAR, "fig5_K2corona", "", 2);
  value(c, PSD, PRODSTAR, "fig5_K2corona", "", 2);
  value(c, PD, PRODX, "fig5_K2corona", "", 4);
  value(c, PD, PRODSTAR, "fig5_K2corona", "/e", 1);
  value(c, PSD, PRODSTAR, "fig5_K2corona", "/e", 1);
  value(c, PD, PRODX, "fig5_K2corona", "/e", 2);
  c.expect_true("G/e is K_{1,4}", are_isomorphic(apply_transform(fixture("fig5_K2corona"), "/e").graph, star(5)));
}

void criterion_9(Check& c) {
  value(c, PD, PRODSTAR, "fig6_legs5_plus_e", "", 2);
  value(c, PD, PRODX, "fig6_legs5_plus_e", "", 3);
  value(c, PD, PRODSTAR, "fig6_legs5_plus_e", "/e", 4);
  value(c, PD, PRODX, "fig6_legs5_plus_e", "/e", 6);
  value(c, PSD, PRODX, "ex3_7_H", "", 8);
  value(c, PSD, PRODX, "ex3_7_H", "/e", 4);
}

void criterion_10(Check& c) {
  for (RuleKind r : {PD, PSD})
    for (int n = 2; n <= 10; ++n) {
      const std::string name = "path:" + std::to_string(n);
      value(c, r, PRODSTAR, name, "", (n + 2) / 3);
      value(c, r, PRODX, name, "", 1 + n / 2);
    }
  for (int n = 5; n <= 8; ++n) {
    const std::string name = "star:" + std::to_string(n);
    for (RuleKind r : {PD, PSD}) value(c, r, PRODSTAR, name, "", 1);
    value(c, PSD, PRODX, name, "", 2);
    for (int leaf = 1; leaf < n; ++leaf) {
      const std::string e = "_0," + std::to_string(leaf);
      for (RuleKind r : {PD, PSD}) value(c, r, PRODSTAR, name, e, 2);
      value(c, PSD, PRODX, name, e, 3);
    }
  }
}

void criterion_11(Check& c) {
  value(c, PD, PRODX, "fig7_subdiv", "", 3);
  value(c, PD, PRODX, "fig7_subdiv", "_e", 6);
}

void criterion_12(Check& c) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n))
      c.expect("standard product " + to_graph6(g), n, static_cast<long long>(throttle::throttle(ZF, PRODX, g).value));
  c.suite("thzx", 7);
  c.suite("thm3.10", 7);
  c.suite("thm3.11", 8);
  c.suite("prop3.12", 7);
  for (int r = 1; r <= 4; ++r) {
    value(c, ZF, PRODSTAR, "path:" + std::to_string(2 * r), "", r);
    value(c, ZF, PRODSTAR, "path:" + std::to_string(2 * r + 1), "", r + 1);
  }
  value(c, ZF, PRODSTAR, "star:6", "", 5);
  value(c, ZF, PRODSTAR, "star:6", "/0,1", 4);
  value(c, ZF, PRODSTAR, "ksum:3", "", 3);
  value(c, ZF, PRODSTAR, "ksum:3", "-m", 4);
  c.expect_true("ksum:3 is a matched sum", is_matched_sum(fixture("ksum:3").graph).has_value());
}

void criterion_13(Check& c) {
  const Graph b = fixture("book:3").graph;
  c.expect("Z+(B3)", 2, parameter_number(PSD, b).value);
  const PropagationTime pt = pt_k(PSD, b, 2).time;
  c.expect("pt+(B3,2)", 1, pt.is_finite() ? pt.value() : -1);
  value(c, PSD, PRODSTAR, "book:3", "", 2);
  value(c, PSD, PRODX, "book:3", "", 4);
  c.expect("Z+(B3/e)", 4, parameter_number(PSD, apply_transform(fixture("book:3"), "/spine").graph).value);
  value(c, PSD, PRODSTAR, "book:3", "/spine", 4);
  value(c, PSD, PRODX, "book:3", "/spine", 7);
}

void criterion_14(Check& c) {
  c.expect("tower order", 9, fixture("corona_tower:K2").graph.order());
  value(c, PD, PRODSTAR, "corona_tower:K2", "", 1);
  value(c, PD, PRODX, "corona_tower:K2", "", 2);
  value(c, PD, PRODSTAR, "corona_tower:K2", "-u", 4);
  value(c, PD, PRODX, "corona_tower:K2", "-u", 6);
  value(c, PSD, PRODSTAR, "star_plus_edge:6", "", 2);
  value(c, PSD, PRODX, "star_plus_edge:6", "", 4);
  value(c, PSD, PRODSTAR, "star_plus_edge:6", "-c", 4);
  value(c, PSD, PRODX, "star_plus_edge:6", "-c", 5);
}

void criterion_15(Check& c) {
  c.suite("ore", 8);
  c.suite("lemma2.2", 7);
  c.suite("lemma2.3", 7);
  c.suite("lemma3.1", 6);
  c.suite("lemma3.1-z", 6);
  c.suite("prop3.2", 7);
  c.suite("remark1.1", 7);
  c.suite("universal", 7);
  c.suite("monotone", 6);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"six-sevenths family attains 6k", criterion_1},
      {"product bound 6n/7 for connected n<=8 with certificates", criterion_2},
      {"sum bound n/3+2 for connected n<=8, tight at n=7", criterion_3},
      {"spider(2,2,1,1) gamma and product value", criterion_4},
      {"spider S(3^6) with and without e", criterion_5},
      {"edge deletion gaps H1, H2, H3", criterion_6},
      {"vertex deletion gaps on the twin graph", criterion_7},
      {"contraction of K2 corona 2K1", criterion_8},
      {"contraction gaps on long legs", criterion_9},
      {"paths and stars", criterion_10},
      {"subdivision gap", criterion_11},
      {"standard zero forcing block", criterion_12},
      {"book graphs", criterion_13},
      {"universal vertex gaps", criterion_14},
      {"property suites", criterion_15},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string error;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && check.failures().empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2zu %s (%d checks)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), check.count());
    if (!error.empty()) std::printf("     error: %s\n", error.c_str());
    for (const std::string& f : check.failures()) std::printf("     %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
