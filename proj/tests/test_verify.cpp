#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spectough/report_json.hpp"
#include "spectough/verify.hpp"

using namespace spectough;
using doctest::Approx;

namespace {

const std::vector<Rational> kGrid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};

}  // namespace

TEST_CASE("t11 on its extremal graph") {
  const FamilyGraph h = scattering_extremal(6, 1);
  for (const Rational& a : kGrid) {
    const Verdict v = check_t11(h.graph, a);
    CHECK(v.preconditions_met);
    CHECK(v.radius_condition);
    CHECK(v.hypothesis_holds);
    CHECK_FALSE(v.conclusion_holds);
    CHECK(v.scattering == 2);
    CHECK(v.is_extremal);
    CHECK(v.respected());
    REQUIRE(v.threshold);
    CHECK(std::abs(v.rho - *v.threshold) <= 1e-9);
  }
}

TEST_CASE("t11 on a complete graph") {
  const Verdict v = check_t11(complete(6), Rational(0));
  CHECK(v.rho == Approx(5.0).epsilon(1e-12));
  CHECK_FALSE(v.scattering.has_value());
  CHECK(v.conclusion_holds);
  CHECK(v.respected());
}

TEST_CASE("t11 on a path") {
  const Verdict v = check_t11(path(6), Rational(0));
  const double rp = oracle::rho(path(6), 0.0);
  const double rh = oracle::rho(scattering_extremal(6, 1).graph, 0.0);
  CHECK(rp == Approx(1.80194).epsilon(1e-5));
  CHECK(std::abs(v.rho - rp) <= 1e-9);
  REQUIRE(v.threshold);
  CHECK(std::abs(*v.threshold - rh) <= 1e-9);
  CHECK_FALSE(v.radius_condition);
  CHECK_FALSE(v.hypothesis_holds);
  CHECK(v.respected());
}

TEST_CASE("t11 reports precondition failures") {
  const Verdict v = check_t11(cycle(8), Rational(1, 2));  // delta = 2 needs n >= 10
  CHECK_FALSE(v.preconditions_met);
  CHECK_FALSE(v.hypothesis_holds);
  CHECK_FALSE(v.notes.empty());
  CHECK_THROWS_AS(check_t11(disjoint_union(complete(3), complete(3)), Rational(0)), Error);
  CHECK_THROWS_AS(check_t11(path(3), Rational(3, 2)), Error);
}

TEST_CASE("t12a on its extremal graph") {
  const FamilyGraph g = tau_extremal(40, 2);
  CHECK(compute_invariants(g.graph).tau == Rational(1));
  for (const Rational& a : {Rational(1, 2), Rational(3, 5), Rational(7, 10)}) {
    const Verdict v = check_t12a(g.graph, a, 2);
    CHECK(v.preconditions_met);
    CHECK(v.hypothesis_holds);
    CHECK(v.tau == Rational(1));
    CHECK_FALSE(v.conclusion_holds);
    CHECK(v.is_extremal);
    CHECK(v.respected());
  }
  const Verdict outside = check_t12a(g.graph, Rational(3, 4), 2);
  CHECK_FALSE(outside.preconditions_met);
  CHECK(check_t12a(complete(40), Rational(1, 2), 2).conclusion_holds);
  CHECK_FALSE(check_t12a(g.graph, Rational(1, 2), 1).preconditions_met);
}

TEST_CASE("t12a size bound from alpha") {
  // alpha = 7/10, tau = 2: (16 * 3/10 - 7/5 + 1) / (3 - 14/5) = 4.4 / 0.2 = 22 < 27
  CHECK(check_t12a(tau_extremal(27, 2).graph, Rational(7, 10), 2).preconditions_met);
  // alpha = 74/100: (16 * 0.26 - 1.48 + 1) / 0.04 = 92
  const Verdict v = check_t12a(tau_extremal(40, 2).graph, Rational(74, 100), 2);
  CHECK_FALSE(v.preconditions_met);
  CHECK_FALSE(check_t12a(tau_extremal(64, 2).graph, Rational(74, 100), 2).preconditions_met);
}

TEST_CASE("t12b on its extremal graph") {
  const FamilyGraph g = fractional_tau_extremal(30, 2);
  CHECK(compute_invariants(g.graph).tau == Rational(1, 3));
  for (const Rational& a : {Rational(1, 2), Rational(3, 5), Rational(13, 20)}) {
    const Verdict v = check_t12b(g.graph, a, 2);
    CHECK(v.preconditions_met);
    CHECK(v.hypothesis_holds);
    CHECK(v.tau == Rational(1, 3));
    CHECK_FALSE(v.conclusion_holds);
    CHECK(v.is_extremal);
    CHECK(v.respected());
  }
  CHECK_FALSE(check_t12b(g.graph, Rational(7, 10), 2).preconditions_met);
  CHECK(check_t12b(complete(30), Rational(1, 2), 2).conclusion_holds);

  const Verdict b1 = check_t12b(fractional_tau_extremal(30, 1).graph, Rational(1, 2), 1);
  CHECK_FALSE(b1.preconditions_met);
  CHECK(b1.respected());
}

TEST_CASE("extremal graphs sit exactly on the threshold and break the conclusion") {
  for (const Rational& a : {Rational(1, 2), Rational(5, 8)}) {
    for (int n : {10, 12, 16}) {
      const Verdict v = check_t11(scattering_extremal(n, 2).graph, a);
      CHECK(v.hypothesis_holds);
      CHECK_FALSE(v.conclusion_holds);
      CHECK(v.is_extremal);
    }
    for (auto [tau, n] : {std::pair{2, 27}, {3, 52}}) {
      const Verdict v = check_t12a(tau_extremal(n, tau).graph, a, tau);
      CHECK(v.hypothesis_holds);
      CHECK_FALSE(v.conclusion_holds);
      CHECK(v.is_extremal);
    }
    for (auto [b, n] : {std::pair{2, 24}, {3, 30}}) {
      const Verdict v = check_t12b(fractional_tau_extremal(n, b).graph, a, b);
      CHECK(v.hypothesis_holds);
      CHECK_FALSE(v.conclusion_holds);
      CHECK(v.is_extremal);
    }
  }
}

TEST_CASE("verdicts are deterministic") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected_graph(9, 0.5, rng);
    CHECK(to_json(check_t11(g, Rational(1, 2))) == to_json(check_t11(g, Rational(1, 2))));
    CHECK(to_json(check_t12a(g, Rational(1, 2), 2)) == to_json(check_t12a(g, Rational(1, 2), 2)));
  }
}

TEST_CASE("t11 exhaustively on 6 and 7 vertices: one counterexample graph") {
  // K_1 v (K_1 u K_{1,3}) has s = 2 and delta = 1 but is not K_1 v (K_3 u 2K_1).
  // Its A_alpha radius ties the extremal one at alpha = 1/2 and passes it above that.
  const Graph bad = parse_graph6("E?^w");
  const Graph h = scattering_extremal(6, 1).graph;
  CHECK(is_isomorphic(bad, join(complete(1), disjoint_union(complete(1), star(3)))));
  CHECK(oracle::naive_invariants(bad).scattering == 2);
  CHECK(bad.min_degree() == 1);
  CHECK_FALSE(is_isomorphic(bad, h));
  CHECK(oracle::rho(bad, 0.0) < oracle::rho(h, 0.0) - 1e-3);
  CHECK(oracle::rho(bad, 0.25) < oracle::rho(h, 0.25) - 1e-3);
  CHECK(oracle::rho(bad, 0.75) > oracle::rho(h, 0.75) + 1e-2);
  {
    // Cospectral at alpha = 1/2.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eb(oracle::a_alpha(bad, 0.5));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eh(oracle::a_alpha(h, 0.5));
    CHECK((eb.eigenvalues() - eh.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
  }

  SearchOptions opt;
  const SearchReport six = search_t11(6, 1, kGrid, opt);
  CHECK(six.examined == 51);
  REQUIRE(six.violations.size() == 2);
  CHECK(six.violations[0].graph6 == "E?^w");
  CHECK(six.violations[0].alpha == Rational(1, 2));
  CHECK(six.violations[1].graph6 == "E?^w");
  CHECK(six.violations[1].alpha == Rational(3, 4));
  for (const Violation& v : six.violations) {
    REQUIRE(v.verdict);
    CHECK(v.verdict->hypothesis_holds);
    CHECK_FALSE(v.verdict->conclusion_holds);
    CHECK(v.verdict->rho == Approx(oracle::rho(bad, v.alpha->to_double())).epsilon(1e-12));
  }

  const SearchReport seven = search_t11(7, 1, kGrid, opt);
  CHECK(seven.examined > 0);
  CHECK(seven.hypothesis_hits > 0);
  CHECK(seven.violations.empty());

  for (int n : {6, 7}) {
    const SearchReport r = search_t11(n, 2, kGrid, opt);
    CHECK(r.examined > 0);
    CHECK(r.hypothesis_hits == 0);  // n < 10
    CHECK(r.violations.empty());
  }
}

TEST_CASE("t11 also fails near alpha = 1 with 10 and 12 vertices") {
  // K_s v (K_{n-2s-1} u (s+1)K_1) with one outer vertex cut down to a single
  // neighbour in the join: min degree 1, s(G) = 2.
  for (auto [n, s] : {std::pair{10, 4}, {12, 5}}) {
    std::vector<int> parts{n - 2 * s - 1};
    parts.resize(s + 2, 1);
    Graph g = split_join({s, parts}).graph;
    for (int v = 1; v < s; ++v) g.remove_edge(v, n - 1);
    const Graph h = scattering_extremal(n, 1).graph;
    CHECK(g.min_degree() == 1);
    CHECK(oracle::naive_invariants(g).scattering == 2);
    CHECK(oracle::rho(g, 0.75) < oracle::rho(h, 0.75));
    CHECK(oracle::rho(g, 0.9) > oracle::rho(h, 0.9) + 1e-3);

    const Verdict v = check_t11(g, Rational(9, 10));
    CHECK(v.preconditions_met);
    CHECK(v.hypothesis_holds);
    CHECK_FALSE(v.respected());
    CHECK(v.rho == Approx(oracle::rho(g, 0.9)).epsilon(1e-12));
    CHECK(check_t11(g, Rational(3, 4)).respected());
  }
}

TEST_CASE("search reports do not depend on the worker count") {
  SearchOptions one;
  SearchOptions four;
  four.jobs = 4;
  CHECK(to_json(search_t11(7, 1, kGrid, one)) == to_json(search_t11(7, 1, kGrid, four)));

  SearchOptions r1;
  r1.mode = SearchMode::Random;
  r1.count = 300;
  r1.seed = 42;
  SearchOptions r3 = r1;
  r3.jobs = 3;
  const SearchReport a = search_t11(12, 2, kGrid, r1);
  CHECK(to_json(a) == to_json(search_t11(12, 2, kGrid, r3)));
  CHECK(a.violations.empty());
  CHECK(a.seed == 42u);
  CHECK(a.examined == 300);

  CHECK_THROWS_AS(search_t11(8, 1, kGrid, one), Error);
}

TEST_CASE("sampled graphs are connected with the requested minimum degree") {
  for (long long i = 0; i < 200; ++i) {
    const Graph g = sample_min_degree_graph(12, 2, 7, i);
    CHECK(is_connected(g));
    CHECK(g.min_degree() == 2);
    CHECK(g == sample_min_degree_graph(12, 2, 7, i));
  }
  CHECK_FALSE(sample_min_degree_graph(12, 2, 7, 0) == sample_min_degree_graph(12, 2, 8, 0));
}

TEST_CASE("equivalence audits") {
  const SearchReport five = audit_equivalences(5);
  CHECK(five.violations.empty());
  CHECK(five.examined_by_n.at(5) == 20);
  const SearchReport seven = audit_equivalences(7, 2);
  CHECK(seven.violations.empty());
  CHECK(seven.examined_by_n.at(6) == 111);
  CHECK(seven.examined_by_n.at(7) == 852);
  CHECK_THROWS_AS(audit_equivalences(8), Error);
}

TEST_CASE("proof polynomial f") {
  // f(c) at tau = 2, n = 30, c = 3: 5*9 - 71*3 + 900 + 30 + 4 + 2
  CHECK(eval_f_c(30, 2, 3) == 45 - 213 + 936);
  for (int tau : {2, 3, 4}) {
    const int n = 4 * tau * tau + 5 * tau + 1;
    CHECK(std::abs(eval_f_c(n, tau, 3) - eval_f_c(n, tau, n / (tau + 1.0) + 1)) <= 1e-9 * n * n);
  }
}

TEST_CASE("f peaks at c = 3 once n >= 4tau^2 + 5tau + 1") {
  for (int tau : {2, 3, 4}) {
    for (int n = 4 * tau * tau + 5 * tau + 1; n <= 200; ++n) {
      const double f3 = eval_f_c(n, tau, 3);
      for (int c = 3; c <= n / (tau + 1) + 1; ++c) CHECK(eval_f_c(n, tau, c) <= f3);
      CHECK(eval_f_c(n, tau, n / (tau + 1.0) + 1) <= f3 + 1e-9 * f3);
    }
  }
}

TEST_CASE("g peaks at s = 2 once n >= 2tau^2 + 5tau + 2/tau + 8") {
  for (int b : {2, 3, 4}) {
    const double tau = 1.0 / b;
    const double bound = 2 * tau * tau + 5 * tau + 2.0 / tau + 8;
    for (int n = static_cast<int>(std::ceil(bound - 1e-12)); n <= 200; ++n) {
      const double g2 = eval_g_s(n, b, 2);
      for (int s = 2; s <= (n - 2) / (b + 1); ++s) CHECK(eval_g_s(n, b, s) <= g2);
      const double lhs = g2 - eval_g_s(n, b, (n - 2.0) / (b + 1));
      CHECK(lhs >= -1e-9 * g2);
    }
  }
}

TEST_CASE("split-join sweep rows") {
  const std::vector<FamilySpec> specs = split_join_specs(8, 3, 4);
  CHECK_FALSE(specs.empty());
  for (const FamilySpec& spec : specs) {
    CHECK(spec.order() <= 8);
    CHECK(spec.s >= 1);
    CHECK(spec.parts.size() <= 4u);
  }
  for (const SweepRow& row : sweep_split_join(specs, kGrid)) {
    CHECK(std::abs(row.rho_quotient - row.rho_dense) <= 1e-8);
    CHECK(std::abs(row.phi_at_root) <= 1e-6);
  }
}

TEST_CASE("concentration report on a small grid") {
  const ConcentrationReport r = check_concentration(9, 2, 3, 2, kGrid);
  CHECK(r.failures.empty());
  CHECK(r.comparisons > 0);
  CHECK(r.min_margin > 1e-10);
}

TEST_CASE("JSON views") {
  const InvariantReport inv = compute_invariants(complete(4));
  const std::string text = to_json(inv);
  CHECK(text.find("\"scattering\": null") != std::string::npos);
  CHECK(text.find("\"toughness\": \"inf\"") != std::string::npos);
  CHECK(text.back() == '\n');

  SearchReport r = audit_equivalences(4);
  r.runtime_seconds = 1.5;
  CHECK(to_json(r).find("runtime_seconds") == std::string::npos);
  CHECK(to_json(r, true).find("runtime_seconds") != std::string::npos);
}
