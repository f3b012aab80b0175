#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "spectough/families.hpp"

using namespace spectough;
using doctest::Approx;

namespace {

FamilySpec random_spec(std::mt19937_64& rng, int max_order) {
  while (true) {
    const int s = 1 + static_cast<int>(rng() % 4);
    const int t = 1 + static_cast<int>(rng() % 6);
    std::vector<int> parts(t);
    for (int& p : parts) p = 1 + static_cast<int>(rng() % 8);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    FamilySpec spec{s, parts};
    if (spec.order() <= max_order) return spec;
  }
}

}  // namespace

TEST_CASE("FamilySpec parsing and validation") {
  const FamilySpec spec = FamilySpec::parse("s=2;parts=5,1,1,1");
  CHECK(spec.s == 2);
  CHECK(spec.parts == std::vector<int>{5, 1, 1, 1});
  CHECK(spec.order() == 10);
  CHECK(spec.str() == "s=2;parts=5,1,1,1");
  CHECK(FamilySpec::parse(" parts=4 ; s=0 ").str() == "s=0;parts=4");

  CHECK_THROWS_AS(FamilySpec::parse("s=1;parts=1,3"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("s=1;parts=0"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("s=-1;parts=2"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("s=1"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("s=1;parts=2;x=3"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("s=1;parts=2,"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("s=10;parts=50,5"), Error);
}

TEST_CASE("split_join examples") {
  const FamilyGraph a = split_join({1, {3, 1, 1}});
  CHECK(a.graph.order() == 6);
  CHECK(a.graph.size() == 8);
  CHECK(is_isomorphic(a.graph, join(complete(1), disjoint_union(complete(3), edgeless(2)))));
  CHECK(a.blocks.sizes() == std::vector<int>{1, 3, 1, 1});

  const FamilyGraph b = split_join({0, {4}});
  CHECK(b.graph == complete(4));

  const FamilyGraph c = split_join({2, {5, 1, 1, 1}});
  CHECK(c.graph.order() == 10);
  CHECK(is_isomorphic(c.graph, scattering_extremal(10, 2).graph));
}

TEST_CASE("split_join minimum degree") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const FamilySpec spec = random_spec(rng, 40);
    CHECK(split_join(spec).graph.min_degree() == spec.s + spec.parts.back() - 1);
  }
}

TEST_CASE("extremal constructors") {
  const FamilyGraph h = scattering_extremal(6, 1);
  CHECK(h.spec.str() == "s=1;parts=3,1,1");
  CHECK(h.warnings.empty());

  const FamilyGraph t = tau_extremal(16, 3);
  CHECK(t.spec.str() == "s=2;parts=13,1");
  CHECK(t.graph == join(complete(2), disjoint_union(complete(13), complete(1))));
  CHECK(matches_split_join(t.graph, {2, {13, 1}}));

  const FamilyGraph f = fractional_tau_extremal(12, 2);
  CHECK(f.spec.str() == "s=1;parts=8,1,1,1");
  CHECK(f.regime == "1/tau>=2");
  CHECK(fractional_tau_extremal(12, 1).regime == "1/tau=1");

  // Below the size hypotheses: built, but flagged.
  CHECK_FALSE(scattering_extremal(8, 2).warnings.empty());
  CHECK_FALSE(tau_extremal(10, 2).warnings.empty());
  CHECK(tau_extremal(27, 2).warnings.empty());
  CHECK_FALSE(fractional_tau_extremal(10, 2).warnings.empty());
  // 2/4 + 5/2 + 4 + 8 = 15
  CHECK(fractional_tau_extremal(15, 2).warnings.empty());
  CHECK_FALSE(fractional_tau_extremal(14, 2).warnings.empty());

  CHECK_THROWS_AS(scattering_extremal(4, 2), Error);
  CHECK_THROWS_AS(tau_extremal(10, 1), Error);
  CHECK_THROWS_AS(fractional_tau_extremal(4, 2), Error);

  CHECK(parse_extremal("n=6;delta=1").spec == h.spec);
  CHECK(parse_extremal("n=16;tau=3").spec == t.spec);
  CHECK(parse_extremal("n=12;b=2").spec == f.spec);
  CHECK_THROWS_AS(parse_extremal("n=12"), Error);
  CHECK_THROWS_AS(parse_extremal("n=12;gamma=2"), Error);
}

TEST_CASE("scattering extremal graph has minimum degree delta") {
  for (int delta = 1; delta <= 5; ++delta)
    for (int n = 2 * delta + 2; n <= 64; ++n) CHECK(scattering_extremal(n, delta).graph.min_degree() == delta);
}

TEST_CASE("B1 examples") {
  const FamilySpec spec{1, {3, 1, 1}};
  const QuotientMatrix b = split_join_quotient(spec, Rational(0));
  REQUIRE(b.dim() == 4);
  CHECK(b(0, 0) == 0.0);
  CHECK(b(0, 1) == 3.0);
  CHECK(b(0, 2) == 1.0);
  CHECK(b(0, 3) == 1.0);
  const FamilyGraph g = split_join(spec);
  const QuotientMatrix assembled = quotient(a_alpha(g.graph, 0.0), g.blocks);
  CHECK(assembled.equitable());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(b(i, j) == assembled(i, j));

  // n = 10, s = 2, alpha = 1/2: n alpha - s alpha + s - 1 = 5 - 1 + 1 = 5
  CHECK(split_join_quotient({2, {5, 1, 1, 1}}, Rational(1, 2))(0, 0) == 5.0);

  CHECK_THROWS_AS(split_join_quotient({0, {3}}, Rational(1, 2)), Error);
}

TEST_CASE("B1 equals the assembled quotient and its root equals the dense radius") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const FamilySpec spec = random_spec(rng, 30);
    const FamilyGraph g = split_join(spec);
    const Rational alpha(static_cast<std::int64_t>(rng() % 21), 20);
    const double a = alpha.to_double();
    const QuotientMatrix exact = split_join_quotient(spec, alpha);
    const QuotientMatrix approx = split_join_quotient(spec, a);
    const QuotientMatrix assembled = quotient(a_alpha(g.graph, a), g.blocks);
    CHECK(assembled.equitable());
    for (int i = 0; i < exact.dim(); ++i)
      for (int j = 0; j < exact.dim(); ++j) {
        CHECK(std::abs(exact(i, j) - assembled(i, j)) <= 1e-12);
        CHECK(std::abs(exact(i, j) - approx(i, j)) <= 1e-12);
      }
    const double dense = oracle::rho(g.graph, a);
    CHECK(std::abs(quotient_eigen_largest(exact) - dense) <= 1e-8);
    CHECK(std::abs(threshold_rho(g, a) - dense) <= 1e-8);
    CHECK(std::abs(split_join_phi(spec.s, spec.parts, a, dense)) <= 1e-6);
  }
}

TEST_CASE("fragmented join quotient") {
  const QuotientMatrix q = fragmented_join_quotient(10, 2, 1, Rational(0));
  // Row sum of a small-clique vertex into its own block: (delta - s) + alpha s.
  CHECK(q(1, 1) == 1.0);
  CHECK(q(0, 0) == 4.0);  // n - (delta+2-s)(s+1) + alpha s = 10 - 6
  CHECK(q(2, 2) == 0.0);

  // (8, 3, 1) has a big clique smaller than the others, so it is labelled last.
  for (auto [n, delta] : {std::pair{10, 2}, {20, 3}, {30, 4}, {12, 3}, {64, 5}, {8, 3}}) {
    for (int s = 1; s < delta; ++s) {
      const int big = n - s - (delta + 1 - s) * (s + 1);
      if (big < 1) continue;
      const FamilyGraph g = fragmented_join(n, delta, s);
      CHECK(g.graph.min_degree() == std::min(delta, big - 1 + s));
      const Partition blocks = fragmented_join_blocks(n, delta, s);
      for (double a : {0.0, 0.25, 0.5, 0.75}) {
        const QuotientMatrix closed = fragmented_join_quotient(n, delta, s, a);
        const QuotientMatrix assembled = quotient(a_alpha(g.graph, a), blocks);
        CHECK(assembled.equitable());
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) CHECK(std::abs(closed(i, j) - assembled(i, j)) <= 1e-12);
        CHECK(std::abs(quotient_eigen_largest(closed) - oracle::rho(g.graph, a)) <= 1e-8);
      }
    }
  }

  CHECK_THROWS_AS(fragmented_join_quotient(10, 2, 2, 0.0), Error);
  CHECK_THROWS_AS(fragmented_join_quotient(10, 2, 0, 0.0), Error);
  CHECK_THROWS_AS(fragmented_join_quotient(5, 2, 1, 0.0), Error);
}

TEST_CASE("threshold radius examples") {
  const double h = threshold_rho(scattering_extremal(6, 1), 0.0);
  CHECK(h > 3.0);
  CHECK(h < 5.0);
  CHECK(threshold_rho(tau_extremal(16, 3), 0.5) > 14.0);
  CHECK(threshold_rho(split_join({0, {7}}), 0.3) == 6.0);
  CHECK(threshold_rho(split_join({3, {4}}), 0.3) == Approx(6.0).epsilon(1e-12));

  FamilyGraph bare = scattering_extremal(6, 1);
  bare.blocks = Partition();
  CHECK_THROWS_AS(threshold_rho(bare, 0.5), Error);
}

TEST_CASE("threshold radius exceeds both block lower bounds") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const FamilySpec spec = random_spec(rng, 40);
    if (spec.parts.size() < 2) continue;
    const double a = std::uniform_real_distribution<double>(0.0, 0.99)(rng);
    const double r = threshold_rho(split_join(spec), a);
    const int n = spec.order();
    CHECK(r > n * a - spec.s * a + spec.s - 1);
    CHECK(r > spec.parts.front() + spec.s - 1);
  }
}

TEST_CASE("structural certificate agrees with isomorphism") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const FamilySpec spec = random_spec(rng, 12);
    const FamilyGraph fam = split_join(spec);
    const Graph shuffled = oracle::random_permutation_of(fam.graph, rng);
    CHECK(matches_split_join(shuffled, spec));

    // Perturb one edge: the certificate must reject exactly when isomorphism does.
    Graph g = shuffled;
    const int u = static_cast<int>(rng() % g.order());
    const int v = static_cast<int>(rng() % g.order());
    if (u == v) continue;
    if (g.has_edge(u, v)) g.remove_edge(u, v);
    else g.add_edge(u, v);
    CHECK(matches_split_join(g, spec) == is_isomorphic(g, fam.graph));
  }
  CHECK_FALSE(matches_split_join(path(5), {1, {3}}));
  CHECK(matches_split_join(complete(5), {2, {3}}));
  CHECK_FALSE(matches_split_join(cycle(4), {1, {2, 1}}));
}

TEST_CASE("parts vectors") {
  CHECK(parts_vectors(5, 2, 1) == std::vector<std::vector<int>>{{4, 1}, {3, 2}});
  CHECK(parts_vectors(6, 3, 2) == std::vector<std::vector<int>>{{2, 2, 2}});
  CHECK(parts_vectors(5, 3, 2).empty());
  CHECK(parts_vectors(7, 3, 1).size() == 4);  // 511, 421, 331, 322
}

TEST_CASE("mass concentration maximizes the radius") {
  for (int n = 4; n <= 12; ++n)
    for (int s = 1; s <= 3; ++s)
      for (int t = 2; t <= 4; ++t)
        for (int p = 1; p <= 2; ++p) {
          const int head = n - s - p * (t - 1);
          if (head < p) continue;
          std::vector<int> best(t, p);
          best[0] = head;
          for (double a : {0.0, 0.25, 0.5, 0.75}) {
            const double top = oracle::rho(split_join({s, best}).graph, a);
            for (const auto& parts : parts_vectors(n - s, t, p)) {
              if (parts == best) continue;
              CHECK(top - oracle::rho(split_join({s, parts}).graph, a) > 1e-10);
            }
          }
        }
}

TEST_CASE("moving one vertex into the largest clique raises the radius") {
  for (int n = 5; n <= 14; ++n)
    for (int s = 1; s <= 3; ++s)
      for (int t = 2; t <= 4; ++t)
        for (const auto& parts : parts_vectors(n - s, t, 1)) {
          if (parts.back() < 2) continue;
          std::vector<int> moved = parts;
          ++moved.front();
          --moved.back();
          for (double a : {0.0, 0.25, 0.5, 0.75}) {
            const double before = threshold_rho(split_join({s, parts}), a);
            const double after = threshold_rho(split_join({s, moved}), a);
            CHECK(after - before > 1e-10);
          }
        }
}

TEST_CASE("wide split joins against the scattering extremal graph") {
  // K_s v (K_{n-2s-1} u (s+1)K_1) for delta < s <= (n-2)/2.
  auto wide = [](int n, int s) {
    std::vector<int> parts{n - 2 * s - 1};
    parts.resize(s + 2, 1);
    return split_join({s, parts});
  };
  // Below the extremal radius for alpha <= 1/2 once n >= 20.
  for (int n = 20; n <= 29; ++n) {
    const FamilyGraph h = scattering_extremal(n, 1);
    for (int s = 2; s <= (n - 2) / 2; ++s) {
      const FamilyGraph g = wide(n, s);
      for (double a : {0.0, 0.25, 0.5}) CHECK(threshold_rho(g, a) < threshold_rho(h, a));
    }
  }
  // Above it closer to alpha = 1, even at 29 vertices.
  CHECK(threshold_rho(wide(10, 4), 0.75) > threshold_rho(scattering_extremal(10, 1), 0.75) + 0.3);
  CHECK(oracle::rho(wide(10, 4).graph, 0.75) > oracle::rho(scattering_extremal(10, 1).graph, 0.75) + 0.3);
  CHECK(threshold_rho(wide(29, 13), 0.9) > threshold_rho(scattering_extremal(29, 1), 0.9) + 0.3);
  CHECK(oracle::rho(wide(29, 13).graph, 0.9) > oracle::rho(scattering_extremal(29, 1).graph, 0.9) + 0.3);
}
