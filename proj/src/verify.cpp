#include "spectough/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "parallel.hpp"
#include "spectough/spectral.hpp"

namespace spectough {

namespace {

bool extremal_match(const Graph& g, const FamilyGraph& family) {
  if (g.order() <= kMaxExactIsomorphismOrder) return is_isomorphic(g, family.graph);
  return matches_split_join(g, family.spec);
}

// Radius side of a verdict, shared by all three theorems.
void fill_radius(Verdict& v, const Graph& g, const std::optional<FamilyGraph>& family) {
  const double a = v.alpha.to_double();
  v.rho = rho_alpha(g, a);
  if (family) {
    v.threshold = threshold_rho(*family, a);
    v.radius_condition = v.rho >= *v.threshold - kRadiusTolerance;
    v.is_extremal = extremal_match(g, *family);
  }
  v.hypothesis_holds = v.preconditions_met && v.radius_condition;
}

Verdict start(const char* theorem, const Graph& g, const Rational& alpha, Rational parameter) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, std::string(theorem) + " check needs a connected graph");
  if (alpha < Rational(0) || alpha > Rational(1)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
  Verdict v;
  v.theorem = theorem;
  v.alpha = alpha;
  v.parameter = parameter;
  v.n = g.order();
  return v;
}

void need(Verdict& v, bool ok, std::string note) {
  if (!ok) {
    v.preconditions_met = false;
    v.notes.push_back(std::move(note));
  }
}

void fill_tau(Verdict& v, const Graph& g, const Rational& tau) {
  const InvariantReport inv = compute_invariants(g);
  v.tau = inv.tau;
  v.witness = inv.tau_witness;
  v.conclusion_holds = !inv.tau || *inv.tau >= tau;
}

}  // namespace

Verdict check_t11(const Graph& g, const Rational& alpha) {
  const int delta = g.min_degree();
  Verdict v = start("t11", g, alpha, Rational(delta));
  const int n = v.n;
  v.preconditions_met = true;
  need(v, delta >= 1, "minimum degree must be >= 1");
  const long long bound = std::max<long long>(4LL * delta + 2, 1LL * delta * delta * delta + delta);
  need(v, n >= bound, "n < max{4delta+2, delta^3+delta} = " + std::to_string(bound));

  std::optional<FamilyGraph> family;
  if (delta >= 1 && n - 2 * delta - 1 >= 1) family = scattering_extremal(n, delta);
  fill_radius(v, g, family);

  const InvariantReport inv = compute_invariants(g);
  v.scattering = inv.scattering;
  v.witness = inv.scattering_witness;
  v.conclusion_holds = !inv.scattering || *inv.scattering <= 1;
  return v;
}

Verdict check_t12a(const Graph& g, const Rational& alpha, int tau) {
  Verdict v = start("t12a", g, alpha, Rational(tau));
  const int n = v.n;
  v.preconditions_met = true;
  need(v, tau >= 2, "integer tau must be >= 2");
  need(v, alpha >= Rational(1, 2) && alpha < Rational(3, 4), "alpha outside [1/2, 3/4)");
  const long long size_bound = 4LL * tau * tau + 5LL * tau + 1;
  need(v, n >= size_bound, "n < 4tau^2+5tau+1 = " + std::to_string(size_bound));
  if (alpha < Rational(3, 4)) {
    const Rational t(tau);
    const Rational bound = (Rational(8) * t * (Rational(1) - alpha) - Rational(2) * alpha + Rational(1)) /
                           (Rational(3) - Rational(4) * alpha);
    need(v, Rational(n) >= bound, "n < (8tau(1-alpha)-2alpha+1)/(3-4alpha) = " + bound.str());
  }

  std::optional<FamilyGraph> family;
  if (tau >= 2 && n - tau >= 1) family = tau_extremal(n, tau);
  fill_radius(v, g, family);
  fill_tau(v, g, Rational(tau));
  return v;
}

Verdict check_t12b(const Graph& g, const Rational& alpha, int b) {
  if (b < 1) throw Error(ErrorCode::InvalidArgument, "b = 1/tau must be >= 1");
  const Rational tau(1, b);
  Verdict v = start("t12b", g, alpha, tau);
  const int n = v.n;
  v.preconditions_met = true;
  if (b == 1) {
    need(v, false, "1/tau = 1 lies outside the 1/tau >= 2 regime");
  }
  const Rational upper(3LL * b + 1, 4LL * b + 2);
  need(v, alpha >= Rational(1, 2) && alpha < upper, "alpha outside [1/2, (3+tau)/(4+2tau)) = [1/2, " + upper.str() + ")");
  // 2tau^2 + 5tau + 2/tau + 8 with tau = 1/b.
  const Rational size_bound = Rational(2) * tau * tau + Rational(5) * tau + Rational(2LL * b) + Rational(8);
  need(v, Rational(n) >= size_bound, "n < 2tau^2+5tau+2/tau+8 = " + size_bound.str());
  if (alpha < upper) {
    // T with numerator and denominator multiplied by b^2.
    const Rational rb(b);
    const Rational one(1);
    const Rational num = (Rational(5) - Rational(6) * alpha) + (Rational(13) - Rational(14) * alpha) * rb +
                         Rational(4) * (one - alpha) * rb * rb;
    const Rational den = (one - Rational(2) * alpha) + (Rational(3) - Rational(4) * alpha) * rb;
    const Rational bound = num / den;
    need(v, Rational(n) >= bound, "n < T(alpha, tau) = " + bound.str());
  }

  std::optional<FamilyGraph> family;
  if (n - b - 2 >= 1) family = fractional_tau_extremal(n, b);
  fill_radius(v, g, family);
  fill_tau(v, g, tau);
  return v;
}

SearchReport audit_equivalences(int n_max, int jobs) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder) {
    throw Error(ErrorCode::TooLarge, "built-in audit supports n_max in 1..7");
  }
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.space = "connected non-complete graphs on 2.." + std::to_string(n_max) + " vertices";
  report.mode = "exhaustive";

  for (int n = 2; n <= n_max; ++n) {
    std::vector<Graph> graphs;
    for (Graph& g : enumerate_connected(n))
      if (!is_complete(g)) graphs.push_back(std::move(g));

    std::vector<std::vector<Violation>> found(graphs.size());
    detail::parallel_for(static_cast<long long>(graphs.size()), jobs, [&](long long i) {
      const Graph& g = graphs[i];
      const InvariantReport inv = compute_invariants(g);
      const int s = *inv.scattering;
      const bool tough = inv.toughness >= Rational(1);
      const bool tau_ok = *inv.tau >= Rational(1);
      if ((s <= 0) != tough) {
        found[i].push_back({to_graph6(g), std::nullopt,
                            "s=" + std::to_string(s) + " but t=" + inv.toughness.str(), std::nullopt});
      }
      if ((s <= 1) != tau_ok) {
        found[i].push_back({to_graph6(g), std::nullopt,
                            "s=" + std::to_string(s) + " but tau=" + inv.tau->str(), std::nullopt});
      }
    });
    for (auto& list : found)
      for (auto& v : list) report.violations.push_back(std::move(v));
    report.examined_by_n[n] = static_cast<long long>(graphs.size());
    report.examined += static_cast<long long>(graphs.size());
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

double eval_f_c(double n, double tau, double c) {
  return (2 * tau + 1) * c * c - (2 * n + 4 * tau + 3) * c + n * n + n + 2 * tau + 2;
}

double eval_g_s(double n, double b, double s) {
  return (b + 2) * b * s * s - (2 * b * n - 3 * b - 2) * s + n * n - 3 * n + 2;
}

std::vector<FamilySpec> split_join_specs(int n_max, int s_max, int t_max) {
  std::vector<FamilySpec> out;
  for (int n = 2; n <= n_max; ++n)
    for (int s = 1; s <= s_max && s < n; ++s)
      for (int t = 1; t <= t_max && t <= n - s; ++t)
        for (auto& parts : parts_vectors(n - s, t, 1)) out.push_back({s, std::move(parts)});
  return out;
}

std::vector<SweepRow> sweep_split_join(std::span<const FamilySpec> specs, std::span<const Rational> alphas) {
  std::vector<SweepRow> rows;
  rows.reserve(specs.size() * alphas.size());
  for (const FamilySpec& spec : specs) {
    const FamilyGraph family = split_join(spec);
    for (const Rational& alpha : alphas) {
      const double a = alpha.to_double();
      SweepRow row{spec, alpha, 0.0, 0.0, 0.0};
      row.rho_quotient = quotient_eigen_largest(split_join_quotient(spec, alpha));
      row.rho_dense = rho_alpha(family.graph, a);
      row.phi_at_root = split_join_phi(spec.s, spec.parts, a, row.rho_quotient);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

ConcentrationReport check_concentration(int n_max, int s_max, int t_max, int p_max,
                                        std::span<const Rational> alphas, double margin) {
  ConcentrationReport report;
  report.min_margin = INFINITY;
  for (int n = 3; n <= n_max; ++n)
    for (int s = 1; s <= s_max; ++s)
      for (int t = 2; t <= t_max; ++t)
        for (int p = 1; p <= p_max; ++p) {
          const int head = n - s - p * (t - 1);
          if (head < p) continue;
          const std::vector<std::vector<int>> candidates = parts_vectors(n - s, t, p);
          if (candidates.size() < 2) continue;  // nothing to beat
          std::vector<int> best(t, p);
          best[0] = head;
          for (const Rational& alpha : alphas) {
            const double top = quotient_eigen_largest(split_join_quotient({s, best}, alpha));
            for (const auto& parts : candidates) {
              if (parts == best) continue;
              const double other = quotient_eigen_largest(split_join_quotient({s, parts}, alpha));
              const double gap = top - other;
              ++report.comparisons;
              report.min_margin = std::min(report.min_margin, gap);
              if (!(gap > margin)) {
                report.failures.push_back(FamilySpec{s, best}.str() + " vs " + FamilySpec{s, parts}.str() +
                                          " at alpha=" + alpha.str() + ": margin " + std::to_string(gap));
              }
            }
          }
        }
  return report;
}

}  // namespace spectough
