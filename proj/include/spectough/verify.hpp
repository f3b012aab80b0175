#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectough/families.hpp"
#include "spectough/graph.hpp"
#include "spectough/invariants.hpp"
#include "spectough/rational.hpp"

namespace spectough {

/// Radius comparisons count rho >= threshold - kRadiusTolerance as meeting the threshold.
inline constexpr double kRadiusTolerance = 1e-9;

/// Outcome of checking one graph against one theorem at one alpha.
struct Verdict {
  std::string theorem;  // "t11", "t12a" or "t12b"
  Rational alpha;
  Rational parameter;   // delta, tau or 1/b
  int n = 0;

  bool preconditions_met = false;  // size, degree and alpha ranges
  std::vector<std::string> notes;  // why preconditions fail, regime remarks
  bool radius_condition = false;   // rho >= threshold (within tolerance)
  bool hypothesis_holds = false;   // preconditions_met && radius_condition
  bool conclusion_holds = false;
  bool is_extremal = false;

  double rho = 0.0;
  std::optional<double> threshold;  // absent when the extremal graph does not exist
  std::optional<int> scattering;    // t11
  std::optional<Rational> tau;      // t12a / t12b
  std::optional<VertexSet> witness; // optimal cut set for the recorded invariant

  bool respected() const { return !hypothesis_holds || conclusion_holds || is_extremal; }
};

/// s(G) <= 1 unless G is the scattering extremal graph, given min degree
/// delta, n >= max{4delta+2, delta^3+delta} and rho_alpha(G) at the threshold.
/// Throws Disconnected.
Verdict check_t11(const Graph& g, const Rational& alpha);
/// G is tau-tough for integer tau >= 2, alpha in [1/2, 3/4) and large n.
Verdict check_t12a(const Graph& g, const Rational& alpha, int tau);
/// G is (1/b)-tough for integer b >= 2, alpha in [1/2, (3b+1)/(4b+2)) and large n.
Verdict check_t12b(const Graph& g, const Rational& alpha, int b);

struct Violation {
  std::string graph6;
  std::optional<Rational> alpha;
  std::string reason;
  std::optional<Verdict> verdict;
};

struct SearchReport {
  std::string space;
  std::string mode;  // "exhaustive" or "random"
  std::optional<std::uint64_t> seed;
  long long examined = 0;
  std::map<int, long long> examined_by_n;
  long long hypothesis_hits = 0;  // (graph, alpha) pairs where the hypothesis held
  std::vector<Violation> violations;
  std::optional<double> runtime_seconds;
};

/// s <= 0 iff t >= 1 and s <= 1 iff tau >= 1 over every connected
/// non-complete graph on 2..n_max vertices (n_max <= 7).
SearchReport audit_equivalences(int n_max, int jobs = 1);

enum class SearchMode { Exhaustive, Random };

struct SearchOptions {
  SearchMode mode = SearchMode::Exhaustive;
  long long count = 0;  // random mode sample size
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Runs check_t11 over connected n-vertex graphs with minimum degree delta.
/// Exhaustive mode needs n <= 7. Random samples are reproducible from the
/// seed alone, whatever the job count.
SearchReport search_t11(int n, int delta, std::span<const Rational> alphas, const SearchOptions& options);

/// The random connected graph with min degree delta used by search_t11 for
/// sample `index`; retries internally until the constraints hold.
Graph sample_min_degree_graph(int n, int delta, std::uint64_t seed, long long index);

/// f(c) = (2tau+1)c^2 - (2n+4tau+3)c + n^2 + n + 2tau + 2
double eval_f_c(double n, double tau, double c);
/// g(s) = (b+2)b s^2 - (2bn-3b-2)s + n^2 - 3n + 2
double eval_g_s(double n, double b, double s);

struct SweepRow {
  FamilySpec spec;
  Rational alpha;
  double rho_quotient = 0.0;
  double rho_dense = 0.0;
  double phi_at_root = 0.0;
};

/// Every split-join spec with 1 <= s <= s_max, 1 <= t <= t_max and order in [2, n_max].
std::vector<FamilySpec> split_join_specs(int n_max, int s_max, int t_max);
/// Quotient radius, dense radius and the closed-form polynomial at the root.
std::vector<SweepRow> sweep_split_join(std::span<const FamilySpec> specs, std::span<const Rational> alphas);

struct ConcentrationReport {
  long long comparisons = 0;
  double min_margin = 0.0;  // smallest rho(concentrated) - rho(other)
  std::vector<std::string> failures;
};

/// For every (n, s, t, p) with t >= 2 the parts vector [n-s-p(t-1), p, ..., p]
/// must beat every other parts vector with minimum part >= p by more than margin.
ConcentrationReport check_concentration(int n_max, int s_max, int t_max, int p_max,
                                        std::span<const Rational> alphas, double margin = 1e-10);

}  // namespace spectough
