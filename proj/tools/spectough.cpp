// spectough: command-line front end.
//
// Exit codes: 0 clean, 1 usage or input error, 2 a mathematical violation
// was found (check, search, audit).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectough/families.hpp"
#include "spectough/invariants.hpp"
#include "spectough/report_json.hpp"
#include "spectough/spectral.hpp"
#include "spectough/verify.hpp"

using namespace spectough;
using nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct GraphSource {
  std::string g6;
  std::string edges_file;
  std::string family;
  std::string extremal;
};

// One graph, plus block metadata when it came from a family.
struct LoadedGraph {
  Graph graph{1};
  std::optional<FamilyGraph> family;
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
  auto* group = cmd->add_option_group("graph source", "exactly one graph source");
  group->add_option("--g6", src.g6, "graph6 string");
  group->add_option("--edges", src.edges_file, "edge-list file: first line n, then 'u v' per line");
  group->add_option("--family", src.family, "split-join family, e.g. \"s=2;parts=5,1,1,1\"");
  group->add_option("--family-extremal", src.extremal, "\"n=6;delta=1\", \"n=16;tau=3\" or \"n=12;b=2\"");
  group->require_option(1);
}

LoadedGraph load(const GraphSource& src) {
  LoadedGraph out;
  if (!src.g6.empty()) {
    out.graph = parse_graph6(src.g6);
  } else if (!src.edges_file.empty()) {
    std::ifstream in(src.edges_file);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + src.edges_file);
    std::stringstream text;
    text << in.rdbuf();
    out.graph = parse_edge_list(text.str());
  } else {
    out.family = src.family.empty() ? parse_extremal(src.extremal) : split_join(FamilySpec::parse(src.family));
    out.graph = out.family->graph;
  }
  return out;
}

std::vector<Rational> parse_alphas(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    const Rational a = Rational::parse(item);
    if (a < Rational(0) || a > Rational(1)) throw Error(ErrorCode::InvalidArgument, "alpha " + item + " outside [0, 1]");
    out.push_back(a);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty alpha list");
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

ordered_json matrix_rows(const QuotientMatrix& q) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < q.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < q.dim(); ++j) row.push_back(q(i, j));
    rows.push_back(row);
  }
  return rows;
}

std::string csv_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string parts_text(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("SPECTOUGH_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_alpha spectral radius, scattering number and toughness toolkit"};
  app.require_subcommand(1);

  GraphSource src;
  std::string alphas_text = "0";
  std::string out_path;
  std::string format;
  int jobs = default_jobs();
  int nmax = 0;
  int n = 0;
  int delta = 0;
  int tau_param = 0;
  int b_param = 0;
  long long count = 1000;
  std::uint64_t seed = 0;
  std::string mode = "exhaustive";
  std::string theorem;
  std::string violations_path;
  bool timing = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the report to FILE instead of stdout");
    cmd->add_option("--format", format, "output format");
  };

  auto* invariants_cmd = app.add_subcommand("invariants", "scattering number, toughness and tau with witnesses");
  add_source_options(invariants_cmd, src);
  add_common(invariants_cmd);

  auto* rho_cmd = app.add_subcommand("rho", "A_alpha spectral radius for each alpha");
  add_source_options(rho_cmd, src);
  rho_cmd->add_option("--alpha", alphas_text, "comma-separated alphas, decimals or p/q");
  add_common(rho_cmd);

  auto* quotient_cmd = app.add_subcommand("quotient", "closed-form quotient matrix of a family");
  add_source_options(quotient_cmd, src);
  quotient_cmd->add_option("--alpha", alphas_text, "single alpha");
  add_common(quotient_cmd);

  auto* family_cmd = app.add_subcommand("family", "build a family graph");
  add_source_options(family_cmd, src);
  add_common(family_cmd);

  auto* check_cmd = app.add_subcommand("check", "check one graph against a theorem");
  check_cmd->add_option("theorem", theorem, "t11 (scattering), t12a (tau-int) or t12b (tau-frac)")
      ->required()
      ->check(CLI::IsMember({"t11", "t12a", "t12b", "scattering", "tau-int", "tau-frac"}));
  add_source_options(check_cmd, src);
  check_cmd->add_option("--alpha", alphas_text, "comma-separated alphas");
  check_cmd->add_option("--tau", tau_param, "integer tau for t12a");
  check_cmd->add_option("--b", b_param, "b = 1/tau for t12b");
  add_common(check_cmd);

  auto* search_cmd = app.add_subcommand("search", "search for counterexamples to the scattering theorem");
  search_cmd->add_option("--n", n, "vertex count")->required();
  search_cmd->add_option("--delta", delta, "minimum degree")->required();
  search_cmd->add_option("--alpha", alphas_text, "comma-separated alphas");
  search_cmd->add_option("--mode", mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  search_cmd->add_option("--count", count, "random samples");
  search_cmd->add_option("--seed", seed, "random seed");
  search_cmd->add_option("--jobs", jobs, "worker threads (default $SPECTOUGH_JOBS or 1)");
  search_cmd->add_option("--violations-g6", violations_path, "write violating graphs, one graph6 per line");
  search_cmd->add_flag("--timing", timing, "include runtime_seconds in the report");
  add_common(search_cmd);

  auto* audit_cmd = app.add_subcommand("audit", "s<=0 iff t>=1 and s<=1 iff tau>=1 over small graphs");
  audit_cmd->add_option("--nmax", nmax, "largest order, at most 7")->required();
  audit_cmd->add_option("--jobs", jobs, "worker threads (default $SPECTOUGH_JOBS or 1)");
  audit_cmd->add_flag("--timing", timing, "include runtime_seconds in the JSON report");
  add_common(audit_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "quotient vs dense radius over split-join families (CSV)");
  sweep_cmd->add_option("--family", src.family, "a single family instead of the full grid");
  sweep_cmd->add_option("--nmax", nmax, "largest order of the grid (s<=3, t<=4)");
  sweep_cmd->add_option("--alpha", alphas_text, "comma-separated alphas");
  add_common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Output out(out_path);
    std::ostream& os = out.stream();

    if (invariants_cmd->parsed()) {
      const LoadedGraph g = load(src);
      os << to_json(compute_invariants(g.graph));
      return 0;
    }

    if (rho_cmd->parsed()) {
      const LoadedGraph g = load(src);
      ordered_json j;
      j["n"] = g.graph.order();
      j["graph6"] = to_graph6(g.graph);
      ordered_json results = ordered_json::array();
      for (const Rational& alpha : parse_alphas(alphas_text)) {
        const double a = alpha.to_double();
        const SpectralResult dense = spectral_radius(a_alpha(g.graph, a));
        ordered_json r;
        r["alpha"] = alpha.str();
        r["rho"] = dense.radius;
        r["residual"] = dense.residual;
        if (g.family) {
          const double q = threshold_rho(*g.family, a);
          r["rho_quotient"] = q;
          r["quotient_dense_gap"] = std::abs(q - dense.radius);
        }
        results.push_back(r);
      }
      j["results"] = results;
      os << j.dump(2) << "\n";
      return 0;
    }

    if (quotient_cmd->parsed()) {
      const LoadedGraph g = load(src);
      if (!g.family) throw Error(ErrorCode::InvalidArgument, "quotient needs --family or --family-extremal");
      const std::vector<Rational> alphas = parse_alphas(alphas_text);
      if (alphas.size() != 1) throw Error(ErrorCode::InvalidArgument, "quotient takes a single alpha");
      const QuotientMatrix q = split_join_quotient(g.family->spec, alphas.front());
      const double a = alphas.front().to_double();
      if (format == "csv") {
        os << q.to_csv();
        return 0;
      }
      const QuotientMatrix assembled = quotient(a_alpha(g.graph, a), g.family->blocks);
      double gap = 0.0;
      for (int i = 0; i < q.dim(); ++i)
        for (int k = 0; k < q.dim(); ++k) gap = std::max(gap, std::abs(q(i, k) - assembled(i, k)));
      ordered_json j;
      j["spec"] = g.family->spec.str();
      j["alpha"] = alphas.front().str();
      j["block_sizes"] = q.block_sizes();
      j["matrix"] = matrix_rows(q);
      j["equitable"] = assembled.equitable();
      j["max_entry_gap"] = gap;
      j["largest_eigenvalue"] = quotient_eigen_largest(q);
      j["rho_dense"] = rho_alpha(g.graph, a);
      if (q.dim() <= kMaxCharpolyDim) j["charpoly"] = charpoly(q);
      os << j.dump(2) << "\n";
      return 0;
    }

    if (family_cmd->parsed()) {
      const LoadedGraph g = load(src);
      if (!g.family) throw Error(ErrorCode::InvalidArgument, "family needs --family or --family-extremal");
      if (format == "graph6") {
        os << to_graph6(g.graph) << "\n";
        return 0;
      }
      if (format == "edges") {
        os << to_edge_list(g.graph);
        return 0;
      }
      ordered_json blocks = ordered_json::array();
      for (VertexSet blk : g.family->blocks.blocks()) blocks.push_back(blk.members());
      ordered_json j;
      j["spec"] = g.family->spec.str();
      j["n"] = g.graph.order();
      j["m"] = g.graph.size();
      j["min_degree"] = g.graph.min_degree();
      j["graph6"] = to_graph6(g.graph);
      j["blocks"] = blocks;
      j["regime"] = g.family->regime.empty() ? ordered_json(nullptr) : ordered_json(g.family->regime);
      j["warnings"] = g.family->warnings;
      os << j.dump(2) << "\n";
      return 0;
    }

    if (check_cmd->parsed()) {
      const LoadedGraph g = load(src);
      std::vector<Verdict> verdicts;
      for (const Rational& alpha : parse_alphas(alphas_text)) {
        if (theorem == "t11" || theorem == "scattering") {
          verdicts.push_back(check_t11(g.graph, alpha));
        } else if (theorem == "t12a" || theorem == "tau-int") {
          if (tau_param == 0) throw Error(ErrorCode::InvalidArgument, "t12a needs --tau");
          verdicts.push_back(check_t12a(g.graph, alpha, tau_param));
        } else {
          if (b_param == 0) throw Error(ErrorCode::InvalidArgument, "t12b needs --b");
          verdicts.push_back(check_t12b(g.graph, alpha, b_param));
        }
      }
      os << to_json(std::span<const Verdict>(verdicts));
      for (const Verdict& v : verdicts)
        if (!v.respected()) return kExitViolation;
      return 0;
    }

    if (search_cmd->parsed()) {
      const std::vector<Rational> alphas = parse_alphas(alphas_text);
      SearchOptions options;
      options.mode = mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
      options.count = count;
      options.seed = seed;
      options.jobs = jobs;
      const SearchReport report = search_t11(n, delta, alphas, options);
      os << to_json(report, timing);
      if (!violations_path.empty()) {
        std::ofstream vf(violations_path);
        if (!vf) throw Error(ErrorCode::InvalidArgument, "cannot write " + violations_path);
        for (const Violation& v : report.violations) vf << v.graph6 << "\n";
      }
      return report.violations.empty() ? 0 : kExitViolation;
    }

    if (audit_cmd->parsed()) {
      const SearchReport report = audit_equivalences(nmax, jobs);
      if (format == "json") {
        os << to_json(report, timing);
      } else {
        os << report.violations.size() << " violations\n";
        for (const Violation& v : report.violations) os << v.graph6 << " " << v.reason << "\n";
      }
      return report.violations.empty() ? 0 : kExitViolation;
    }

    if (sweep_cmd->parsed()) {
      std::vector<FamilySpec> specs;
      if (!src.family.empty()) {
        specs.push_back(FamilySpec::parse(src.family));
      } else {
        if (nmax < 2) throw Error(ErrorCode::InvalidArgument, "sweep needs --family or --nmax >= 2");
        specs = split_join_specs(nmax, 3, 4);
      }
      const std::vector<Rational> alphas = parse_alphas(alphas_text);
      os << "n,s,parts,alpha,rho_quotient,rho_dense,delta_rho\n";
      for (const SweepRow& row : sweep_split_join(specs, alphas)) {
        os << row.spec.order() << ',' << row.spec.s << ",\"" << parts_text(row.spec.parts) << "\","
           << row.alpha.str() << ',' << csv_double(row.rho_quotient) << ',' << csv_double(row.rho_dense) << ','
           << csv_double(std::abs(row.rho_quotient - row.rho_dense)) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
