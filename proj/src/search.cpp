#include <algorithm>
#include <chrono>

#include "parallel.hpp"
#include "spectough/verify.hpp"

namespace spectough {

Graph sample_min_degree_graph(int n, int delta, std::uint64_t seed, long long index) {
  if (delta < 1 || delta >= n) throw Error(ErrorCode::InvalidArgument, "need 1 <= delta < n");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> density(0.2, 0.95);
  std::uniform_int_distribution<int> pick(0, n - 1);

  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    Graph g = random_graph(n, density(rng), rng);
    // Pin one vertex to degree delta so the minimum degree is hit exactly
    // more often than plain G(n, p) would manage.
    const int v = pick(rng);
    while (g.degree(v) > delta) {
      auto nbrs = g.neighbors(v).members();
      g.remove_edge(v, nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)]);
    }
    while (g.degree(v) < delta) {
      auto others = (g.vertices() - g.neighbors(v) - VertexSet::single(v)).members();
      g.add_edge(v, others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng)]);
    }
    if (g.min_degree() == delta && is_connected(g)) return g;
  }
  throw Error(ErrorCode::NotConverged, "could not sample a connected graph with the requested minimum degree");
}

SearchReport search_t11(int n, int delta, std::span<const Rational> alphas, const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.space = "connected graphs on " + std::to_string(n) + " vertices with minimum degree " + std::to_string(delta);

  std::vector<Graph> graphs;
  long long count = 0;
  if (options.mode == SearchMode::Exhaustive) {
    if (n > kMaxEnumerationOrder) throw Error(ErrorCode::TooLarge, "exhaustive search supports n <= 7");
    report.mode = "exhaustive";
    for (Graph& g : enumerate_connected(n))
      if (g.min_degree() == delta) graphs.push_back(std::move(g));
    count = static_cast<long long>(graphs.size());
  } else {
    if (options.count < 0) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 0");
    report.mode = "random";
    report.seed = options.seed;
    count = options.count;
  }

  struct Slot {
    std::vector<Violation> violations;
    long long hits = 0;
  };
  std::vector<Slot> slots(count);
  detail::parallel_for(count, options.jobs, [&](long long i) {
    const Graph g = options.mode == SearchMode::Exhaustive ? graphs[i]
                                                            : sample_min_degree_graph(n, delta, options.seed, i);
    for (const Rational& alpha : alphas) {
      Verdict v = check_t11(g, alpha);
      if (v.hypothesis_holds) ++slots[i].hits;
      if (!v.respected()) slots[i].violations.push_back({to_graph6(g), alpha, "t11 not respected", std::move(v)});
    }
  });

  for (Slot& slot : slots) {
    report.hypothesis_hits += slot.hits;
    for (Violation& v : slot.violations) report.violations.push_back(std::move(v));
  }
  report.examined = count;
  report.examined_by_n[n] = count;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace spectough
