#include <algorithm>
#include <set>

#include "spectough/graph.hpp"

namespace spectough {

namespace {

void check_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::TooLarge, "built-in enumeration supports 1 <= n <= 7, got " +
                                         std::to_string(n) + "; supply larger graphs as graph6");
  }
}

void sort_classes(std::vector<Graph>& graphs) {
  std::sort(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return to_graph6(a) < to_graph6(b);
  });
}

}  // namespace

// Every graph on n vertices is a graph on n-1 vertices plus one vertex with
// some neighbourhood, so extending each class representative by all 2^(n-1)
// neighbourhoods and deduplicating by canonical form reaches every class.
std::vector<Graph> enumerate_graphs(int n) {
  check_enumeration_order(n);
  if (n == 1) return {Graph(1)};
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& base : enumerate_graphs(n - 1)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      VertexSet(mask).for_each([&](int u) { g.add_edge(u, n - 1); });
      Graph canon = canonical_graph(g);
      if (seen.insert(to_graph6(canon)).second) out.push_back(std::move(canon));
    }
  }
  sort_classes(out);
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> all = enumerate_graphs(n);
  std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
  return all;
}

void for_each_connected(int n, const std::function<void(const Graph&)>& visit) {
  for (const Graph& g : enumerate_connected(n)) visit(g);
}

}  // namespace spectough
