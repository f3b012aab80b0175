#include "spectough/graph.hpp"

#include <algorithm>
#include <functional>

namespace spectough {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotEquitable: return "NotEquitable";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorCode::SizeOverflow,
                "graph order must be in [1, 64], got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n_);
  for (int v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    VertexSet higher(adj_[u] & ~((std::uint64_t{2} << u) - 1));
    higher.for_each([&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph edgeless(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star(int leaves) { return join(Graph(1), edgeless(leaves)); }

namespace {

int combined_order(const Graph& g1, const Graph& g2) {
  const int n = g1.order() + g2.order();
  if (n > kMaxVertices) {
    throw Error(ErrorCode::SizeOverflow,
                "combined order " + std::to_string(n) + " exceeds 64 vertices");
  }
  return n;
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(combined_order(g1, g2));
  const int shift = g1.order();
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const int shift = g1.order();
  for (int u = 0; u < g1.order(); ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, v + shift);
  return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "permutation length does not match graph order");
  }
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    }
    seen |= std::uint64_t{1} << p;
  }
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep = keep & g.vertices();
  if (keep.empty()) throw Error(ErrorCode::InvalidArgument, "induced subgraph on empty set");
  std::vector<int> index(g.order(), -1);
  int next = 0;
  keep.for_each([&](int v) { index[v] = next++; });
  Graph out(next);
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) out.add_edge(index[u], index[v]);
  return out;
}

int component_count_within(const Graph& g, VertexSet alive) {
  std::uint64_t left = alive.bits();
  int count = 0;
  while (left != 0) {
    std::uint64_t comp = left & (~left + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t reach = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1)
        reach |= g.neighbors(std::countr_zero(f)).bits();
      reach &= left & ~comp;
      comp |= reach;
      frontier = reach;
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

int component_count(const Graph& g, VertexSet removed) {
  if ((removed - g.vertices()).bits() != 0) {
    throw Error(ErrorCode::InvalidArgument, "removed set contains vertices outside the graph");
  }
  const VertexSet alive = g.vertices() - removed;
  if (alive.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot remove every vertex");
  }
  return component_count_within(g, alive);
}

bool is_connected(const Graph& g) { return component_count_within(g, g.vertices()) == 1; }

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  if (p <= 0.0 && n > 1) throw Error(ErrorCode::InvalidArgument, "p must be positive");
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

}  // namespace spectough
