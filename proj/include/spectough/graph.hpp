#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectough/error.hpp"

namespace spectough {

inline constexpr int kMaxVertices = 64;

/// A subset of the vertices of a host graph, stored as one 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  std::vector<int> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected simple graph on at most 64 vertices, one adjacency bitset per vertex.
class Graph {
 public:
  /// Edgeless graph on n vertices; 1 <= n <= 64.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  VertexSet vertices() const { return VertexSet::first(n_); }
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// Constructors. Vertex labels of a union or join keep g1's vertices first,
// then g2's shifted by g1.order().
Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// perm[v] is the new label of vertex v.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// Number of connected components of g - removed. removed must leave at least one vertex.
int component_count(const Graph& g, VertexSet removed = {});
/// Same count restricted to the vertices in `alive`, no validation. Hot path for cut searches.
int component_count_within(const Graph& g, VertexSet alive);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

// graph6 (standard encoding, ASCII offset 63) and plain edge lists.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
/// First line "n", then one "u v" pair per line, 0-indexed. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

inline constexpr int kMaxExactIsomorphismOrder = 12;

/// Canonical relabeling; equal for two graphs iff they are isomorphic. n <= 12.
Graph canonical_graph(const Graph& g);
/// graph6 string of canonical_graph(g).
std::string canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g1, const Graph& g2);

inline constexpr int kMaxEnumerationOrder = 7;

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices (n <= 7), ordered by edge count then graph6 label.
std::vector<Graph> enumerate_connected(int n);
/// Same, for all graphs (connected or not).
std::vector<Graph> enumerate_graphs(int n);
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);

/// G(n, p) sample.
Graph random_graph(int n, double p, std::mt19937_64& rng);
/// G(n, p) samples until one is connected.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

}  // namespace spectough
