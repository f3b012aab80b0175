#include <algorithm>
#include <map>

#include "spectough/graph.hpp"

namespace spectough {

namespace {

using Cells = std::vector<std::uint64_t>;

// Splits cells until every vertex of a cell has the same number of neighbours
// in every other cell. Sub-cells are ordered by that count, so the result only
// depends on the structure of g and the incoming cell order.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cells.size() && !changed; ++i) {
      if (std::popcount(cells[i]) < 2) continue;
      for (std::size_t j = 0; j < cells.size() && !changed; ++j) {
        std::map<int, std::uint64_t> by_count;
        for (std::uint64_t b = cells[i]; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          by_count[std::popcount(g.neighbors(v).bits() & cells[j])] |= b & (~b + 1);
        }
        if (by_count.size() < 2) continue;
        Cells split;
        split.reserve(by_count.size());
        for (const auto& [count, members] : by_count) split.push_back(members);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), split.begin(), split.end());
        changed = true;
      }
    }
  }
}

bool twins(const Graph& g, int u, int v) {
  const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  return (g.neighbors(u).bits() & mask) == (g.neighbors(v).bits() & mask);
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Cells cells{g_.vertices().bits()};
    descend(cells);
    return best_order_;
  }

 private:
  void descend(Cells cells) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](std::uint64_t c) { return std::popcount(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (std::uint64_t b = cells[t]; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      // Swapping twins is an automorphism fixing everything individualized so
      // far, so their subtrees produce the same certificates.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g_, u, v); })) continue;
      tried.push_back(v);
      Cells next = cells;
      const std::uint64_t bit = std::uint64_t{1} << v;
      next[t] &= ~bit;
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(t), bit);
      descend(std::move(next));
    }
  }

  void leaf(const Cells& cells) {
    const int n = g_.order();
    std::vector<int> order(n);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) {
      order[i] = std::countr_zero(cells[i]);
      position[order[i]] = i;
    }
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i) {
      g_.neighbors(order[i]).for_each([&](int w) { rows[i] |= std::uint64_t{1} << (n - 1 - position[w]); });
    }
    if (best_order_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = std::move(order);
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> best_order_;
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.order() > kMaxExactIsomorphismOrder) {
    throw Error(ErrorCode::TooLarge, "exact canonical labeling supports n <= 12, got " +
                                         std::to_string(g.order()));
  }
  const std::vector<int> order = CanonicalSearch(g).run();
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<int>(i);
  return relabel(g, perm);
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  if (g1.degree_sequence() != g2.degree_sequence()) return false;
  return canonical_graph(g1) == canonical_graph(g2);
}

}  // namespace spectough
