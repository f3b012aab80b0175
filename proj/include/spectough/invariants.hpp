#pragma once

#include <optional>

#include "spectough/graph.hpp"
#include "spectough/rational.hpp"

namespace spectough {

/// Exact cut invariants of one graph with the cut sets that attain them.
///
/// Only sets S with c(G - S) > 1 count. With no such set (complete graphs),
/// the scattering number and tau are undefined and the toughness is +infinity.
struct InvariantReport {
  int n = 0;
  std::optional<int> scattering;  // max c(G-S) - |S|
  Rational toughness;             // min |S| / c(G-S)
  std::optional<Rational> tau;    // min |S| / (c(G-S) - 1)
  std::optional<VertexSet> scattering_witness;
  std::optional<VertexSet> toughness_witness;
  std::optional<VertexSet> tau_witness;
};

/// Largest number of twin classes the cut search will enumerate (2^k subsets).
inline constexpr int kMaxCutClasses = 30;

/// All three invariants in one pass. For a disconnected graph S = {} already
/// has c(G - S) > 1, so toughness and tau come out as 0 with an empty witness.
InvariantReport compute_invariants(const Graph& g);

std::optional<int> scattering_number(const Graph& g);
/// Throws Disconnected for a disconnected graph.
Rational toughness(const Graph& g);
/// Undefined (nullopt) for complete graphs. Throws Disconnected.
std::optional<Rational> tau(const Graph& g);

/// tau(g) >= threshold; complete graphs pass every threshold.
bool is_tau_tough(const Graph& g, const Rational& threshold);
/// toughness(g) >= threshold.
bool is_t_tough(const Graph& g, const Rational& threshold);

/// Classes of vertices with equal closed neighbourhoods. Optimal cut sets are
/// always unions of whole classes.
std::vector<VertexSet> closed_twin_classes(const Graph& g);

}  // namespace spectough
