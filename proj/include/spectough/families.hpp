#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spectough/graph.hpp"
#include "spectough/rational.hpp"
#include "spectough/spectral.hpp"

namespace spectough {

/// K_s v (K_{n_1} u K_{n_2} u ... u K_{n_t}) with n_1 >= ... >= n_t >= 1.
struct FamilySpec {
  int s = 0;
  std::vector<int> parts;

  int order() const;
  /// Throws InvalidArgument when s < 0, parts is empty, a part is < 1, parts
  /// increase, or the order exceeds 64.
  void validate() const;

  /// "s=2;parts=5,1,1,1"
  static FamilySpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// A family member together with its block structure: the join block (when
/// s > 0) followed by one block per part, labelled consecutively.
struct FamilyGraph {
  FamilySpec spec;
  Graph graph;
  Partition blocks;
  /// Theorem-precondition notes; a non-empty list means the construction is
  /// outside the stated regime but still valid as a graph.
  std::vector<std::string> warnings;
  /// Which hypothesis regime applies, e.g. "1/tau>=2".
  std::string regime;
};

FamilyGraph split_join(const FamilySpec& spec);

/// K_delta v (K_{n-2delta-1} u (delta+1) K_1): the graph with minimum degree
/// delta whose radius is the scattering-number threshold.
FamilyGraph scattering_extremal(int n, int delta);
/// K_{tau-1} v (K_{n-tau} u K_1), integer tau >= 2.
FamilyGraph tau_extremal(int n, int tau);
/// K_1 v (K_{n-b-2} u (b+1) K_1) with b = 1/tau a positive integer.
FamilyGraph fractional_tau_extremal(int n, int b);

/// Parses "n=6;delta=1", "n=16;tau=3" or "n=12;b=2" into the matching extremal graph.
FamilyGraph parse_extremal(std::string_view text);

/// Equitable (t+1)x(t+1) quotient of A_alpha(split_join(spec)) over its
/// blocks: join block first, then the parts in order. Requires s >= 1.
QuotientMatrix split_join_quotient(const FamilySpec& spec, const Rational& alpha);
QuotientMatrix split_join_quotient(const FamilySpec& spec, double alpha);

/// K_s v (K_{n-s-(delta+1-s)(s+1)} u (s+1) K_{delta+1-s}) for 1 <= s < delta.
FamilyGraph fragmented_join(int n, int delta, int s);
/// Blocks of fragmented_join in the order {big clique}, {all small cliques}, {join}.
Partition fragmented_join_blocks(int n, int delta, int s);
/// 3x3 equitable quotient of A_alpha(fragmented_join(n, delta, s)) over fragmented_join_blocks.
QuotientMatrix fragmented_join_quotient(int n, int delta, int s, const Rational& alpha);
QuotientMatrix fragmented_join_quotient(int n, int delta, int s, double alpha);

/// rho_alpha of a family member computed from its small quotient.
double threshold_rho(const FamilyGraph& family, double alpha);

/// Exact structural test g ~= split_join(spec) at any order. With two or more
/// parts the join block is exactly the set of universal vertices; a single
/// part means g must be complete.
bool matches_split_join(const Graph& g, const FamilySpec& spec);

/// All non-increasing vectors of `count` parts, each >= floor, summing to total.
std::vector<std::vector<int>> parts_vectors(int total, int count, int floor);

}  // namespace spectough
