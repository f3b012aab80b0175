#include "spectough/invariants.hpp"

#include <map>

namespace spectough {

namespace {

// a/b <= r for finite r, b > 0.
bool ratio_at_most(std::int64_t a, std::int64_t b, const Rational& r) {
  if (r.is_infinite()) return true;
  return static_cast<wide_int>(a) * r.den() <= static_cast<wide_int>(r.num()) * b;
}

// a/b < r for finite r, b > 0.
bool ratio_below(std::int64_t a, std::int64_t b, const Rational& r) {
  if (r.is_infinite()) return true;
  return static_cast<wide_int>(a) * r.den() < static_cast<wide_int>(r.num()) * b;
}

struct MinRatio {
  Rational value = Rational::infinity();
  std::optional<VertexSet> witness;

  void offer(std::int64_t num, std::int64_t den, VertexSet s) {
    if (ratio_below(num, den, value) ||
        (witness && ratio_at_most(num, den, value) && s.bits() < witness->bits())) {
      value = Rational(num, den);
      witness = s;
    }
  }
};

struct MaxExcess {
  std::optional<int> value;
  std::optional<VertexSet> witness;

  void offer(int excess, VertexSet s) {
    if (!value || excess > *value || (excess == *value && s.bits() < witness->bits())) {
      value = excess;
      witness = s;
    }
  }
};

}  // namespace

std::vector<VertexSet> closed_twin_classes(const Graph& g) {
  std::map<std::uint64_t, VertexSet> by_closed_nbhd;
  std::vector<std::uint64_t> order;
  for (int v = 0; v < g.order(); ++v) {
    const std::uint64_t closed = g.neighbors(v).bits() | (std::uint64_t{1} << v);
    auto [it, inserted] = by_closed_nbhd.try_emplace(closed);
    if (inserted) order.push_back(closed);
    it->second.insert(v);
  }
  std::vector<VertexSet> classes;
  classes.reserve(order.size());
  for (std::uint64_t key : order) classes.push_back(by_closed_nbhd[key]);
  return classes;
}

// Removing only part of a twin class leaves the component structure of G - S
// unchanged (the survivors keep the class's neighbourhood), so every optimum
// is a union of whole classes and the search runs over 2^k class subsets.
InvariantReport compute_invariants(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  const bool connected = is_connected(g);
  const std::vector<VertexSet> classes = closed_twin_classes(g);
  const int k = static_cast<int>(classes.size());
  if (k > kMaxCutClasses) {
    throw Error(ErrorCode::TooLarge, "cut search over " + std::to_string(k) +
                                         " twin classes exceeds the limit of 30");
  }

  MaxExcess scattering;
  MinRatio tough;
  MinRatio tau_min;

  if (!connected) {
    const int c = component_count_within(g, all);
    scattering.offer(c, VertexSet{});
    tough.offer(0, c, VertexSet{});
    tau_min.offer(0, c - 1, VertexSet{});
  }

  VertexSet s;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << k); ++step) {
    // Gray code: exactly one class enters or leaves S per step.
    s = VertexSet(s.bits() ^ classes[std::countr_zero(step)].bits());
    const VertexSet alive = all - s;
    const int removed = s.size();
    const int left = alive.size();
    if (left < 2) continue;

    // c(G - S) <= left bounds every objective before counting components.
    const bool want_s = !scattering.value || left - removed >= *scattering.value;
    const bool want_t = ratio_at_most(removed, left, tough.value);
    const bool want_tau = ratio_at_most(removed, left - 1, tau_min.value);
    if (!want_s && !want_t && !want_tau) continue;

    const int c = component_count_within(g, alive);
    if (c < 2) continue;
    scattering.offer(c - removed, s);
    tough.offer(removed, c, s);
    tau_min.offer(removed, c - 1, s);
  }

  InvariantReport report;
  report.n = n;
  report.scattering = scattering.value;
  report.scattering_witness = scattering.witness;
  report.toughness = tough.value;
  report.toughness_witness = tough.witness;
  if (tau_min.witness) report.tau = tau_min.value;
  report.tau_witness = tau_min.witness;
  return report;
}

std::optional<int> scattering_number(const Graph& g) { return compute_invariants(g).scattering; }

Rational toughness(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "toughness needs a connected graph");
  return compute_invariants(g).toughness;
}

std::optional<Rational> tau(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "tau needs a connected graph");
  return compute_invariants(g).tau;
}

bool is_tau_tough(const Graph& g, const Rational& threshold) {
  const std::optional<Rational> value = tau(g);
  return !value || *value >= threshold;
}

bool is_t_tough(const Graph& g, const Rational& threshold) { return toughness(g) >= threshold; }

}  // namespace spectough
