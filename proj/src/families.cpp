#include "spectough/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace spectough {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::MalformedInput, "bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

// "k1=v1;k2=v2" with each key at most once.
std::map<std::string, std::string, std::less<>> parse_fields(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  while (!text.empty()) {
    const std::size_t semi = text.find(';');
    std::string_view item = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::MalformedInput, "expected key=value, got '" + std::string(item) + "'");
    }
    auto [it, inserted] = fields.emplace(std::string(trim(item.substr(0, eq))), std::string(trim(item.substr(eq + 1))));
    if (!inserted) throw Error(ErrorCode::MalformedInput, "duplicate key '" + it->first + "'");
  }
  return fields;
}

void require_keys(const std::map<std::string, std::string, std::less<>>& fields,
                  std::initializer_list<std::string_view> keys) {
  if (fields.size() != keys.size()) throw Error(ErrorCode::MalformedInput, "unexpected keys in family string");
  for (auto key : keys) {
    if (!fields.contains(key)) throw Error(ErrorCode::MalformedInput, "missing key '" + std::string(key) + "'");
  }
}

FamilyGraph build(FamilySpec spec, std::vector<std::string> warnings = {}, std::string regime = {}) {
  FamilyGraph out = split_join(spec);
  out.warnings = std::move(warnings);
  out.regime = std::move(regime);
  return out;
}

std::vector<int> with_singletons(int head, int singles) {
  std::vector<int> parts{head};
  parts.insert(parts.end(), singles, 1);
  return parts;
}

Rational one() { return Rational(1); }

QuotientMatrix to_quotient(int dim, const std::vector<Rational>& exact, std::vector<int> sizes) {
  std::vector<double> entries(exact.size());
  std::transform(exact.begin(), exact.end(), entries.begin(), [](const Rational& r) { return r.to_double(); });
  return QuotientMatrix(dim, std::move(entries), std::move(sizes));
}

void check_fragmented(int n, int delta, int s) {
  if (s < 1 || s >= delta) throw Error(ErrorCode::InvalidArgument, "fragmented join needs 1 <= s < delta");
  if (n - s - (delta + 1 - s) * (s + 1) < 1) {
    throw Error(ErrorCode::InvalidArgument, "fragmented join needs n - s - (delta+1-s)(s+1) >= 1");
  }
}

}  // namespace

int FamilySpec::order() const { return s + std::accumulate(parts.begin(), parts.end(), 0); }

void FamilySpec::validate() const {
  if (s < 0) throw Error(ErrorCode::InvalidArgument, "join size s must be >= 0");
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "family needs at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw Error(ErrorCode::InvalidArgument, "family parts must be >= 1");
    if (i > 0 && parts[i] > parts[i - 1]) throw Error(ErrorCode::InvalidArgument, "family parts must be non-increasing");
    if (parts[i] > kMaxVertices) throw Error(ErrorCode::SizeOverflow, "family order exceeds 64");
  }
  if (s > kMaxVertices || order() > kMaxVertices) throw Error(ErrorCode::SizeOverflow, "family order exceeds 64");
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto fields = parse_fields(text);
  require_keys(fields, {"s", "parts"});
  FamilySpec spec;
  spec.s = parse_int(fields.find("s")->second, "s");
  std::string_view list = fields.find("parts")->second;
  while (true) {
    const std::size_t comma = list.find(',');
    spec.parts.push_back(parse_int(list.substr(0, comma), "parts"));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  spec.validate();
  return spec;
}

std::string FamilySpec::str() const {
  std::string out = "s=" + std::to_string(s) + ";parts=";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

FamilyGraph split_join(const FamilySpec& spec) {
  spec.validate();
  Graph cliques = complete(spec.parts.front());
  for (std::size_t i = 1; i < spec.parts.size(); ++i) cliques = disjoint_union(cliques, complete(spec.parts[i]));

  std::vector<int> sizes;
  if (spec.s > 0) sizes.push_back(spec.s);
  sizes.insert(sizes.end(), spec.parts.begin(), spec.parts.end());

  FamilyGraph out{spec, spec.s > 0 ? join(complete(spec.s), cliques) : cliques, Partition::from_sizes(sizes), {}, {}};
  return out;
}

FamilyGraph scattering_extremal(int n, int delta) {
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "delta must be >= 1");
  if (n - 2 * delta - 1 < 1) throw Error(ErrorCode::InvalidArgument, "n - 2 delta - 1 must be >= 1");
  std::vector<std::string> warnings;
  const int need = std::max(4 * delta + 2, delta * delta * delta + delta);
  if (n < need) warnings.push_back("n < max{4delta+2, delta^3+delta} = " + std::to_string(need));
  return build({delta, with_singletons(n - 2 * delta - 1, delta + 1)}, std::move(warnings));
}

FamilyGraph tau_extremal(int n, int tau) {
  if (tau < 2) throw Error(ErrorCode::InvalidArgument, "integer tau must be >= 2");
  if (n - tau < 1) throw Error(ErrorCode::InvalidArgument, "n - tau must be >= 1");
  std::vector<std::string> warnings;
  const int need = 4 * tau * tau + 5 * tau + 1;
  if (n < need) warnings.push_back("n < 4tau^2+5tau+1 = " + std::to_string(need));
  return build({tau - 1, {n - tau, 1}}, std::move(warnings));
}

FamilyGraph fractional_tau_extremal(int n, int b) {
  if (b < 1) throw Error(ErrorCode::InvalidArgument, "b = 1/tau must be >= 1");
  if (n - b - 2 < 1) throw Error(ErrorCode::InvalidArgument, "n - b - 2 must be >= 1");
  std::vector<std::string> warnings;
  // n >= 2tau^2 + 5tau + 2/tau + 8 with tau = 1/b, multiplied through by b^2.
  const long long lhs = static_cast<long long>(n) * b * b;
  const long long rhs = 2 + 5LL * b + 2LL * b * b * b + 8LL * b * b;
  if (lhs < rhs) warnings.push_back("n < 2tau^2+5tau+2/tau+8 with tau = 1/" + std::to_string(b));
  return build({1, with_singletons(n - b - 2, b + 1)}, std::move(warnings), b >= 2 ? "1/tau>=2" : "1/tau=1");
}

FamilyGraph parse_extremal(std::string_view text) {
  const auto fields = parse_fields(text);
  if (fields.size() != 2 || !fields.contains("n")) {
    throw Error(ErrorCode::MalformedInput, "extremal family needs n and one of delta, tau, b");
  }
  const int n = parse_int(fields.find("n")->second, "n");
  if (auto it = fields.find("delta"); it != fields.end()) return scattering_extremal(n, parse_int(it->second, "delta"));
  if (auto it = fields.find("tau"); it != fields.end()) return tau_extremal(n, parse_int(it->second, "tau"));
  if (auto it = fields.find("b"); it != fields.end()) return fractional_tau_extremal(n, parse_int(it->second, "b"));
  throw Error(ErrorCode::MalformedInput, "extremal family needs one of delta, tau, b");
}

QuotientMatrix split_join_quotient(const FamilySpec& spec, const Rational& alpha) {
  spec.validate();
  if (spec.s < 1) throw Error(ErrorCode::InvalidArgument, "split-join quotient needs s >= 1");
  const int t = static_cast<int>(spec.parts.size());
  const int k = t + 1;
  const Rational s(spec.s);
  const Rational n(spec.order());
  const Rational beta = one() - alpha;
  std::vector<Rational> e(static_cast<std::size_t>(k) * k, Rational(0));
  e[0] = n * alpha - s * alpha + s - one();
  for (int j = 1; j <= t; ++j) {
    const Rational nj(spec.parts[j - 1]);
    e[j] = nj * beta;
    e[static_cast<std::size_t>(j) * k] = s * beta;
    e[static_cast<std::size_t>(j) * k + j] = s * alpha + nj - one();
  }
  std::vector<int> sizes{spec.s};
  sizes.insert(sizes.end(), spec.parts.begin(), spec.parts.end());
  return to_quotient(k, e, std::move(sizes));
}

QuotientMatrix split_join_quotient(const FamilySpec& spec, double alpha) {
  spec.validate();
  if (spec.s < 1) throw Error(ErrorCode::InvalidArgument, "split-join quotient needs s >= 1");
  const int t = static_cast<int>(spec.parts.size());
  const int k = t + 1;
  const double s = spec.s;
  const double n = spec.order();
  std::vector<double> e(static_cast<std::size_t>(k) * k, 0.0);
  e[0] = n * alpha - s * alpha + s - 1.0;
  for (int j = 1; j <= t; ++j) {
    const double nj = spec.parts[j - 1];
    e[j] = nj * (1.0 - alpha);
    e[static_cast<std::size_t>(j) * k] = s * (1.0 - alpha);
    e[static_cast<std::size_t>(j) * k + j] = s * alpha + nj - 1.0;
  }
  std::vector<int> sizes{spec.s};
  sizes.insert(sizes.end(), spec.parts.begin(), spec.parts.end());
  return QuotientMatrix(k, std::move(e), std::move(sizes));
}

FamilyGraph fragmented_join(int n, int delta, int s) {
  check_fragmented(n, delta, s);
  const int big = n - s - (delta + 1 - s) * (s + 1);
  const int small = delta + 1 - s;
  std::vector<int> parts(s + 1, small);
  parts.insert(big >= small ? parts.begin() : parts.end(), big);
  return split_join({s, parts});
}

Partition fragmented_join_blocks(int n, int delta, int s) {
  check_fragmented(n, delta, s);
  const int big = n - s - (delta + 1 - s) * (s + 1);
  const int small = delta + 1 - s;
  const VertexSet join_block = VertexSet::first(s);
  const VertexSet rest = VertexSet::first(n) - join_block;
  VertexSet big_block;
  if (big >= small) {
    big_block = VertexSet::first(s + big) - join_block;
  } else {
    big_block = VertexSet::first(n) - VertexSet::first(n - big);
  }
  return Partition({big_block, rest - big_block, join_block});
}

QuotientMatrix fragmented_join_quotient(int n, int delta, int s, const Rational& alpha) {
  check_fragmented(n, delta, s);
  const Rational a = alpha;
  const Rational beta = one() - a;
  const Rational rs(s);
  const Rational rn(n);
  const Rational big(n - s - (delta + 1 - s) * (s + 1));
  const Rational smalls((delta + 1 - s) * (s + 1));
  const std::vector<Rational> e{
      rn - Rational((delta + 2 - s) * (s + 1)) + a * rs, Rational(0), beta * rs,
      Rational(0), Rational(delta - s) + a * rs, beta * rs,
      beta * big, beta * smalls, a * (rn - rs) + rs - one(),
  };
  return to_quotient(3, e, {static_cast<int>(big.num()), static_cast<int>(smalls.num()), s});
}

QuotientMatrix fragmented_join_quotient(int n, int delta, int s, double alpha) {
  check_fragmented(n, delta, s);
  const double big = n - s - (delta + 1 - s) * (s + 1);
  const double smalls = (delta + 1 - s) * (s + 1);
  const double beta = 1.0 - alpha;
  std::vector<double> e{
      n - (delta + 2.0 - s) * (s + 1) + alpha * s, 0.0, beta * s,
      0.0, (delta - s) + alpha * s, beta * s,
      beta * big, beta * smalls, alpha * (n - s) + s - 1.0,
  };
  return QuotientMatrix(3, std::move(e), {static_cast<int>(big), static_cast<int>(smalls), s});
}

double threshold_rho(const FamilyGraph& family, double alpha) {
  if (family.blocks.block_count() == 0) throw Error(ErrorCode::InvalidArgument, "family graph has no block metadata");
  if (alpha < 0.0 || alpha > 1.0) throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
  if (family.spec.s == 0) {
    // Disjoint cliques: each block is its own component with radius n_j - 1.
    return family.spec.parts.front() - 1.0;
  }
  return quotient_eigen_largest(split_join_quotient(family.spec, alpha));
}

bool matches_split_join(const Graph& g, const FamilySpec& spec) {
  spec.validate();
  const int n = g.order();
  if (n != spec.order()) return false;
  if (spec.parts.size() == 1) return is_complete(g);

  VertexSet universal;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) universal.insert(v);
  if (universal.size() != spec.s) return false;

  // With two or more parts no part vertex is universal, so what remains after
  // removing the universal set must be exactly the disjoint cliques.
  VertexSet rest = g.vertices() - universal;
  std::vector<int> sizes;
  while (!rest.empty()) {
    const int v = rest.lowest();
    const VertexSet clique = (g.neighbors(v) - universal) | VertexSet::single(v);
    bool closed = true;
    clique.for_each([&](int u) {
      if (((g.neighbors(u) - universal) | VertexSet::single(u)) != clique) closed = false;
    });
    if (!closed) return false;
    sizes.push_back(clique.size());
    rest = rest - clique;
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes == spec.parts;
}

std::vector<std::vector<int>> parts_vectors(int total, int count, int floor) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int slots, int cap) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int hi = std::min(cap, remaining - floor * (slots - 1));
    for (int v = hi; v >= floor; --v) {
      if (static_cast<long long>(v) * slots < remaining) break;
      current.push_back(v);
      self(self, remaining - v, slots - 1, v);
      current.pop_back();
    }
  };
  if (count >= 1 && floor >= 1) recurse(recurse, total, count, total);
  return out;
}

}  // namespace spectough
