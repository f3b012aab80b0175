#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "spectough/spectral.hpp"

namespace spectough {

Partition::Partition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {}

Partition Partition::from_sizes(std::span<const int> sizes) {
  std::vector<VertexSet> blocks;
  int next = 0;
  for (int size : sizes) {
    if (size < 1 || next + size > kMaxVertices) {
      throw Error(ErrorCode::InvalidArgument, "block sizes must be positive and total at most 64");
    }
    blocks.emplace_back(VertexSet::first(next + size) - VertexSet::first(next));
    next += size;
  }
  return Partition(std::move(blocks));
}

std::vector<int> Partition::sizes() const {
  std::vector<int> out;
  for (VertexSet b : blocks_) out.push_back(b.size());
  return out;
}

void Partition::validate(int dim) const {
  if (blocks_.empty()) throw Error(ErrorCode::InvalidArgument, "partition has no blocks");
  VertexSet seen;
  for (VertexSet b : blocks_) {
    if (b.empty()) throw Error(ErrorCode::InvalidArgument, "partition has an empty block");
    if (!(b & seen).empty()) throw Error(ErrorCode::InvalidArgument, "partition blocks overlap");
    seen = seen | b;
  }
  if (seen != VertexSet::first(dim)) {
    throw Error(ErrorCode::InvalidArgument, "partition does not cover {0, ..., " + std::to_string(dim - 1) + "}");
  }
}

QuotientMatrix::QuotientMatrix(int dim, std::vector<double> entries, std::vector<int> block_sizes)
    : dim_(dim), entries_(std::move(entries)), sizes_(std::move(block_sizes)) {
  if (dim < 1 || entries_.size() != static_cast<std::size_t>(dim) * dim) {
    throw Error(ErrorCode::InvalidArgument, "quotient entries do not match dimension");
  }
  if (!sizes_.empty() && sizes_.size() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::InvalidArgument, "one block size per quotient row expected");
  }
  constant_.assign(entries_.size(), 1);
}

bool QuotientMatrix::equitable() const {
  return std::all_of(constant_.begin(), constant_.end(), [](char c) { return c != 0; });
}

std::string QuotientMatrix::to_csv() const {
  std::string out;
  char buf[32];
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
      if (j > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

QuotientMatrix quotient(const SymMatrix& m, const Partition& p) {
  p.validate(m.dim());
  const int k = p.block_count();
  std::vector<double> entries(static_cast<std::size_t>(k) * k);
  std::vector<char> constant(entries.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double lo = INFINITY;
      double hi = -INFINITY;
      double total = 0.0;
      p.blocks()[i].for_each([&](int v) {
        double sum = 0.0;
        p.blocks()[j].for_each([&](int u) { sum += m(v, u); });
        lo = std::min(lo, sum);
        hi = std::max(hi, sum);
        total += sum;
      });
      entries[static_cast<std::size_t>(i) * k + j] = total / p.blocks()[i].size();
      constant[static_cast<std::size_t>(i) * k + j] = (hi - lo) <= kEquitableTolerance;
    }
  }
  QuotientMatrix q(k, std::move(entries), p.sizes());
  q.constant_ = std::move(constant);
  return q;
}

namespace {

// Collatz-Wielandt bracket min_i (Bv)_i/v_i <= lambda <= max_i (Bv)_i/v_i,
// tightened by shifted power iteration.
double perron_root_bracketed(const QuotientMatrix& q) {
  const int k = q.dim();
  std::vector<double> v(k, 1.0);
  std::vector<double> w(k);
  for (int it = 0; it < 10'000'000; ++it) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (int i = 0; i < k; ++i) {
      w[i] = 0.0;
      for (int j = 0; j < k; ++j) w[i] += q(i, j) * v[j];
      lo = std::min(lo, w[i] / v[i]);
      hi = std::max(hi, w[i] / v[i]);
    }
    if (hi - lo <= 1e-13 * std::max(1.0, std::abs(hi))) return 0.5 * (lo + hi);
    double norm = 0.0;
    for (int i = 0; i < k; ++i) {
      v[i] += w[i];
      norm = std::max(norm, v[i]);
    }
    for (double& x : v) x /= norm;
  }
  throw Error(ErrorCode::NotConverged, "Perron root bracket did not close");
}

}  // namespace

double quotient_eigen_largest(const QuotientMatrix& q) {
  const int k = q.dim();
  if (!q.equitable()) throw Error(ErrorCode::NotEquitable, "quotient matrix is not equitable");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (q(i, j) < 0.0) throw Error(ErrorCode::InvalidArgument, "quotient matrix has a negative entry");

  // A quotient of a symmetric matrix satisfies n_i b_ij = n_j b_ji, so
  // N^{1/2} B N^{-1/2} is symmetric with the same spectrum.
  const auto& sizes = q.block_sizes();
  bool symmetrizable = !sizes.empty();
  for (int i = 0; i < k && symmetrizable; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double lhs = sizes[i] * q(i, j);
      const double rhs = sizes[j] * q(j, i);
      if (std::abs(lhs - rhs) > 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)})) {
        symmetrizable = false;
        break;
      }
    }
  }
  if (!symmetrizable) return perron_root_bracketed(q);

  SymMatrix s(k);
  for (int i = 0; i < k; ++i) {
    s.set(i, i, q(i, i));
    for (int j = i + 1; j < k; ++j) s.set(i, j, std::sqrt(q(i, j) * q(j, i)));
  }
  return spectral_radius(s, 1e-13).radius;
}

std::vector<double> charpoly(const QuotientMatrix& q) {
  const int k = q.dim();
  if (k > kMaxCharpolyDim) {
    throw Error(ErrorCode::TooLarge, "characteristic polynomial supports dim <= 16");
  }
  // M_1 = I, c_1 = -tr(A); M_j = A M_{j-1} + c_{j-1} I, c_j = -tr(A M_j)/j.
  std::vector<double> coeffs{1.0};
  std::vector<double> mk(static_cast<std::size_t>(k) * k, 0.0);
  double prev_c = 0.0;
  for (int j = 1; j <= k; ++j) {
    // mk <- A * mk + prev_c * I (with mk = 0 initially this gives I at j = 1)
    if (j == 1) {
      for (int i = 0; i < k; ++i) mk[static_cast<std::size_t>(i) * k + i] = 1.0;
    } else {
      std::vector<double> next(mk.size(), 0.0);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
          double sum = 0.0;
          for (int l = 0; l < k; ++l) sum += q(r, l) * mk[static_cast<std::size_t>(l) * k + c];
          next[static_cast<std::size_t>(r) * k + c] = sum;
        }
      for (int i = 0; i < k; ++i) next[static_cast<std::size_t>(i) * k + i] += prev_c;
      mk = std::move(next);
    }
    double trace = 0.0;
    for (int r = 0; r < k; ++r)
      for (int l = 0; l < k; ++l) trace += q(r, l) * mk[static_cast<std::size_t>(l) * k + r];
    prev_c = -trace / j;
    coeffs.push_back(prev_c);
  }
  return coeffs;
}

double eval_poly(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

}  // namespace spectough
