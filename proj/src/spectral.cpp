#include "spectough/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace spectough {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
  }
}

double residual_inf(const SymMatrix& m, std::span<const double> v, double lambda) {
  double worst = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    auto row = m.row(i);
    const double mv = std::inner_product(row.begin(), row.end(), v.begin(), 0.0);
    worst = std::max(worst, std::abs(mv - lambda * v[i]));
  }
  return worst;
}

void orient_and_normalize(std::vector<double>& v) {
  const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  const double scale = (sum < 0.0 ? -1.0 : 1.0) / norm;
  for (double& x : v) x *= scale;
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
  data_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

SymMatrix SymMatrix::from_row_major(int dim, std::vector<double> data) {
  if (dim < 1 || data.size() != static_cast<std::size_t>(dim) * dim) {
    throw Error(ErrorCode::InvalidArgument, "row-major data does not match dimension");
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double a = data[static_cast<std::size_t>(i) * dim + j];
      if (!std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
      if (a != data[static_cast<std::size_t>(j) * dim + i]) {
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric at (" + std::to_string(i) +
                                                 ", " + std::to_string(j) + ")");
      }
    }
  }
  SymMatrix m(dim);
  m.data_ = std::move(data);
  return m;
}

void SymMatrix::set(int i, int j, double value) {
  data_[static_cast<std::size_t>(i) * dim_ + j] = value;
  data_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

bool SymMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return x >= 0.0; });
}

std::string SymMatrix::to_csv() const {
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

SymMatrix a_alpha(const Graph& g, double alpha) {
  check_alpha(alpha);
  const int n = g.order();
  SymMatrix m(n);
  for (int v = 0; v < n; ++v) m.set(v, v, alpha * g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, 1.0 - alpha);
  return m;
}

SpectralResult spectral_radius(const SymMatrix& m, double tol) {
  const int n = m.dim();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
  std::vector<double> vecs(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vecs[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto at = [n](std::vector<double>& x, int i, int j) -> double& {
    return x[static_cast<std::size_t>(i) * n + j];
  };

  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(a, i, j) * at(a, i, j);
    if (std::sqrt(off) <= tol) break;
    if (sweep == kJacobiMaxSweeps) {
      throw Error(ErrorCode::NotConverged, "Jacobi eigensolver did not converge in 100 sweeps");
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = at(vecs, k, p);
          const double vkq = at(vecs, k, q);
          at(vecs, k, p) = c * vkp - s * vkq;
          at(vecs, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  int top = 0;
  for (int i = 1; i < n; ++i)
    if (at(a, i, i) > at(a, top, top)) top = i;

  SpectralResult result;
  result.radius = at(a, top, top);
  result.vector.resize(n);
  for (int k = 0; k < n; ++k) result.vector[k] = at(vecs, k, top);
  orient_and_normalize(result.vector);
  result.residual = residual_inf(m, result.vector, result.radius);
  result.iterations = sweep;
  return result;
}

SpectralResult power_iteration(const SymMatrix& m, double tol, int max_iter) {
  const int n = m.dim();
  if (!m.is_nonnegative()) {
    throw Error(ErrorCode::InvalidArgument, "power iteration needs a nonnegative matrix");
  }
  // Irreducible iff the off-diagonal pattern is connected.
  std::uint64_t reached = 1;
  std::uint64_t frontier = 1;
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "power iteration supports dim <= 64");
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      const int i = std::countr_zero(f);
      for (int j = 0; j < n; ++j)
        if (j != i && m(i, j) > 0.0) next |= std::uint64_t{1} << j;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  if (reached != VertexSet::first(n).bits()) {
    throw Error(ErrorCode::Reducible, "matrix is reducible (disconnected graph)");
  }

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> mv(n);
  SpectralResult result;
  for (int it = 1; it <= max_iter; ++it) {
    for (int i = 0; i < n; ++i) {
      auto row = m.row(i);
      mv[i] = std::inner_product(row.begin(), row.end(), v.begin(), 0.0);
    }
    const double rayleigh = std::inner_product(v.begin(), v.end(), mv.begin(), 0.0);
    double res = 0.0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(mv[i] - rayleigh * v[i]));
    if (res <= tol) {
      result.radius = rayleigh;
      result.vector = v;
      result.residual = res;
      result.iterations = it;
      return result;
    }
    // Shift by +1 keeps the iteration primitive on bipartite patterns.
    for (int i = 0; i < n; ++i) v[i] += mv[i];
    orient_and_normalize(v);
  }
  throw Error(ErrorCode::NotConverged, "power iteration hit the iteration cap");
}

double rho_alpha(const Graph& g, double alpha) { return spectral_radius(a_alpha(g, alpha)).radius; }

double split_join_phi(int s, std::span<const int> parts, double alpha, double x) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "split-join polynomial needs s >= 1");
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "split-join polynomial needs at least one part");
  const double n = s + std::accumulate(parts.begin(), parts.end(), 0.0);
  auto factor = [&](int nj) { return x - s * alpha - nj + 1.0; };

  double head = x - n * alpha + s * alpha - s + 1.0;
  for (int nj : parts) head *= factor(nj);

  double tail = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    double term = parts[i];
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) term *= factor(parts[j]);
    tail += term;
  }
  return head - s * (1.0 - alpha) * (1.0 - alpha) * tail;
}

double edge_bound(int n, int m, double alpha) {
  if (alpha < 0.5 || alpha > 1.0) throw Error(ErrorCode::InvalidArgument, "edge bound needs alpha in [1/2, 1]");
  if (n < 2 || m < 1) throw Error(ErrorCode::InvalidArgument, "edge bound needs n >= 2 and m >= 1");
  return 2.0 * m * (1.0 - alpha) / (n - 1) + alpha * n - 1.0;
}

}  // namespace spectough
