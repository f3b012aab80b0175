#pragma once

#include <span>
#include <string>
#include <vector>

#include "spectough/graph.hpp"

namespace spectough {

/// Dense real symmetric matrix, row-major.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);
  /// Throws NotSymmetric unless data[i*dim+j] == data[j*dim+i] for all i, j.
  static SymMatrix from_row_major(int dim, std::vector<double> data);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, double value);
  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  bool is_nonnegative() const;

  /// One row per line, 17 significant digits.
  std::string to_csv() const;

 private:
  int dim_;
  std::vector<double> data_;
};

/// Ordered list of disjoint, nonempty vertex blocks covering {0, ..., dim-1}.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<VertexSet> blocks);
  /// Consecutive blocks of the given sizes.
  static Partition from_sizes(std::span<const int> sizes);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  std::vector<int> sizes() const;
  /// Throws InvalidArgument unless the blocks partition {0, ..., dim-1}.
  void validate(int dim) const;

 private:
  std::vector<VertexSet> blocks_;
};

/// Block-averaged row sums of a matrix over a partition.
class QuotientMatrix {
 public:
  /// Closed-form quotient, assumed equitable by construction. block_sizes may
  /// be empty when the host partition is unknown.
  QuotientMatrix(int dim, std::vector<double> entries, std::vector<int> block_sizes = {});

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const std::vector<int>& block_sizes() const { return sizes_; }
  bool row_sums_constant(int i, int j) const { return constant_[static_cast<std::size_t>(i) * dim_ + j]; }
  bool equitable() const;

  std::string to_csv() const;

 private:
  friend QuotientMatrix quotient(const SymMatrix& m, const Partition& p);

  int dim_;
  std::vector<double> entries_;
  std::vector<int> sizes_;
  std::vector<char> constant_;
};

struct SpectralResult {
  double radius = 0.0;
  std::vector<double> vector;  // unit 2-norm, oriented to have positive sum
  double residual = 0.0;       // max_i |(Mv - radius v)_i|
  int iterations = 0;
};

inline constexpr double kJacobiTolerance = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kEquitableTolerance = 1e-12;

/// A_alpha(G) = alpha D(G) + (1 - alpha) A(G), alpha in [0, 1].
SymMatrix a_alpha(const Graph& g, double alpha);

/// Largest eigenvalue and its eigenvector by cyclic Jacobi rotation; converged
/// when the off-diagonal Frobenius norm drops to tol.
SpectralResult spectral_radius(const SymMatrix& m, double tol = kJacobiTolerance);

/// Shifted power iteration on M + I for nonnegative irreducible M. Stops when
/// the residual drops to tol. Throws Reducible when M's pattern is disconnected.
SpectralResult power_iteration(const SymMatrix& m, double tol = 1e-10, int max_iter = 2'000'000);

/// rho_alpha(G) through the dense solver.
double rho_alpha(const Graph& g, double alpha);

QuotientMatrix quotient(const SymMatrix& m, const Partition& p);

/// Largest eigenvalue of an equitable nonnegative quotient, which equals the
/// spectral radius of the host matrix.
double quotient_eigen_largest(const QuotientMatrix& q);

inline constexpr int kMaxCharpolyDim = 16;

/// det(xI - Q) as monic coefficients, highest degree first (Faddeev-LeVerrier).
std::vector<double> charpoly(const QuotientMatrix& q);
/// Horner evaluation of coefficients given highest degree first.
double eval_poly(std::span<const double> coeffs, double x);

/// Closed-form characteristic polynomial of the equitable quotient of
/// A_alpha(K_s v (K_{n_1} u ... u K_{n_t}))
///   (x - n alpha + s alpha - s + 1) prod_j (x - s alpha - n_j + 1)
///     - s (1 - alpha)^2 sum_i n_i prod_{j != i} (x - s alpha - n_j + 1),
/// with n = s + sum n_i. Requires s >= 1 and at least one part.
double split_join_phi(int s, std::span<const int> parts, double alpha, double x);

/// Upper bound 2m(1 - alpha)/(n - 1) + alpha n - 1 on rho_alpha for graphs
/// without isolated vertices; alpha in [1/2, 1], n >= 2, m >= 1.
double edge_bound(int n, int m, double alpha);

}  // namespace spectough
