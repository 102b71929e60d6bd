#ifndef HLGAP_MATRIX_KERNEL_HPP
#define HLGAP_MATRIX_KERNEL_HPP

// Dense symmetric linear algebra for small (<= ~30x30) adjacency-sized
// matrices: cyclic Jacobi eigensolver, spectral inversion, PSD tests, the
// Loewner order and Schur-complement block inversion.
//
// Everything is templated on the scalar type; Eigen is used for storage and
// expression arithmetic only. The eigensolver itself is the Jacobi method below.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>
#include <sstream>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hlgap/errors.hpp"

namespace hlgap {

using Index = Eigen::Index;

/// Rectangular dense block (H, off-diagonal pieces of a block matrix, Q, Z).
template <typename Scalar>
using Block = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Derived>
typename Derived::Scalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return m.size() == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff();
}

/// Dense real symmetric matrix. Symmetry is exact: entries(i,j) and
/// entries(j,i) hold the same bits.
template <typename Scalar>
class SymMatrix {
 public:
  using Dense = Block<Scalar>;

  /// Rejects non-square, empty or asymmetric input.
  explicit SymMatrix(Dense m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
      std::ostringstream os;
      os << "SymMatrix requires a non-empty square matrix, got " << m_.rows()
         << "x" << m_.cols();
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    for (Index j = 0; j < m_.cols(); ++j) {
      for (Index i = j + 1; i < m_.rows(); ++i) {
        if (m_(i, j) != m_(j, i)) {
          std::ostringstream os;
          os << "matrix is not symmetric at (" << i << "," << j << ")";
          throw Error(ErrorCode::NotSymmetric, os.str());
        }
      }
    }
  }

  /// Averages m with its transpose; used for computed products whose
  /// symmetry only holds up to rounding.
  template <typename Derived>
  static SymMatrix symmetrized(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "symmetrized: matrix is not square");
    }
    Dense s = (m + m.transpose()) / Scalar(2);
    return SymMatrix(std::move(s));
  }

  static SymMatrix identity(Index n) { return SymMatrix(Dense::Identity(n, n)); }
  static SymMatrix zero(Index n) { return SymMatrix(Dense::Zero(n, n)); }
  static SymMatrix diagonal(const Vector<Scalar>& d) {
    return SymMatrix(Dense(d.asDiagonal()));
  }

  Index size() const { return m_.rows(); }
  Scalar operator()(Index i, Index j) const { return m_(i, j); }
  const Dense& dense() const { return m_; }

  /// Largest absolute entry.
  Scalar max_abs() const { return hlgap::max_abs(m_); }
  /// max(1, max_abs()), the scale used by every hybrid tolerance here.
  Scalar scale() const { return std::max(Scalar(1), max_abs()); }

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    check_same_size(a, b);
    return SymMatrix(a.m_ + b.m_);
  }
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    check_same_size(a, b);
    return SymMatrix(a.m_ - b.m_);
  }
  friend SymMatrix operator-(const SymMatrix& a) { return SymMatrix(-a.m_); }
  friend SymMatrix operator*(Scalar c, const SymMatrix& a) {
    return SymMatrix(c * a.m_);
  }
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.size() == b.size() && a.m_ == b.m_;
  }

 private:
  static void check_same_size(const SymMatrix& a, const SymMatrix& b) {
    if (a.size() != b.size()) {
      std::ostringstream os;
      os << "dimension mismatch: " << a.size() << " vs " << b.size();
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
  }

  Dense m_;
};

template <typename Scalar>
struct EigenSystem {
  Vector<Scalar> values;  // descending
  Block<Scalar> vectors;  // column k pairs with values(k)
};

namespace detail {

inline constexpr int kMaxJacobiSweeps = 100;

template <typename Scalar>
Scalar off_diagonal_norm(const Block<Scalar>& a) {
  Scalar sum(0);
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = j + 1; i < a.rows(); ++i) sum += 2 * a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// Applies the rotation that annihilates a(p,q) to a (both sides) and v (right).
template <typename Scalar>
void jacobi_rotate(Block<Scalar>& a, Block<Scalar>& v, Index p, Index q) {
  using std::abs;
  using std::hypot;
  const Scalar apq = a(p, q);
  const Scalar tau = (a(q, q) - a(p, p)) / (2 * apq);
  const Scalar t = (tau >= 0 ? Scalar(1) : Scalar(-1)) /
                   (abs(tau) + hypot(Scalar(1), tau));
  const Scalar c = Scalar(1) / hypot(Scalar(1), t);
  const Scalar s = t * c;

  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    const Scalar akp = a(k, p);
    const Scalar akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Index k = 0; k < n; ++k) {
    const Scalar apk = a(p, k);
    const Scalar aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = Scalar(0);
  a(q, p) = Scalar(0);
  for (Index k = 0; k < n; ++k) {
    const Scalar vkp = v(k, p);
    const Scalar vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace detail

/// Cyclic Jacobi eigendecomposition. Sweeps stop once the off-diagonal
/// Frobenius norm drops to 1e-12 * ||M||_F; more than 100 sweeps is reported
/// as ErrorCode::InternalError.
template <typename Scalar>
EigenSystem<Scalar> sym_eigen(const SymMatrix<Scalar>& m) {
  const Index n = m.size();
  Block<Scalar> a = m.dense();
  Block<Scalar> v = Block<Scalar>::Identity(n, n);
  const Scalar threshold = Scalar(1e-12) * a.norm();

  bool converged = false;
  for (int sweep = 0; sweep <= detail::kMaxJacobiSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == detail::kMaxJacobiSweeps) break;
    for (Index p = 0; p + 1 < n; ++p)
      for (Index q = p + 1; q < n; ++q)
        if (a(p, q) != Scalar(0)) detail::jacobi_rotate(a, v, p, q);
  }
  if (!converged) {
    throw Error(ErrorCode::InternalError,
                "Jacobi eigensolver exceeded the sweep limit");
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return a(i, i) > a(j, j); });

  EigenSystem<Scalar> es{Vector<Scalar>(n), Block<Scalar>(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    es.values(k) = a(src, src);
    es.vectors.col(k) = v.col(src);
  }
  return es;
}

template <typename Scalar>
Vector<Scalar> eigenvalues(const SymMatrix<Scalar>& m) {
  return sym_eigen(m).values;
}

template <typename Scalar>
Scalar min_eigenvalue(const SymMatrix<Scalar>& m) {
  const auto values = eigenvalues(m);
  return values(values.size() - 1);
}

/// Threshold on the smallest |eigenvalue| below which a matrix is singular.
template <typename Scalar>
Scalar zero_threshold(const SymMatrix<Scalar>& m) {
  return Scalar(1e-9) * m.scale();
}

template <typename Scalar>
Scalar determinant(const SymMatrix<Scalar>& m) {
  return eigenvalues(m).prod();
}

/// Inverse through the eigendecomposition, V diag(1/lambda) V^T.
template <typename Scalar>
SymMatrix<Scalar> invert(const SymMatrix<Scalar>& m) {
  const auto es = sym_eigen(m);
  const Scalar smallest = es.values.cwiseAbs().minCoeff();
  if (smallest < zero_threshold(m)) {
    std::ostringstream os;
    os << "matrix is singular: smallest |eigenvalue| = " << smallest;
    throw Error(ErrorCode::SingularMatrix, os.str());
  }
  const Vector<Scalar> inv = es.values.cwiseInverse();
  return SymMatrix<Scalar>::symmetrized(es.vectors * inv.asDiagonal() *
                                        es.vectors.transpose());
}

/// lambda_min(M) >= -tol * max(1, ||M||_max).
template <typename Scalar>
bool is_psd(const SymMatrix<Scalar>& m, Scalar tol) {
  return min_eigenvalue(m) >= -tol * m.scale();
}

/// A <= B in the Loewner order, i.e. B - A is PSD.
template <typename Scalar>
bool loewner_leq(const SymMatrix<Scalar>& a, const SymMatrix<Scalar>& b,
                 Scalar tol) {
  return is_psd(b - a, tol);
}

namespace detail {

template <typename Scalar>
void check_block_dims(const SymMatrix<Scalar>& a, const SymMatrix<Scalar>& b,
                      const Block<Scalar>& h) {
  if (h.rows() != a.size() || h.cols() != b.size()) {
    std::ostringstream os;
    os << "H is " << h.rows() << "x" << h.cols() << " but A is " << a.size()
       << "x" << a.size() << " and B is " << b.size() << "x" << b.size();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

}  // namespace detail

/// The (n+m)-square matrix [[A, H], [H^T, B]].
template <typename Scalar>
SymMatrix<Scalar> assemble(const SymMatrix<Scalar>& a,
                           const SymMatrix<Scalar>& b,
                           const std::type_identity_t<Block<Scalar>>& h) {
  detail::check_block_dims(a, b, h);
  const Index n = a.size();
  const Index m = b.size();
  Block<Scalar> c(n + m, n + m);
  c.topLeftCorner(n, n) = a.dense();
  c.topRightCorner(n, m) = h;
  c.bottomLeftCorner(m, n) = h.transpose();
  c.bottomRightCorner(m, m) = b.dense();
  return SymMatrix<Scalar>(std::move(c));
}

template <typename Scalar>
SymMatrix<Scalar> block_diagonal(const SymMatrix<Scalar>& a,
                                 const SymMatrix<Scalar>& b) {
  return assemble(a, b, Block<Scalar>::Zero(a.size(), b.size()));
}

/// S = A - H B^{-1} H^T.
template <typename Scalar>
SymMatrix<Scalar> schur_complement(const SymMatrix<Scalar>& a,
                                   const SymMatrix<Scalar>& b,
                                   const std::type_identity_t<Block<Scalar>>& h) {
  detail::check_block_dims(a, b, h);
  const auto b_inv = invert(b);
  return SymMatrix<Scalar>::symmetrized(a.dense() -
                                        h * b_inv.dense() * h.transpose());
}

/// Inverse of [[A, H], [H^T, B]] assembled from S^{-1} and B^{-1}.
template <typename Scalar>
SymMatrix<Scalar> block_inverse(const SymMatrix<Scalar>& a,
                                const SymMatrix<Scalar>& b,
                                const std::type_identity_t<Block<Scalar>>& h) {
  detail::check_block_dims(a, b, h);
  const Index n = a.size();
  const Index m = b.size();
  const auto b_inv = invert(b);
  const auto s_inv = invert(SymMatrix<Scalar>::symmetrized(
      a.dense() - h * b_inv.dense() * h.transpose()));
  const Block<Scalar> h_binv = h * b_inv.dense();
  const Block<Scalar> k = s_inv.dense() * h_binv;  // S^{-1} H B^{-1}

  Block<Scalar> c(n + m, n + m);
  c.topLeftCorner(n, n) = s_inv.dense();
  c.topRightCorner(n, m) = -k;
  c.bottomLeftCorner(m, n) = -k.transpose();
  c.bottomRightCorner(m, m) = b_inv.dense() + h_binv.transpose() * k;
  return SymMatrix<Scalar>::symmetrized(c);
}

/// Q = [[I, -H B^{-1}], [0, I]], so that C^{-1} = Q^T diag(S^{-1}, B^{-1}) Q.
template <typename Scalar>
Block<Scalar> schur_q(const std::type_identity_t<Block<Scalar>>& h,
                      const SymMatrix<Scalar>& b_inv) {
  const Index n = h.rows();
  const Index m = h.cols();
  Block<Scalar> q = Block<Scalar>::Identity(n + m, n + m);
  q.topRightCorner(n, m) = -(h * b_inv.dense());
  return q;
}

/// Z = Q^{-1} = [[I, H B^{-1}], [0, I]].
template <typename Scalar>
Block<Scalar> schur_z(const std::type_identity_t<Block<Scalar>>& h,
                      const SymMatrix<Scalar>& b_inv) {
  const Index n = h.rows();
  const Index m = h.cols();
  Block<Scalar> z = Block<Scalar>::Identity(n + m, n + m);
  z.topRightCorner(n, m) = h * b_inv.dense();
  return z;
}

using SymMatrixd = SymMatrix<double>;
using Blockd = Block<double>;
using Vectord = Vector<double>;
using EigenSystemd = EigenSystem<double>;

}  // namespace hlgap

#endif  // HLGAP_MATRIX_KERNEL_HPP
