#ifndef VEECH_PF_HPP
#define VEECH_PF_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "veech/complex.hpp"
#include "veech/twist.hpp"

namespace veech {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class SolverError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// M = diag(n) A diag(n') A^T. Cylinder heights h with M h = lambda h make
/// every horizontal modulus proportional to n and every vertical one to n'.
template <typename Scalar = double>
MatrixX<Scalar> consistency_matrix(const IntMatrix &A, const TwistVector &n, const TwistVector &n_vert)
{
  if (static_cast<Eigen::Index>(n.size()) != A.rows() || static_cast<Eigen::Index>(n_vert.size()) != A.cols())
    throw std::invalid_argument("consistency_matrix: twist length does not match A");
  const MatrixX<Scalar> a = A.cast<Scalar>();
  VectorX<Scalar> dn(A.rows()), dv(A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    dn(i) = Scalar(n[static_cast<std::size_t>(i)]);
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    dv(j) = Scalar(n_vert[static_cast<std::size_t>(j)]);
  return dn.asDiagonal() * a * dv.asDiagonal() * a.transpose();
}

/// Matrices with at most MaxK rows live on the stack; the sieve solves
/// hundreds of millions of tiny eigenproblems.
template <typename Scalar, int MaxK = Eigen::Dynamic>
using BoundedMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, MaxK, MaxK>;
template <typename Scalar, int MaxK = Eigen::Dynamic>
using BoundedVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, MaxK, 1>;

template <typename Scalar, int MaxK = Eigen::Dynamic>
struct PfEigenpair
{
  Scalar value;
  BoundedVector<Scalar, MaxK> vector; ///< positive, vector(0) == 1
};

namespace detail {

template <typename Mat, typename Vec, typename Scalar>
Scalar residual(const Mat &M, const Scalar &lambda, const Vec &x)
{
  return (M * x - lambda * x).cwiseAbs().maxCoeff();
}

} // namespace detail

/// Dominant eigenpair of an irreducible nonnegative matrix.
///
/// Power iteration (M has a positive diagonal here, hence is primitive) until
/// the Collatz-Wielandt bracket min_i (Mx)_i/x_i <= lambda <= max_i (Mx)_i/x_i
/// closes, then shifted inverse iteration to polish. Throws SolverError when
/// the residual bound is not met.
template <typename Scalar = double, int MaxK = Eigen::Dynamic>
PfEigenpair<Scalar, MaxK> pf_eigen(const BoundedMatrix<Scalar, MaxK> &M, int max_iterations = 2000)
{
  using std::abs;
  using std::sqrt;
  using Vec = BoundedVector<Scalar, MaxK>;
  const Eigen::Index k = M.rows();
  if (k == 0 || M.cols() != k)
    throw std::invalid_argument("pf_eigen: matrix must be square and non-empty");
  const Scalar norm = M.cwiseAbs().rowwise().sum().maxCoeff();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  // relative to |M| |x|; x(0) == 1 but other entries may be large
  const auto tolerance = [&](const Vec &x) { return Scalar(1e-12) * norm * x.cwiseAbs().maxCoeff(); };

  if (k == 1) {
    Vec one = Vec::Ones(1);
    return {M(0, 0), one};
  }
  if (k == 2) {
    const Scalar a = M(0, 0), b = M(0, 1), c = M(1, 0), d = M(1, 1);
    if (b > Scalar(0)) {
      const Scalar half_trace = (a + d) / 2;
      const Scalar disc = sqrt((a - d) * (a - d) / 4 + b * c);
      const Scalar lambda = half_trace + disc;
      Vec x(2);
      // (a - lambda) + b x1 = 0, written to avoid cancellation
      x << Scalar(1), ((d - a) / 2 + disc) / b;
      if (detail::residual(M, lambda, x) <= tolerance(x))
        return {lambda, x};
    }
  }

  Vec x = Vec::Ones(k);
  Vec y(k);
  Scalar lambda = 0;
  bool bracketed = false;
  for (int it = 0; it < max_iterations; ++it) {
    y.noalias() = M * x;
    const Vec q = y.cwiseQuotient(x);
    const Scalar lo = q.minCoeff(), hi = q.maxCoeff();
    x = y / y(0);
    lambda = hi;
    if (hi - lo <= Scalar(64) * eps * hi) {
      bracketed = true;
      break;
    }
    if (it >= 30 && hi - lo <= Scalar(1e-6) * hi)
      break; // close enough to hand over to inverse iteration
  }
  if (!bracketed) {
    const Scalar shift = lambda * (1 + Scalar(1e-10));
    BoundedMatrix<Scalar, MaxK> shifted = M;
    shifted.diagonal().array() -= shift;
    Eigen::PartialPivLU<BoundedMatrix<Scalar, MaxK>> lu(shifted);
    for (int it = 0; it < 50; ++it) {
      y = lu.solve(x);
      y /= y(0);
      const Scalar change = (y - x).cwiseAbs().maxCoeff();
      x = y;
      if (change <= Scalar(16) * eps * x.cwiseAbs().maxCoeff())
        break;
    }
    y.noalias() = M * x;
    lambda = y.dot(x) / x.dot(x);
  }
  if ((x.array() <= Scalar(0)).any())
    throw SolverError("pf_eigen: eigenvector is not positive");
  const Scalar res = detail::residual(M, lambda, x);
  if (!(res <= tolerance(x)))
    throw SolverError("pf_eigen: no convergence (residual " + std::to_string(static_cast<double>(res)) + ")");
  return {lambda, x};
}

/// Solved Thurston-Veech geometry.
struct CandidateSurface
{
  RectangleComplex complex;
  TwistVectorPair twists;
  Eigen::VectorXd w;      ///< heights with w(0) = 1, as printed in reports
  Eigen::VectorXd h;      ///< horizontal cylinder heights, area-normalized
  Eigen::VectorXd v;      ///< vertical cylinder widths, area-normalized
  Eigen::VectorXd c;      ///< horizontal circumferences A v
  Eigen::VectorXd c_vert; ///< vertical circumferences A^T h
  double pf_eigenvalue = 0;
  double total_area = 1;
  double raw_area = 0; ///< area with heights w and widths scaled to v(0) = 1
  bool arithmetic = false;
};

/// Geometry without the complex; the hot path of the sieve.
struct Geometry
{
  Eigen::VectorXd w, h, v, c, c_vert;
  double pf_eigenvalue = 0;
  double raw_area = 0; ///< heights w, widths scaled to v(0) = 1
};

Geometry solve_raw(const IntMatrix &A, const TwistVector &n, const TwistVector &n_vert);
/// Same, reusing the storage of `out`.
void solve_raw(const IntMatrix &A, const TwistVector &n, const TwistVector &n_vert, Geometry &out);

/// Throws SolverError on eigen-solver failure.
CandidateSurface solve_geometry(const RectangleComplex &complex, const TwistVectorPair &twists);

/// Exact: the dominant eigenvalue of M is an integer with a positive rational
/// eigenvector.
bool is_arithmetic(const IntMatrix &A, const TwistVector &n, const TwistVector &n_vert);

} // namespace veech

#endif // VEECH_PF_HPP
