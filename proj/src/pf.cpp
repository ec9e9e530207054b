#include "veech/pf.hpp"

namespace veech {

void solve_raw(const IntMatrix &A, const TwistVector &n, const TwistVector &n_vert, Geometry &g)
{
  const Eigen::Index k = A.rows(), kv = A.cols();
  if (static_cast<Eigen::Index>(n.size()) != k || static_cast<Eigen::Index>(n_vert.size()) != kv)
    throw std::invalid_argument("solve_raw: twist length does not match A");
  if (k > kMaxPoints || kv > kMaxPoints)
    throw std::invalid_argument("solve_raw: too many cylinders");
  // M = diag(n) A diag(n') A^T, assembled without temporaries
  BoundedMatrix<double, kMaxPoints> M(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index l = 0; l < k; ++l) {
      long long sum = 0;
      for (Eigen::Index j = 0; j < kv; ++j)
        sum += static_cast<long long>(A(i, j)) * A(l, j) * n_vert[static_cast<std::size_t>(j)];
      M(i, l) = static_cast<double>(sum * n[static_cast<std::size_t>(i)]);
    }
  const auto pf = pf_eigen<double, kMaxPoints>(M);
  g.pf_eigenvalue = pf.value;
  g.w = pf.vector;
  g.c_vert.resize(kv);
  g.v.resize(kv);
  for (Eigen::Index j = 0; j < kv; ++j) {
    double sum = 0;
    for (Eigen::Index i = 0; i < k; ++i)
      sum += A(i, j) * g.w(i);
    g.c_vert(j) = sum;
    g.v(j) = n_vert[static_cast<std::size_t>(j)] * sum;
  }
  g.c.resize(k);
  double area = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    double sum = 0;
    for (Eigen::Index j = 0; j < kv; ++j)
      sum += A(i, j) * g.v(j);
    g.c(i) = sum;
    area += g.w(i) * sum;
  }
  g.raw_area = area / g.v(0);
  const double s = 1.0 / std::sqrt(area);
  g.h = g.w * s;
  g.v *= s;
  g.c *= s;
  g.c_vert *= s;
}

Geometry solve_raw(const IntMatrix &A, const TwistVector &n, const TwistVector &n_vert)
{
  Geometry g;
  solve_raw(A, n, n_vert, g);
  return g;
}

CandidateSurface solve_geometry(const RectangleComplex &complex, const TwistVectorPair &twists)
{
  auto g = solve_raw(complex.A, twists.horizontal, twists.vertical);
  CandidateSurface s;
  s.complex = complex;
  s.twists = twists;
  s.w = std::move(g.w);
  s.h = std::move(g.h);
  s.v = std::move(g.v);
  s.c = std::move(g.c);
  s.c_vert = std::move(g.c_vert);
  s.pf_eigenvalue = g.pf_eigenvalue;
  s.raw_area = g.raw_area;
  s.total_area = s.h.dot(complex.A.cast<double>() * s.v);
  s.arithmetic = is_arithmetic(complex.A, twists.horizontal, twists.vertical);
  return s;
}

} // namespace veech
