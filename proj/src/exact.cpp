#include "veech/exact.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace veech {

namespace {

// x^2 = y with y >= 0, exact.
bool is_square(long long y)
{
  if (y < 0)
    return false;
  auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(y))));
  while (r > 0 && r * r > y)
    --r;
  while ((r + 1) * (r + 1) <= y)
    ++r;
  return r * r == y;
}

using QuadMatrix = std::vector<std::vector<QuadNumber>>;

// Kernel vector with x(0) = 1 of a square system whose kernel is a line.
std::optional<std::vector<QuadNumber>> kernel_line(QuadMatrix m, long long d)
{
  const std::size_t k = m.size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < k; ++col) {
    std::size_t p = row;
    while (p < k && m[p][col].is_zero())
      ++p;
    if (p == k)
      continue;
    std::swap(m[p], m[row]);
    const QuadNumber inv = QuadNumber::rational(1, d) / m[row][col];
    for (auto &x : m[row])
      x = x * inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || m[r][col].is_zero())
        continue;
      const QuadNumber f = m[r][col];
      for (std::size_t c = 0; c < k; ++c)
        m[r][c] = m[r][c] - f * m[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  if (pivot_col.size() + 1 != k)
    return std::nullopt;
  std::size_t free_col = 0;
  while (free_col < pivot_col.size() && pivot_col[free_col] == static_cast<int>(free_col))
    ++free_col;
  std::vector<QuadNumber> x(k, QuadNumber::rational(0, d));
  x[free_col] = QuadNumber::rational(1, d);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[static_cast<std::size_t>(pivot_col[r])] = -m[r][free_col];
  if (x[0].is_zero())
    return std::nullopt;
  const QuadNumber scale = x[0];
  for (auto &e : x)
    e = e / scale;
  return x;
}

QuadMatrix shifted_matrix(const MatrixX<long long> &M, const QuadNumber &lambda)
{
  const auto k = static_cast<std::size_t>(M.rows());
  QuadMatrix m(k, std::vector<QuadNumber>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      m[i][j] = QuadNumber::rational(BigRational(M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))),
                                     lambda.d());
      if (i == j)
        m[i][j] = m[i][j] - lambda;
    }
  return m;
}

QuadNumber exact_lambda(const QuadraticEigenvalue &q)
{
  if (q.disc == 0)
    return QuadNumber::rational(BigRational(q.trace, 2));
  return {BigRational(q.trace, 2), BigRational(1, 2), q.disc};
}

} // namespace

IntPoly characteristic_polynomial(const MatrixX<long long> &M)
{
  const auto k = static_cast<int>(M.rows());
  using BigMatrix = std::vector<std::vector<BigInt>>;
  const auto kk = static_cast<std::size_t>(k);
  BigMatrix m(kk, std::vector<BigInt>(kk));
  for (std::size_t i = 0; i < kk; ++i)
    for (std::size_t j = 0; j < kk; ++j)
      m[i][j] = M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  IntPoly c(kk + 1);
  c[kk] = 1;
  BigMatrix cur(kk, std::vector<BigInt>(kk)); // M_0 = 0
  for (int step = 1; step <= k; ++step) {
    // M_step = M * M_{step-1} + c_{k-step+1} I
    BigMatrix next(kk, std::vector<BigInt>(kk));
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t j = 0; j < kk; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < kk; ++l)
          s += m[i][l] * cur[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < kk; ++i)
      next[i][i] += c[kk - static_cast<std::size_t>(step) + 1];
    BigInt trace = 0;
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t l = 0; l < kk; ++l)
        trace += m[i][l] * next[l][i];
    c[kk - static_cast<std::size_t>(step)] = -trace / step;
    cur = std::move(next);
  }
  return c;
}

BigInt evaluate(const IntPoly &p, const BigInt &x)
{
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

bool divisible_by_quadratic(const IntPoly &p, const BigInt &t, const BigInt &d)
{
  if (p.size() < 3)
    return false;
  IntPoly r = p;
  for (std::size_t deg = r.size() - 1; deg >= 2; --deg) {
    const BigInt lead = r[deg];
    r[deg] = 0;
    r[deg - 1] += lead * t;
    r[deg - 2] -= lead * d;
  }
  return r[0] == 0 && r[1] == 0;
}

int QuadNumber::sign() const
{
  const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
  const int sb = (d_ == 0 || b_ == 0) ? 0 : (b_ > 0 ? 1 : -1);
  if (sb == 0)
    return sa;
  if (sa == 0 || sa == sb)
    return sb;
  // opposite signs: compare a^2 with b^2 d
  const BigRational lhs = a_ * a_;
  const BigRational rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

double QuadNumber::to_double() const
{
  const double root = std::sqrt(static_cast<double>(d_));
  return a_.convert_to<double>() + b_.convert_to<double>() * root;
}

static void check_field(const QuadNumber &x, const QuadNumber &y)
{
  if (x.d() != y.d() && x.b() != 0 && y.b() != 0)
    throw std::logic_error("QuadNumber: mixed fields");
}

static long long field_of(const QuadNumber &x, const QuadNumber &y) { return x.d() != 0 ? x.d() : y.d(); }

QuadNumber operator+(const QuadNumber &x, const QuadNumber &y)
{
  check_field(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, field_of(x, y)};
}

QuadNumber operator-(const QuadNumber &x, const QuadNumber &y)
{
  check_field(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, field_of(x, y)};
}

QuadNumber operator*(const QuadNumber &x, const QuadNumber &y)
{
  check_field(x, y);
  const long long d = field_of(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadNumber operator/(const QuadNumber &x, const QuadNumber &y)
{
  check_field(x, y);
  const BigRational n = QuadNumber(y.a_, y.b_, field_of(x, y)).norm();
  if (n == 0)
    throw std::domain_error("QuadNumber: division by zero");
  const QuadNumber num = x * QuadNumber(y.a_, -y.b_, field_of(x, y));
  return {num.a_ / n, num.b_ / n, num.d_};
}

std::optional<QuadraticEigenvalue> quadratic_eigenvalue(const MatrixX<long long> &M, double lambda)
{
  const IntPoly p = characteristic_polynomial(M);
  const auto m = static_cast<long long>(std::llround(lambda));
  for (long long cand = m - 1; cand <= m + 1; ++cand)
    if (std::abs(static_cast<double>(cand) - lambda) < 0.5 && evaluate(p, BigInt(cand)) == 0)
      return QuadraticEigenvalue{2 * cand, cand * cand, 0};

  Eigen::EigenSolver<Eigen::MatrixXd> solver(M.cast<double>(), false);
  const auto roots = solver.eigenvalues();
  const double scale = std::max(1.0, std::abs(lambda));
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const std::complex<double> mu = roots(i);
    if (std::abs(mu.imag()) > 1e-6 * scale || std::abs(mu.real() - lambda) < 1e-7 * scale)
      continue;
    const auto t = static_cast<long long>(std::llround(lambda + mu.real()));
    const auto d = static_cast<long long>(std::llround(lambda * mu.real()));
    const long long disc = t * t - 4 * d;
    if (disc <= 0 || is_square(disc))
      continue;
    const double root = (static_cast<double>(t) + std::sqrt(static_cast<double>(disc))) / 2;
    if (std::abs(root - lambda) > 1e-6 * scale)
      continue;
    if (divisible_by_quadratic(p, BigInt(t), BigInt(d)))
      return QuadraticEigenvalue{t, d, disc};
  }
  return std::nullopt;
}

std::optional<QuadGeometry> quadratic_geometry(const IntMatrix &A, const TwistVector &n,
                                               const TwistVector &n_vert)
{
  const auto M = consistency_matrix<long long>(A, n, n_vert);
  const auto pf = pf_eigen<double, Eigen::Dynamic>(M.cast<double>());
  const auto q = quadratic_eigenvalue(M, pf.value);
  if (!q)
    return std::nullopt;
  const QuadNumber lambda = exact_lambda(*q);
  auto h = kernel_line(shifted_matrix(M, lambda), q->disc);
  if (!h)
    return std::nullopt;
  for (const auto &x : *h)
    if (x.sign() <= 0)
      return std::nullopt;

  QuadGeometry g;
  g.disc = q->disc;
  g.h = std::move(*h);
  const QuadNumber zero = QuadNumber::rational(0, g.disc);
  g.v.assign(static_cast<std::size_t>(A.cols()), zero);
  g.area = zero;
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    QuadNumber s = zero;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      if (A(i, j) != 0)
        s = s + QuadNumber::rational(A(i, j), g.disc) * g.h[static_cast<std::size_t>(i)];
    g.v[static_cast<std::size_t>(j)] = QuadNumber::rational(n_vert[static_cast<std::size_t>(j)], g.disc) * s;
  }
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0)
        g.area = g.area + QuadNumber::rational(A(i, j), g.disc) * g.h[static_cast<std::size_t>(i)] *
                              g.v[static_cast<std::size_t>(j)];
  return g;
}

bool is_arithmetic(const IntMatrix &A, const TwistVector &n, const TwistVector &n_vert)
{
  const auto M = consistency_matrix<long long>(A, n, n_vert);
  const auto pf = pf_eigen<double, Eigen::Dynamic>(M.cast<double>());
  const IntPoly p = characteristic_polynomial(M);
  const auto m = static_cast<long long>(std::llround(pf.value));
  for (long long cand = m - 1; cand <= m + 1; ++cand) {
    if (std::abs(static_cast<double>(cand) - pf.value) >= 0.5 || evaluate(p, BigInt(cand)) != 0)
      continue;
    const auto x = kernel_line(shifted_matrix(M, QuadNumber::rational(BigRational(cand))), 0);
    if (!x)
      return false;
    for (const auto &e : *x)
      if (e.sign() <= 0)
        return false;
    return true;
  }
  return false;
}

} // namespace veech
