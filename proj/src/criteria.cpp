#include "veech/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace veech {

namespace {

using Failure = std::optional<CriterionFailure>;

// Reject only when strictly below the threshold by more than the tie slack.
bool below(double value, const CriteriaConfig &cfg) { return value < cfg.threshold() - cfg.tie_tolerance; }

int reduced_denominator(int n_i, int n_other) { return n_other / std::gcd(n_i, n_other); }

// One direction of the twist-shift test: cylinder i twisted against i'.
Failure twist_shift(const Eigen::VectorXd &height, const Eigen::VectorXd &circ, const TwistVector &n,
                    int id, const CriteriaConfig &cfg)
{
  const auto k = static_cast<int>(n.size());
  for (int i = 0; i < k; ++i)
    for (int ip = 0; ip < k; ++ip) {
      if (i == ip)
        continue;
      const int q = reduced_denominator(n[static_cast<std::size_t>(i)], n[static_cast<std::size_t>(ip)]);
      const double value = circ(i) * height(ip) / q;
      if (below(value, cfg))
        return CriterionFailure{id, {i, ip}, value, "twist shift"};
    }
  return std::nullopt;
}

// Cone points at distance `dist` along cylinder i, seen from cylinder i'.
Failure cone_spacing(const Eigen::VectorXd &height, const Eigen::VectorXd &circ, const TwistVector &n,
                     int i, int j, double dist, int id, const CriteriaConfig &cfg)
{
  const auto k = static_cast<int>(n.size());
  for (int ip = 0; ip < k; ++ip) {
    if (ip == i)
      continue;
    const int q = reduced_denominator(n[static_cast<std::size_t>(i)], n[static_cast<std::size_t>(ip)]);
    const double period = circ(i) / q;
    const double delta = std::abs(dist - std::round(dist / period) * period);
    if (delta <= cfg.tie_tolerance)
      continue; // the twist carries one cone point onto the other
    const double value = std::max(delta, (period - delta) / 2) * height(ip);
    if (below(value, cfg))
      return CriterionFailure{id, {i, j, ip}, value, "cone spacing"};
  }
  return std::nullopt;
}

} // namespace

SurfaceView view_of(const CandidateSurface &s)
{
  return {s.complex.A, s.complex.V, s.complex.H, s.complex.D, s.twists.horizontal, s.twists.vertical,
          s.h, s.v, s.c, s.c_vert};
}

SurfaceView view_of(const RectangleComplex &complex, const TwistVectorPair &twists, const Geometry &g)
{
  return {complex.A, complex.V, complex.H, complex.D, twists.horizontal, twists.vertical, g.h, g.v, g.c, g.c_vert};
}

Failure criterion_rect_area(const SurfaceView &s, const CriteriaConfig &cfg)
{
  for (Eigen::Index i = 0; i < s.A.rows(); ++i)
    for (Eigen::Index j = 0; j < s.A.cols(); ++j) {
      if (s.A(i, j) == 0 && !cfg.universal_rect_area)
        continue;
      const double value = s.h(i) * s.v(j);
      if (below(value, cfg))
        return CriterionFailure{1, {static_cast<int>(i), static_cast<int>(j)}, value, "rectangle area"};
    }
  return std::nullopt;
}

Failure criterion_twist_shift(const SurfaceView &s, const CriteriaConfig &cfg)
{
  if (auto f = twist_shift(s.h, s.c, s.n, 2, cfg))
    return f;
  return twist_shift(s.v, s.c_vert, s.n_vert, 4, cfg);
}

Failure criterion_cone_spacing(const SurfaceView &s, const CriteriaConfig &cfg)
{
  const auto k = static_cast<int>(s.A.rows());
  const auto kv = static_cast<int>(s.A.cols());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < kv; ++j)
      if (s.H(i, j) != 0)
        if (auto f = cone_spacing(s.h, s.c, s.n, i, j, s.v(j), 3, cfg))
          return f;
  for (int j = 0; j < kv; ++j)
    for (int i = 0; i < k; ++i)
      if (s.V(i, j) != 0)
        if (auto f = cone_spacing(s.v, s.c_vert, s.n_vert, j, i, s.h(i), 4, cfg))
          return f;
  return std::nullopt;
}

Failure criterion_diagonal(const SurfaceView &s, const CriteriaConfig &cfg)
{
  struct Diagonal
  {
    int i, j;
    double dx, dy;
  };
  std::vector<Diagonal> diagonals;
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (s.D(i, j) != 0)
        diagonals.push_back({static_cast<int>(i), static_cast<int>(j), s.v(j), -s.h(i)});
  for (std::size_t a = 0; a < diagonals.size(); ++a)
    for (std::size_t b = a + 1; b < diagonals.size(); ++b) {
      const auto &x = diagonals[a];
      const auto &y = diagonals[b];
      const double cross = std::abs(x.dx * y.dy - x.dy * y.dx);
      if (cross > cfg.tie_tolerance && below(cross, cfg))
        return CriterionFailure{5, {x.i, x.j, y.i, y.j}, cross, "diagonal cross product"};
    }
  return std::nullopt;
}

RectAreaScreen::RectAreaScreen(const RectangleComplex &complex, const CriteriaConfig &cfg) : A_(complex.A)
{
  const double t = cfg.threshold() - cfg.tie_tolerance;
  const int total = complex.rectangles();
  for (int size : complex.h_sizes())
    a_max_.push_back(1.0 - t * (total - size));
  for (int size : complex.v_sizes())
    b_max_.push_back(1.0 - t * (total - size));
  col_sum_.resize(static_cast<std::size_t>(A_.cols()));
  for (Eigen::Index j = 0; j < A_.cols(); ++j)
    col_sum_[static_cast<std::size_t>(j)] = A_.col(j).sum();
  t2_ = t * t;
}

bool RectAreaScreen::admits(const TwistVector &n, const TwistVector &n_vert) const
{
  const auto k = A_.rows(), kv = A_.cols();
  double upper = std::numeric_limits<double>::infinity();
  double lower = 0, min_row = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < k; ++i) {
    const double ni = n[static_cast<std::size_t>(i)];
    double diag = 0, row = 0;
    for (Eigen::Index j = 0; j < kv; ++j) {
      const int a = A_(i, j);
      if (a == 0)
        continue;
      const double nj = n_vert[static_cast<std::size_t>(j)];
      diag += a * a * nj;
      row += a * nj * col_sum_[static_cast<std::size_t>(j)];
      upper = std::min(upper, a_max_[static_cast<std::size_t>(i)] * b_max_[static_cast<std::size_t>(j)] * ni * nj);
    }
    lower = std::max(lower, ni * diag);
    min_row = std::min(min_row, ni * row);
  }
  double num = 0, den = 0;
  for (Eigen::Index j = 0; j < kv; ++j) {
    double col = 0;
    for (Eigen::Index i = 0; i < k; ++i)
      col += n[static_cast<std::size_t>(i)] * A_(i, j);
    num += n_vert[static_cast<std::size_t>(j)] * col * col;
  }
  for (int x : n)
    den += x;
  lower = std::max({lower, min_row, num / den});
  return lower <= upper / t2_ * (1.0 + 1e-9);
}

CriteriaVerdict run_criteria(const SurfaceView &s, const CriteriaConfig &cfg)
{
  Failure f = criterion_rect_area(s, cfg);
  if (!f)
    f = twist_shift(s.h, s.c, s.n, 2, cfg);
  if (!f) {
    const auto k = static_cast<int>(s.A.rows());
    for (int i = 0; i < k && !f; ++i)
      for (int j = 0; j < static_cast<int>(s.A.cols()) && !f; ++j)
        if (s.H(i, j) != 0)
          f = cone_spacing(s.h, s.c, s.n, i, j, s.v(j), 3, cfg);
  }
  if (!f)
    f = twist_shift(s.v, s.c_vert, s.n_vert, 4, cfg);
  if (!f) {
    const auto kv = static_cast<int>(s.A.cols());
    for (int j = 0; j < kv && !f; ++j)
      for (int i = 0; i < static_cast<int>(s.A.rows()) && !f; ++i)
        if (s.V(i, j) != 0)
          f = cone_spacing(s.v, s.c_vert, s.n_vert, j, i, s.h(i), 4, cfg);
  }
  if (!f)
    f = criterion_diagonal(s, cfg);
  CriteriaVerdict verdict;
  verdict.passed = !f.has_value();
  verdict.first_failure = std::move(f);
  return verdict;
}

CriteriaVerdict run_criteria(const CandidateSurface &s, const CriteriaConfig &cfg) { return run_criteria(view_of(s), cfg); }

} // namespace veech
