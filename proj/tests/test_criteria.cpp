#include <doctest.h>

#include "support.hpp"
#include "veech/complex.hpp"
#include "veech/criteria.hpp"
#include "veech/enumerate.hpp"
#include "veech/twist.hpp"

using namespace veech;

namespace {

IntMatrix mat(int rows, int cols, std::initializer_list<int> entries)
{
  IntMatrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = *it++;
  return m;
}

struct Sample
{
  IntMatrix A, V, H, D;
  TwistVector n, n_vert;
  double w1;
};

CriteriaVerdict run(const Sample &s, Geometry &g)
{
  g = solve_raw(s.A, s.n, s.n_vert);
  const SurfaceView view{s.A, s.V, s.H, s.D, s.n, s.n_vert, g.h, g.v, g.c, g.c_vert};
  return run_criteria(view);
}

} // namespace

TEST_CASE("report samples")
{
  const IntMatrix zero = IntMatrix::Zero(2, 2);
  const IntMatrix A2 = mat(2, 2, {6, 1, 1, 1}), D2 = mat(2, 2, {0, 0, 0, 1});
  const IntMatrix A3 = mat(2, 2, {5, 2, 1, 1}), H3 = mat(2, 2, {1, 0, 0, 0}), D3 = mat(2, 2, {1, 0, 0, 1});
  const IntMatrix A4 = mat(2, 2, {6, 1, 2, 0}), V4 = mat(2, 2, {1, 1, 0, 0}), H4 = mat(2, 2, {1, 1, 1, 0}),
                  D4 = mat(2, 2, {0, 1, 0, 0});
  const IntMatrix A5 = mat(2, 3, {5, 1, 1, 1, 1, 0}), VH5 = mat(2, 3, {1, 0, 1, 0, 0, 0}),
                  D5 = mat(2, 3, {1, 0, 1, 0, 1, 0});
  const std::vector<Sample> passing{
      {A2, zero, zero, D2, {1, 4}, {1, 4}, 1.23607},
      {A2, zero, zero, D2, {2, 7}, {2, 7}, 1},
      {A3, zero, H3, D3, {2, 7}, {1, 2}, 1},
      {A4, V4, H4, D4, {1, 4}, {1, 16}, 1},
      {A4, V4, H4, D4, {2, 7}, {1, 8}, 1},
      {A5, VH5, VH5, D5, {1, 4}, {1, 3, 12}, 1},
      {A5, VH5, VH5, D5, {2, 7}, {1, 3, 6}, 1},
  };
  Geometry g;
  for (const auto &s : passing) {
    CAPTURE(s.n_vert);
    const auto verdict = run(s, g);
    CHECK(verdict.passed);
    CHECK(g.w(1) == doctest::Approx(s.w1).epsilon(1e-5));
  }

  // printed as w=(1,1), but the eigenvector is not (1,1) for these moduli
  const Sample first{mat(2, 3, {3, 1, 1, 1, 0, 0}), mat(2, 3, {1, 1, 1, 1, 0, 0}), mat(2, 3, {1, 0, 1, 1, 0, 0}),
                     mat(2, 3, {1, 0, 1, 1, 0, 0}), {2, 7}, {2, 5, 5}, 0};
  const auto verdict = run(first, g);
  CHECK(g.w(1) == doctest::Approx(0.8117).epsilon(1e-3));
  REQUIRE_FALSE(verdict.passed);
  CHECK(verdict.first_failure->criterion == 2);
  CHECK(verdict.first_failure->value == doctest::Approx(0.0976).epsilon(1e-3));
}

TEST_CASE("ties do not reject")
{
  // one unit square: every rectangle has area exactly 1
  const IntMatrix A = IntMatrix::Ones(1, 1), Z = IntMatrix::Zero(1, 1);
  const TwistVector n{1};
  const auto g = solve_raw(A, n, n);
  const SurfaceView view{A, Z, Z, Z, n, n, g.h, g.v, g.c, g.c_vert};
  CriteriaConfig at;
  at.epsilon = 0.5;
  CHECK_FALSE(criterion_rect_area(view, at));
  CriteriaConfig above = at;
  above.epsilon = 0.5 + 1e-6;
  const auto f = criterion_rect_area(view, above);
  REQUIRE(f);
  CHECK(f->criterion == 1);
  CHECK(f->value == doctest::Approx(1.0));
}

TEST_CASE("criterion order")
{
  // A fails both the area test (tiny second cylinder) and later ones; the
  // first reported failure is the area test.
  const IntMatrix A = mat(2, 2, {6, 1, 1, 1}), Z = IntMatrix::Zero(2, 2);
  const TwistVector n{1, 60}, nv{1, 60};
  const auto g = solve_raw(A, n, nv);
  const SurfaceView view{A, Z, Z, Z, n, nv, g.h, g.v, g.c, g.c_vert};
  const auto verdict = run_criteria(view);
  REQUIRE_FALSE(verdict.passed);
  CHECK(verdict.first_failure->criterion == 1);
  CHECK(verdict.first_failure->value < 0.1);
}

TEST_CASE("the area screen never rejects a passing vector")
{
  int passes = 0;
  for (const auto &p : enumerate_pairs(6)) {
    const auto cx = build_complex(p);
    if (!step1_filters(cx, {1, 2}).keep)
      continue;
    const RectAreaScreen screen(cx);
    const auto hs = enumerate_twists(criteria_bounds(cx.h_sizes(), p.size(), 0.1));
    const auto vs = enumerate_twists(criteria_bounds(cx.v_sizes(), p.size(), 0.1));
    for (const auto &n : hs)
      for (const auto &nv : vs) {
        const auto g = solve_raw(cx.A, n, nv);
        if (run_criteria(view_of(cx, {n, nv}, g)).passed) {
          ++passes;
          CHECK(screen.admits(n, nv));
        }
      }
  }
  CHECK(passes > 0);
}
