#include "veech/flat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "veech/exact.hpp"

namespace veech {

namespace {

// ---------------------------------------------------------------------------
// Coordinates in Z[sqrt d]

struct QuadInt
{
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t d = 0;
};

std::int64_t narrow(__int128 x)
{
  if (x > INT64_MAX || x < INT64_MIN)
    throw std::overflow_error("QuadInt: coefficient overflow");
  return static_cast<std::int64_t>(x);
}

QuadInt operator+(const QuadInt &x, const QuadInt &y)
{
  return {narrow(static_cast<__int128>(x.a) + y.a), narrow(static_cast<__int128>(x.b) + y.b), std::max(x.d, y.d)};
}

QuadInt operator-(const QuadInt &x, const QuadInt &y)
{
  return {narrow(static_cast<__int128>(x.a) - y.a), narrow(static_cast<__int128>(x.b) - y.b), std::max(x.d, y.d)};
}

QuadInt operator*(const QuadInt &x, const QuadInt &y)
{
  const std::int64_t d = std::max(x.d, y.d);
  const __int128 bb = static_cast<__int128>(x.b) * y.b;
  const __int128 a = static_cast<__int128>(x.a) * y.a + bb * d;
  const __int128 b = static_cast<__int128>(x.a) * y.b + static_cast<__int128>(x.b) * y.a;
  return {narrow(a), narrow(b), d};
}

int quad_sign(const QuadInt &x)
{
  const int sa = (x.a > 0) - (x.a < 0);
  const int sb = x.d == 0 ? 0 : (x.b > 0) - (x.b < 0);
  if (sb == 0)
    return sa;
  if (sa == 0 || sa == sb)
    return sb;
  // opposite signs: compare a^2 against b^2 d
  const BigInt lhs = BigInt(x.a) * x.a;
  const BigInt rhs = BigInt(x.b) * x.b * x.d;
  return lhs > rhs ? sa : sb;
}

struct QuadOps
{
  int sign(const QuadInt &x) const { return quad_sign(x); }
  double to_double(const QuadInt &x) const
  {
    return static_cast<double>(x.a) + static_cast<double>(x.b) * std::sqrt(static_cast<double>(x.d));
  }
  QuadInt constant(std::int64_t c, std::int64_t d) const { return {c, 0, d}; }
};

struct DoubleOps
{
  double tolerance = 1e-10;
  int sign(double x) const { return x > tolerance ? 1 : (x < -tolerance ? -1 : 0); }
  double to_double(double x) const { return x; }
};

// ---------------------------------------------------------------------------
// Corner classes

class UnionFind
{
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x)
  {
    while (parent_[static_cast<std::size_t>(x)] != x)
      x = parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
  std::vector<int> parent_;
};

template <typename Coord>
void assign_corners(BasicFlatSurface<Coord> &f)
{
  const int n = f.pair.size();
  const Perm &r = f.pair.r;
  const Perm &d = f.pair.r_down;
  UnionFind uf(4 * n);
  auto id = [](int rect, int corner) { return 4 * rect + corner; };
  for (int i = 0; i < n; ++i) {
    uf.unite(id(i, lower_right), id(r(i), lower_left));
    uf.unite(id(i, upper_right), id(r(i), upper_left));
    uf.unite(id(i, lower_left), id(d(i), upper_left));
    uf.unite(id(i, lower_right), id(d(i), upper_right));
  }
  std::vector<int> label(static_cast<std::size_t>(4 * n), -1);
  f.corner_class.assign(static_cast<std::size_t>(n), {});
  f.class_size.clear();
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 4; ++c) {
      const int root = uf.find(id(i, c));
      auto &l = label[static_cast<std::size_t>(root)];
      if (l < 0) {
        l = static_cast<int>(f.class_size.size());
        f.class_size.push_back(0);
      }
      f.corner_class[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = l;
      ++f.class_size[static_cast<std::size_t>(l)];
    }
  f.singular.assign(f.class_size.size(), false);
  bool any = false;
  for (std::size_t p = 0; p < f.class_size.size(); ++p)
    if (f.class_size[p] > 4)
      f.singular[p] = any = true;
  if (!any) // torus: mark one regular point
    f.singular[static_cast<std::size_t>(f.corner_class[0][lower_left])] = true;
}

// ---------------------------------------------------------------------------
// Sector search

template <typename Coord>
struct Hit
{
  Coord dx, dy;
  int start, end;
};

class StepLimit : public std::runtime_error
{
public:
  StepLimit() : std::runtime_error("saddle connection search: step limit") {}
};

template <typename Coord, typename Ops>
class SectorSearch
{
public:
  SectorSearch(const BasicFlatSurface<Coord> &f, const Ops &ops, Coord bound, std::int64_t max_steps)
      : f_(f), ops_(ops), bound_(bound), steps_left_(max_steps)
  {
  }

  std::vector<Hit<Coord>> run()
  {
    const int n = f_.pair.size();
    right_ = f_.pair.r;
    down_ = f_.pair.r_down;
    up_ = down_.inverse();
    width_ = f_.width;
    height_ = f_.height;
    for (frame_ = 0; frame_ < 4; ++frame_) {
      for (int x = 0; x < n; ++x)
        if (singular(x, lower_left))
          from_corner(x);
      // rotate clockwise by a quarter turn: up becomes right, right becomes down
      const Perm new_right = up_;
      down_ = right_;
      right_ = new_right;
      up_ = down_.inverse();
      std::swap(width_, height_);
    }
    return std::move(hits_);
  }

private:
  int point(int x, int corner) const
  {
    return f_.corner_class[static_cast<std::size_t>(x)][static_cast<std::size_t>((corner + frame_) % 4)];
  }
  bool singular(int x, int corner) const { return f_.singular[static_cast<std::size_t>(point(x, corner))]; }
  const Coord &w(int x) const { return width_[static_cast<std::size_t>(x)]; }
  const Coord &h(int x) const { return height_[static_cast<std::size_t>(x)]; }

  bool within(const Coord &c) const { return ops_.sign(bound_ - c) >= 0; }
  bool short_of(const Coord &c) const { return ops_.sign(bound_ - c) > 0; }

  Coord cross(const Coord &ax, const Coord &ay, const Coord &bx, const Coord &by) const { return ax * by - ay * bx; }

  void tick()
  {
    if (--steps_left_ < 0)
      throw StepLimit();
  }

  void record(Coord x, Coord y, int end)
  {
    // undo the frame rotations: (a, b) -> (-b, a) per quarter turn
    for (int k = 0; k < frame_; ++k) {
      Coord t = x;
      x = zero_ - y;
      y = t;
    }
    hits_.push_back({x, y, start_, end});
  }

  void from_corner(int x0)
  {
    start_ = point(x0, lower_left);
    zero_ = w(x0) - w(x0);

    // along the bottom edge
    Coord at = zero_;
    for (int x = x0;; x = right_(x)) {
      tick();
      const Coord end = at + w(x);
      if (!within(end))
        break;
      if (singular(x, lower_right)) {
        record(end, zero_, point(x, lower_right));
        break;
      }
      at = end;
    }

    // the open quadrant above it
    struct Task
    {
      int x;
      Coord ox, oy, lo_x, lo_y, hi_x, hi_y;
    };
    const Coord one_x = w(x0), one_y = h(x0);
    std::vector<Task> stack;
    stack.push_back({x0, zero_, zero_, one_x, zero_, zero_, one_y});
    while (!stack.empty()) {
      Task t = std::move(stack.back());
      stack.pop_back();
      tick();
      if (!short_of(t.ox) || !short_of(t.oy))
        continue;
      const Coord cx = t.ox + w(t.x);
      const Coord cy = t.oy + h(t.x);
      const int below_lo = ops_.sign(cross(t.lo_x, t.lo_y, cx, cy));
      const int below_hi = ops_.sign(cross(cx, cy, t.hi_x, t.hi_y));
      if (below_lo <= 0) {
        stack.push_back({up_(t.x), t.ox, cy, t.lo_x, t.lo_y, t.hi_x, t.hi_y});
      } else if (below_hi <= 0) {
        stack.push_back({right_(t.x), cx, t.oy, t.lo_x, t.lo_y, t.hi_x, t.hi_y});
      } else {
        stack.push_back({right_(t.x), cx, t.oy, t.lo_x, t.lo_y, cx, cy});
        stack.push_back({up_(t.x), t.ox, cy, cx, cy, t.hi_x, t.hi_y});
        through_corner(t.x, cx, cy);
      }
    }
  }

  // The single ray from the start point through the upper-right corner of x.
  void through_corner(int x, Coord cx, Coord cy)
  {
    const Coord dx = cx, dy = cy;
    for (;;) {
      tick();
      if (!within(cx) || !within(cy))
        return;
      if (singular(x, upper_right)) {
        record(cx, cy, point(x, upper_right));
        return;
      }
      // regular point: continue into the rectangle diagonally across
      x = up_(right_(x));
      Coord ox = cx, oy = cy;
      for (;;) {
        tick();
        if (!short_of(ox) || !short_of(oy))
          return;
        cx = ox + w(x);
        cy = oy + h(x);
        const int s = ops_.sign(cross(dx, dy, cx, cy));
        if (s == 0)
          break;
        if (s > 0) { // corner above the ray: leave through the right edge
          x = right_(x);
          ox = cx;
        } else {
          x = up_(x);
          oy = cy;
        }
      }
    }
  }

  const BasicFlatSurface<Coord> &f_;
  Ops ops_;
  Coord bound_;
  std::int64_t steps_left_;
  int frame_ = 0;
  int start_ = -1;
  Coord zero_{};
  Perm right_, down_, up_;
  std::vector<Coord> width_, height_;
  std::vector<Hit<Coord>> hits_;
};

// ---------------------------------------------------------------------------

template <typename Coord, typename Ops>
std::vector<Hit<Coord>> search(const BasicFlatSurface<Coord> &f, const Ops &ops, Coord bound, std::int64_t max_steps)
{
  return SectorSearch<Coord, Ops>(f, ops, bound, max_steps).run();
}

QuadInt to_quad_int(const QuadNumber &x, const BigInt &scale)
{
  const BigRational a = x.a() * BigRational(scale);
  const BigRational b = x.b() * BigRational(scale);
  if (denominator(a) != 1 || denominator(b) != 1)
    throw std::logic_error("to_quad_int: scale does not clear denominators");
  const BigInt na = numerator(a), nb = numerator(b);
  if (boost::multiprecision::abs(na) > BigInt(INT64_MAX) || boost::multiprecision::abs(nb) > BigInt(INT64_MAX))
    throw std::overflow_error("to_quad_int: coefficient overflow");
  return {static_cast<std::int64_t>(na), static_cast<std::int64_t>(nb), x.d()};
}

BasicFlatSurface<QuadInt> exact_surface(const CandidateSurface &s, const QuadGeometry &g)
{
  BigInt scale = 1;
  auto absorb = [&](const QuadNumber &x) {
    scale = boost::multiprecision::lcm(scale, denominator(x.a()));
    scale = boost::multiprecision::lcm(scale, denominator(x.b()));
  };
  for (const auto &x : g.h)
    absorb(x);
  for (const auto &x : g.v)
    absorb(x);

  BasicFlatSurface<QuadInt> f;
  f.pair = s.complex.pair;
  const int n = f.pair.size();
  f.width.resize(static_cast<std::size_t>(n));
  f.height.resize(static_cast<std::size_t>(n));
  f.area = {0, 0, g.disc};
  for (int i = 0; i < n; ++i) {
    const auto hc = static_cast<std::size_t>(s.complex.h_of[static_cast<std::size_t>(i)]);
    const auto vc = static_cast<std::size_t>(s.complex.v_of[static_cast<std::size_t>(i)]);
    f.width[static_cast<std::size_t>(i)] = to_quad_int(g.v[vc], scale);
    f.height[static_cast<std::size_t>(i)] = to_quad_int(g.h[hc], scale);
    f.area = f.area + f.width[static_cast<std::size_t>(i)] * f.height[static_cast<std::size_t>(i)];
  }
  assign_corners(f);
  return f;
}

template <typename Coord, typename Ops>
std::vector<SaddleConnection> to_connections(const std::vector<Hit<Coord>> &hits, const Ops &ops, double unit, double L)
{
  std::vector<SaddleConnection> out;
  out.reserve(hits.size());
  for (const auto &h : hits) {
    SaddleConnection sc{ops.to_double(h.dx) / unit, ops.to_double(h.dy) / unit, h.start, h.end};
    if (std::max(std::abs(sc.dx), std::abs(sc.dy)) <= L * (1 + 1e-12))
      out.push_back(sc);
  }
  std::sort(out.begin(), out.end(), [](const SaddleConnection &a, const SaddleConnection &b) {
    if (a.dx != b.dx)
      return a.dx < b.dx;
    if (a.dy != b.dy)
      return a.dy < b.dy;
    if (a.start != b.start)
      return a.start < b.start;
    return a.end < b.end;
  });
  return out;
}

// Distinct holonomies, lexicographically sorted, with the exact coordinates
// kept alongside for parallelism and tie decisions.
template <typename Coord, typename Ops>
CrossResult cross_scan(const std::vector<Hit<Coord>> &hits, const Ops &ops, const Coord &area, double L)
{
  const double unit = std::sqrt(ops.to_double(area));
  struct Item
  {
    Coord dx, dy;
    double x, y;
    int start, end;
  };
  std::vector<Item> items;
  for (const auto &h : hits) {
    const double x = ops.to_double(h.dx) / unit, y = ops.to_double(h.dy) / unit;
    if (std::max(std::abs(x), std::abs(y)) <= L * (1 + 1e-12))
      items.push_back({h.dx, h.dy, x, y, h.start, h.end});
  }
  std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
    if (a.x != b.x)
      return a.x < b.x;
    if (a.y != b.y)
      return a.y < b.y;
    return std::pair(a.start, a.end) < std::pair(b.start, b.end);
  });
  std::vector<Item> unique;
  for (auto &it : items) {
    if (!unique.empty() && ops.sign(unique.back().dx - it.dx) == 0 && ops.sign(unique.back().dy - it.dy) == 0)
      continue;
    unique.push_back(std::move(it));
  }

  CrossResult res;
  res.connections = items.size();
  const double area_d = ops.to_double(area);
  std::size_t best_a = 0, best_b = 0;
  double best = 0;
  Coord best_exact{};
  for (std::size_t a = 0; a < unique.size(); ++a)
    for (std::size_t b = a + 1; b < unique.size(); ++b) {
      const Item &p = unique[a];
      const Item &q = unique[b];
      const double approx = std::abs(p.x * q.y - p.y * q.x);
      if (res.conclusive && approx > best * (1 + 1e-9) + 1e-12)
        continue;
      Coord exact = p.dx * q.dy - p.dy * q.dx;
      const int s = ops.sign(exact);
      if (s == 0)
        continue; // parallel
      if (s < 0)
        exact = (exact - exact) - exact;
      if (res.conclusive) {
        const int cmp = ops.sign(exact - best_exact);
        if (cmp >= 0)
          continue;
      }
      res.conclusive = true;
      best_exact = exact;
      best = ops.to_double(exact) / area_d;
      best_a = a;
      best_b = b;
    }
  if (res.conclusive) {
    res.value = best;
    const Item &p = unique[best_a];
    const Item &q = unique[best_b];
    res.first = {p.x, p.y, p.start, p.end};
    res.second = {q.x, q.y, q.start, q.end};
  }
  return res;
}

double double_tolerance(const FlatSurface &f) { return 1e-10 * std::max(1.0, f.area); }

template <typename Coord, typename Ops>
VerifyVerdict run_schedule(const BasicFlatSurface<Coord> &f, const Ops &ops, double cutoff,
                           const std::vector<double> &schedule, const SearchLimits &limits, bool exact)
{
  VerifyVerdict verdict;
  verdict.exact = exact;
  const double unit = std::sqrt(ops.to_double(f.area));
  bool have_value = false;
  for (const double L : schedule) {
    Coord bound;
    if constexpr (std::is_same_v<Coord, double>)
      bound = L * unit;
    else
      bound = ops.constant(static_cast<std::int64_t>(std::ceil(L * unit * (1 + 1e-9))), f.area.d);
    std::vector<Hit<Coord>> hits;
    try {
      hits = search(f, ops, bound, limits.max_steps);
    } catch (const StepLimit &) {
      verdict.kind = VerifyVerdict::Kind::inconclusive;
      return verdict;
    }
    const CrossResult cr = cross_scan(hits, ops, f.area, L);
    verdict.l_max = L;
    if (!cr.conclusive)
      continue;
    if (!have_value || cr.value < verdict.cross) {
      verdict.cross = cr.value;
      verdict.first = cr.first;
      verdict.second = cr.second;
      have_value = true;
    }
    if (cr.value < cutoff - 1e-12) {
      verdict.kind = VerifyVerdict::Kind::refuted;
      return verdict;
    }
  }
  verdict.kind = have_value ? VerifyVerdict::Kind::survived : VerifyVerdict::Kind::inconclusive;
  return verdict;
}

} // namespace

FlatSurface build_surface(const CandidateSurface &s)
{
  FlatSurface f;
  f.pair = s.complex.pair;
  const int n = f.pair.size();
  f.width.resize(static_cast<std::size_t>(n));
  f.height.resize(static_cast<std::size_t>(n));
  f.area = 0;
  for (int i = 0; i < n; ++i) {
    f.width[static_cast<std::size_t>(i)] = s.v(s.complex.v_of[static_cast<std::size_t>(i)]);
    f.height[static_cast<std::size_t>(i)] = s.h(s.complex.h_of[static_cast<std::size_t>(i)]);
    f.area += f.width[static_cast<std::size_t>(i)] * f.height[static_cast<std::size_t>(i)];
  }
  assign_corners(f);
  return f;
}

FlatSurface build_square_tiled(const PermutationPair &pair)
{
  FlatSurface f;
  f.pair = pair;
  f.width.assign(static_cast<std::size_t>(pair.size()), 1.0);
  f.height.assign(static_cast<std::size_t>(pair.size()), 1.0);
  f.area = pair.size();
  assign_corners(f);
  return f;
}

std::vector<SaddleConnection> saddle_connections(const FlatSurface &f, double L, const SearchLimits &limits)
{
  const DoubleOps ops{double_tolerance(f)};
  const double unit = std::sqrt(f.area);
  return to_connections(search(f, ops, L * unit * (1 + 1e-12), limits.max_steps), ops, unit, L);
}

CrossResult min_cross(const FlatSurface &f, double L, const SearchLimits &limits)
{
  const DoubleOps ops{double_tolerance(f)};
  const double unit = std::sqrt(f.area);
  try {
    return cross_scan(search(f, ops, L * unit * (1 + 1e-12), limits.max_steps), ops, f.area, L);
  } catch (const StepLimit &) {
    CrossResult r;
    r.complete = false;
    return r;
  }
}

const char *to_string(VerifyVerdict::Kind kind)
{
  switch (kind) {
  case VerifyVerdict::Kind::refuted:
    return "refuted";
  case VerifyVerdict::Kind::survived:
    return "survived";
  case VerifyVerdict::Kind::inconclusive:
    return "inconclusive";
  }
  return "?";
}

VerifyVerdict verify_candidate(const CandidateSurface &s, double cutoff, const std::vector<double> &schedule,
                               const SearchLimits &limits)
{
  try {
    if (const auto g = quadratic_geometry(s.complex.A, s.twists.horizontal, s.twists.vertical))
      return run_schedule(exact_surface(s, *g), QuadOps{}, cutoff, schedule, limits, true);
  } catch (const std::overflow_error &) {
    // coefficients outgrew 64 bits; fall through to floating point
  }
  const FlatSurface f = build_surface(s);
  return run_schedule(f, DoubleOps{double_tolerance(f)}, cutoff, schedule, limits, false);
}

} // namespace veech
