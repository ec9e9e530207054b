#include "veech/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace veech {

namespace {

using Real = long double;
constexpr Real kPi = std::numbers::pi_v<long double>;

long long isqrt(long long x)
{
  auto r = static_cast<long long>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x)
    --r;
  while ((r + 1) * (r + 1) <= x)
    ++r;
  return r;
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

AreaResult both(Real x) { return {static_cast<double>(x), static_cast<double>(x)}; }

Real sin2(Real x)
{
  const Real s = std::sin(x);
  return s * s;
}

// Kenyon-Smillie triangles whose values are only known numerically. The
// decimals are the published ones (leading eigenvectors of E7 / E8).
constexpr double kKs9349AreaT = 0.0259951;
constexpr double kKs9349AreaVt = 0.0169671;
constexpr double kKs53715Area = 0.014189;

} // namespace

bool is_perfect_square(long long D) { return D >= 0 && isqrt(D) * isqrt(D) == D; }

long long e_h2(long long D)
{
  long long e = isqrt(D); // D is not a square, so isqrt(D) < sqrt(D)
  while (mod(e - D, 2) != 0)
    --e;
  return e;
}

long long e_prym(long long D)
{
  long long e = isqrt(D);
  while (mod(e * e - D, 8) != 0)
    --e;
  return e;
}

AreaResult h2_areas(long long D)
{
  if (D <= 4 || (mod(D, 4) != 0 && mod(D, 4) != 1))
    throw std::domain_error("h2: discriminant must be > 4 and 0 or 1 mod 4");
  const Real s = std::sqrt(static_cast<Real>(D));
  if (is_perfect_square(D))
    return both(1 / (2 * s));
  const long long e = e_h2(D);
  const Real gap = s - static_cast<Real>(e);
  if (!(gap > 0 && gap <= 2))
    throw std::logic_error("h2: e_D out of range");
  const Real t = gap / (4 * s);
  return {static_cast<double>(t), static_cast<double>(std::min(t, (2 - gap) / (4 * s)))};
}

AreaResult prym_h4_areas(long long D)
{
  const long long r = mod(D, 8);
  if (D < 8 || (r != 0 && r != 1 && r != 4))
    throw std::domain_error("prym4: discriminant must be >= 8 and 0, 1 or 4 mod 8");
  const Real s = std::sqrt(static_cast<Real>(D));
  if (is_perfect_square(D))
    return both(D % 2 == 0 ? 1 / (2 * s) : 1 / (4 * s));
  const long long e = e_prym(D);
  const Real gap = s - static_cast<Real>(e);
  // breakpoints 4/3, 2, 8/3 on sqrt(D) - e, decided in integers
  if (9 * D < (3 * e + 4) * (3 * e + 4))
    return both(gap / (8 * s));
  if (D < (e + 2) * (e + 2))
    return {static_cast<double>(gap / (8 * s)), static_cast<double>((2 - gap) / (4 * s))};
  if (9 * D < (3 * e + 8) * (3 * e + 8))
    return both((gap - 2) / (4 * s));
  return both((4 - gap) / (8 * s));
}

AreaResult regular_ngon_areas(int n)
{
  if (n < 8 || n % 2 != 0)
    throw std::domain_error("regular n-gon: n must be even and >= 8");
  return both(4 * sin2(kPi / n) / n);
}

AreaResult double_ngon_areas(int n)
{
  if (n < 5 || n % 2 == 0)
    throw std::domain_error("double n-gon: n must be odd and >= 5");
  const Real a = kPi / n;
  return {static_cast<double>(2 * sin2(a) / n), static_cast<double>(std::tan(a) * std::sin(a) / n)};
}

AreaResult bouw_moller_areas(int m, int n)
{
  if (std::min(m, n) <= 2)
    throw std::domain_error("Bouw-Moller: min(m, n) must exceed 2");
  auto square_sum = [](int p) {
    Real s = 0;
    for (int k = 1; k <= p - 1; ++k)
      s += sin2(k * kPi / p);
    return s;
  };
  auto neighbour_sum = [](int p) {
    Real s = 0;
    for (int k = 1; k <= p - 2; ++k)
      s += std::sin(k * kPi / p) * std::sin((k + 1) * kPi / p);
    return s;
  };
  const Real A = square_sum(n) * neighbour_sum(m) + square_sum(m) * neighbour_sum(n);
  const Real core = sin2(kPi / m) * sin2(kPi / n);
  const Real with_cos = core * std::cos(kPi / std::min(m, n)) / A;
  const bool m_odd = m % 2 != 0, n_odd = n % 2 != 0;
  if (m_odd && n_odd)
    return both(with_cos);
  if (m_odd != n_odd)
    return {static_cast<double>(with_cos), static_cast<double>(core / (2 * A))};
  return both(2 * with_cos);
}

AreaResult isolated_areas(IsolatedId id)
{
  switch (id) {
  case IsolatedId::ks_4_3_512: {
    const Real r3 = std::sqrt(Real(3));
    return {static_cast<double>(Real(1) / 8 - r3 / 24), static_cast<double>(r3 / 6 - Real(1) / 4)};
  }
  case IsolatedId::ks_9_3_49:
    return {kKs9349AreaT, kKs9349AreaVt};
  case IsolatedId::ks_5_3_715:
    return {kKs53715Area, kKs53715Area};
  }
  throw std::domain_error("isolated: unknown id");
}

AreaResult areas(const FamilySpec &spec)
{
  return std::visit(
      [](const auto &f) -> AreaResult {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, H2Family>)
          return h2_areas(f.D);
        else if constexpr (std::is_same_v<T, PrymH4Family>)
          return prym_h4_areas(f.D);
        else if constexpr (std::is_same_v<T, BouwMollerFamily>)
          return bouw_moller_areas(f.m, f.n);
        else if constexpr (std::is_same_v<T, RegularNgon>)
          return regular_ngon_areas(f.n);
        else if constexpr (std::is_same_v<T, DoubleNgon>)
          return double_ngon_areas(f.n);
        else
          return isolated_areas(f.id);
      },
      spec);
}

std::string parameter_label(const FamilySpec &spec)
{
  return std::visit(
      [](const auto &f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, H2Family> || std::is_same_v<T, PrymH4Family>)
          return std::to_string(f.D);
        else if constexpr (std::is_same_v<T, BouwMollerFamily>)
          return std::to_string(f.m) + "x" + std::to_string(f.n);
        else if constexpr (std::is_same_v<T, RegularNgon> || std::is_same_v<T, DoubleNgon>)
          return std::to_string(f.n);
        else {
          switch (f.id) {
          case IsolatedId::ks_4_3_512:
            return "ks-4-3-512";
          case IsolatedId::ks_9_3_49:
            return "ks-9-3-49";
          case IsolatedId::ks_5_3_715:
            return "ks-5-3-715";
          }
          return "?";
        }
      },
      spec);
}

std::vector<TableRow> emit_family_table(const std::vector<FamilySpec> &specs)
{
  std::vector<TableRow> rows;
  rows.reserve(specs.size());
  for (const auto &spec : specs) {
    TableRow row;
    row.param = parameter_label(spec);
    try {
      const auto a = areas(spec);
      row.area_t = a.area_t;
      row.area_vt = a.area_vt;
      row.status = "ok";
    } catch (const std::domain_error &e) {
      row.area_t = row.area_vt = std::nan("");
      row.status = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream &out, const std::vector<TableRow> &rows)
{
  out << "param,area_t,area_vt,status\n";
  char buf[64];
  for (const auto &row : rows) {
    out << row.param << ',';
    std::snprintf(buf, sizeof buf, "%.17g", row.area_t);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", row.area_vt);
    out << buf << ',';
    // domain-error messages may contain commas
    if (row.status.find(',') != std::string::npos)
      out << '"' << row.status << '"';
    else
      out << row.status;
    out << '\n';
  }
}

std::vector<Table1Row> table1_rows()
{
  return {
      {double_ngon_areas(5).area_vt, 1, "double regular pentagon"},
      {regular_ngon_areas(8).area_vt, 1, "regular octagon"},
      {h2_areas(17).area_vt, 2, "genus 2 lattice surface with discriminant 17"},
      {prym_h4_areas(8).area_vt, 1, "Prym surface in genus 3 with discriminant 8 (also BM(3,4))"},
  };
}

} // namespace veech
