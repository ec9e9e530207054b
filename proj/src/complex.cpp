#include "veech/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace veech {

namespace {

std::vector<Cycle> sorted_cylinders(const Perm &p)
{
  auto cycles = cycle_decomposition(p);
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const Cycle &a, const Cycle &b) { return a.size() > b.size(); });
  return cycles;
}

std::vector<int> owner(const std::vector<Cycle> &cycles, int n)
{
  std::vector<int> of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (const int x : cycles[c])
      of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  return of;
}

int count_cycles(const Perm &p)
{
  std::array<bool, kMaxPoints> seen{};
  int count = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)])
      continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j))
      seen[static_cast<std::size_t>(j)] = true;
  }
  return count;
}

Perm commutator(const PermutationPair &pair)
{
  return pair.r * pair.r_down * pair.r.inverse() * pair.r_down.inverse();
}

} // namespace

std::vector<int> RectangleComplex::h_sizes() const
{
  std::vector<int> s;
  for (const auto &c : h_cyls)
    s.push_back(static_cast<int>(c.size()));
  return s;
}

std::vector<int> RectangleComplex::v_sizes() const
{
  std::vector<int> s;
  for (const auto &c : v_cyls)
    s.push_back(static_cast<int>(c.size()));
  return s;
}

bool is_cone_corner(const PermutationPair &pair, int i)
{
  return pair.r_down(pair.r(i)) != pair.r(pair.r_down(i));
}

std::vector<CornerFlags> corner_flags(const PermutationPair &pair)
{
  const int n = pair.size();
  const Perm r_inv = pair.r.inverse();
  const Perm d_inv = pair.r_down.inverse();
  std::vector<CornerFlags> flags(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto &f = flags[static_cast<std::size_t>(i)];
    f.lower_right = is_cone_corner(pair, i);
    // each other corner is the lower-right corner of a neighbour
    f.lower_left = is_cone_corner(pair, r_inv(i));
    f.upper_right = is_cone_corner(pair, d_inv(i));
    f.upper_left = is_cone_corner(pair, r_inv(d_inv(i)));
  }
  return flags;
}

std::vector<Cycle> vertex_cycles(const PermutationPair &pair)
{
  return cycle_decomposition(commutator(pair));
}

int genus_of(const PermutationPair &pair)
{
  return (pair.size() - count_cycles(commutator(pair)) + 2) / 2;
}

RectangleComplex build_complex(const PermutationPair &pair)
{
  if (!is_transitive(pair))
    throw std::invalid_argument("build_complex: pair is not transitive");
  RectangleComplex cx;
  const int n = pair.size();
  cx.pair = pair;
  cx.h_cyls = sorted_cylinders(pair.r);
  cx.v_cyls = sorted_cylinders(pair.r_down);
  cx.h_of = owner(cx.h_cyls, n);
  cx.v_of = owner(cx.v_cyls, n);
  cx.corners = corner_flags(pair);

  const auto k = static_cast<Eigen::Index>(cx.h_cyls.size());
  const auto kv = static_cast<Eigen::Index>(cx.v_cyls.size());
  cx.A = IntMatrix::Zero(k, kv);
  cx.V = IntMatrix::Zero(k, kv);
  cx.H = IntMatrix::Zero(k, kv);
  cx.D = IntMatrix::Zero(k, kv);
  for (int i = 0; i < n; ++i) {
    const auto a = cx.h_of[static_cast<std::size_t>(i)];
    const auto b = cx.v_of[static_cast<std::size_t>(i)];
    const auto &f = cx.corners[static_cast<std::size_t>(i)];
    cx.A(a, b) += 1;
    if ((f.upper_left && f.lower_left) || (f.upper_right && f.lower_right))
      cx.V(a, b) = 1;
    if ((f.upper_left && f.upper_right) || (f.lower_left && f.lower_right))
      cx.H(a, b) = 1;
    if (f.lower_right && f.upper_left)
      cx.D(a, b) = 1;
  }

  cx.vertex_cycles = vertex_cycles(pair);
  cx.genus = (n - static_cast<int>(cx.vertex_cycles.size()) + 2) / 2;
  for (const auto &c : cx.vertex_cycles)
    if (c.size() > 1)
      cx.stratum.push_back(static_cast<int>(c.size()) - 1);
  std::sort(cx.stratum.begin(), cx.stratum.end(), std::greater<>());
  return cx;
}

FilterDecision step1_filters(const RectangleComplex &complex, const Step1Config &config)
{
  FilterDecision decision;
  auto reject = [&](const char *why) {
    decision.keep = false;
    if (!decision.reason.empty())
      decision.reason += ',';
    decision.reason += why;
  };
  if (complex.genus <= config.genus_floor)
    reject("genus");
  if (std::min(complex.h_count(), complex.v_count()) < config.min_cylinders)
    reject("one-cylinder");
  return decision;
}

bool passes_step1(const PermutationPair &pair, const Step1Config &config)
{
  if (count_cycles(pair.r) < config.min_cylinders || count_cycles(pair.r_down) < config.min_cylinders)
    return false;
  return genus_of(pair) > config.genus_floor;
}

} // namespace veech
