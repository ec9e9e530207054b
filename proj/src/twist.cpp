#include "veech/twist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace veech {

namespace {

// Pair weights are integers; bounds are compared with a relative slack so
// that a bound which is mathematically an integer is not missed by rounding.
constexpr double kBoundSlack = 1e-9;

struct Ratio
{
  std::int64_t num; // n_j / n_0 = num / den, reduced
  std::int64_t den;
};

std::vector<Ratio> reduced_ratios(std::int64_t max_weight)
{
  std::vector<Ratio> out;
  for (std::int64_t den = 1; den <= max_weight; ++den)
    for (std::int64_t num = 1; num * den <= max_weight; ++num)
      if (std::gcd(num, den) == 1)
        out.push_back({num, den});
  return out;
}

std::int64_t ratio_weight(const Ratio &x, const Ratio &y)
{
  // (x.num / x.den) / (y.num / y.den)
  return pair_weight(x.num * y.den, x.den * y.num);
}

class TwistSearch
{
public:
  explicit TwistSearch(const TwistBounds &bounds)
      : k_(static_cast<int>(bounds.pairwise.rows())),
        aggregate_(bounds.aggregate),
        limit_(static_cast<std::size_t>(k_ * k_), 0)
  {
    std::int64_t widest = 0;
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        if (i == j)
          continue;
        const double bound = bounds.pairwise(i, j);
        const auto cap = bound < 1.0 ? std::int64_t{0}
                                     : static_cast<std::int64_t>(std::floor(bound * (1.0 + kBoundSlack)));
        limit_[static_cast<std::size_t>(i * k_ + j)] = cap;
        widest = std::max(widest, cap);
      }
    ratios_ = reduced_ratios(widest);
    chosen_.resize(static_cast<std::size_t>(k_));
  }

  std::vector<TwistVector> run()
  {
    if (k_ == 0)
      return {};
    if (k_ == 1)
      return {TwistVector{1}};
    chosen_[0] = {1, 1};
    extend(1, 0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

private:
  std::int64_t limit(int i, int j) const { return limit_[static_cast<std::size_t>(i * k_ + j)]; }

  void extend(int slot, std::int64_t weight_sum)
  {
    if (slot == k_) {
      emit();
      return;
    }
    // every pair not yet placed contributes at least 1
    const int placed_after = slot * (slot + 1) / 2;
    const int remaining = k_ * (k_ - 1) / 2 - placed_after;
    for (const auto &ratio : ratios_) {
      if (ratio.num * ratio.den > limit(0, slot))
        continue;
      std::int64_t sum = weight_sum + ratio.num * ratio.den;
      bool ok = true;
      for (int l = 1; l < slot && ok; ++l) {
        const auto w = ratio_weight(ratio, chosen_[static_cast<std::size_t>(l)]);
        ok = w <= limit(l, slot);
        sum += w;
      }
      if (!ok || static_cast<double>(sum + remaining) >= aggregate_)
        continue;
      chosen_[static_cast<std::size_t>(slot)] = ratio;
      extend(slot + 1, sum);
    }
  }

  void emit()
  {
    std::int64_t common = 1;
    for (const auto &r : chosen_)
      common = std::lcm(common, r.den);
    TwistVector n(static_cast<std::size_t>(k_));
    std::int64_t g = 0;
    std::vector<std::int64_t> wide(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < wide.size(); ++i) {
      wide[i] = common / chosen_[i].den * chosen_[i].num;
      g = std::gcd(g, wide[i]);
    }
    for (std::size_t i = 0; i < wide.size(); ++i)
      n[i] = static_cast<int>(wide[i] / g);
    out_.push_back(std::move(n));
  }

  int k_;
  double aggregate_;
  std::vector<std::int64_t> limit_;
  std::vector<Ratio> ratios_;
  std::vector<Ratio> chosen_;
  std::vector<TwistVector> out_;
};

} // namespace

std::int64_t pair_weight(std::int64_t n_i, std::int64_t n_j)
{
  if (n_i < 1 || n_j < 1)
    throw std::invalid_argument("pair_weight: entries must be positive");
  const auto g = std::gcd(n_i, n_j);
  return (n_i / g) * (n_j / g);
}

double aggregate_bound(int k, double beta)
{
  return static_cast<double>(k - 1) / (2.0 * k * beta * beta);
}

double pairwise_bound(int outside, double beta)
{
  const double half = (1.0 - outside * 2.0 * beta) / 2.0;
  if (half <= 0.0)
    return 0.0;
  return half * half / (beta * beta);
}

bool is_primitive(const TwistVector &n)
{
  int g = 0;
  for (const int x : n) {
    if (x < 1)
      return false;
    g = std::gcd(g, x);
  }
  return g == 1;
}

bool admissible(const TwistVector &n, double beta)
{
  const int k = static_cast<int>(n.size());
  if (k <= 1)
    return true;
  std::int64_t sum = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      sum += pair_weight(n[static_cast<std::size_t>(i)], n[static_cast<std::size_t>(j)]);
  return static_cast<double>(sum) < aggregate_bound(k, beta) * (1.0 - kBoundSlack);
}

TwistBounds proposition_bounds(const std::vector<int> &cylinder_sizes, int rectangles, double beta)
{
  if (!(beta > 0.0))
    throw std::invalid_argument("proposition_bounds: beta must be positive");
  const auto k = static_cast<Eigen::Index>(cylinder_sizes.size());
  TwistBounds b;
  b.aggregate = aggregate_bound(static_cast<int>(k), beta) * (1.0 - kBoundSlack);
  b.pairwise = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      if (i != j)
        b.pairwise(i, j) = pairwise_bound(
            rectangles - cylinder_sizes[static_cast<std::size_t>(i)] - cylinder_sizes[static_cast<std::size_t>(j)],
            beta);
  return b;
}

TwistBounds criteria_bounds(const std::vector<int> &cylinder_sizes, int rectangles, double threshold)
{
  if (!(threshold > 0.0))
    throw std::invalid_argument("criteria_bounds: threshold must be positive");
  // Loosened so that values within the criteria's tie slack are kept.
  const double t = threshold * (1.0 - 1e-6);
  const auto k = static_cast<Eigen::Index>(cylinder_sizes.size());
  TwistBounds b;
  b.aggregate = static_cast<double>(k - 1) / (2.0 * static_cast<double>(k) * t * t) * (1.0 + 1e-6);
  b.pairwise = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j)
        continue;
      const int si = cylinder_sizes[static_cast<std::size_t>(i)];
      const int sj = cylinder_sizes[static_cast<std::size_t>(j)];
      const double budget = 1.0 - t * (rectangles - si - sj);
      // largest a_i a_j with a_i + a_j <= budget, a_i >= t s_i, a_j >= t s_j
      double ai = budget / 2, aj = budget / 2;
      if (ai < t * si) {
        ai = t * si;
        aj = budget - ai;
      } else if (aj < t * sj) {
        aj = t * sj;
        ai = budget - aj;
      }
      b.pairwise(i, j) = (ai <= 0 || aj < t * sj || ai < t * si) ? 0.0 : ai * aj / (t * t) * (1.0 + 1e-6);
    }
  return b;
}

std::vector<TwistVector> enumerate_twists(const TwistBounds &bounds)
{
  return TwistSearch(bounds).run();
}

std::vector<TwistVector> enumerate_twists(const std::vector<int> &cylinder_sizes, int rectangles,
                                          double beta)
{
  return enumerate_twists(proposition_bounds(cylinder_sizes, rectangles, beta));
}

std::vector<TwistVector> enumerate_twists(const RectangleComplex &complex, Direction direction,
                                          double beta)
{
  const auto sizes = direction == Direction::horizontal ? complex.h_sizes() : complex.v_sizes();
  return enumerate_twists(sizes, complex.rectangles(), beta);
}

} // namespace veech
