#ifndef VEECH_TWIST_HPP
#define VEECH_TWIST_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "veech/complex.hpp"

namespace veech {

/// Positive, primitive multiplicities, one per cylinder in complex order.
using TwistVector = std::vector<int>;

struct TwistVectorPair
{
  TwistVector horizontal;
  TwistVector vertical;

  friend bool operator==(const TwistVectorPair &, const TwistVectorPair &) = default;
  friend auto operator<=>(const TwistVectorPair &, const TwistVectorPair &) = default;
};

enum class Direction { horizontal, vertical };

/// n_i n_j / gcd(n_i, n_j)^2, i.e. p*q for the reduced ratio p/q.
std::int64_t pair_weight(std::int64_t n_i, std::int64_t n_j);

/// (k-1) / (2 k beta^2); vectors whose pair weights sum to at least this are
/// excluded.
double aggregate_bound(int k, double beta);

/// Largest pair weight compatible with `outside` rectangles lying outside
/// the two cylinders: ((1 - outside * 2 beta) / 2)^2 / beta^2.
double pairwise_bound(int outside, double beta);

bool admissible(const TwistVector &n, double beta);

bool is_primitive(const TwistVector &n);

/// Upper bounds on pair weights: s_ij <= pairwise(i, j) for every i != j,
/// and sum_{i<j} s_ij < aggregate.
struct TwistBounds
{
  Eigen::MatrixXd pairwise;
  double aggregate = 0;
};

/// The bounds above (aggregate, and pairwise with `outside` rectangles).
TwistBounds proposition_bounds(const std::vector<int> &cylinder_sizes, int rectangles, double beta);

/// Tighter bounds implied by the rectangle-area and twist-shift criteria at
/// `threshold`: the twist-shift value of cylinders i, j equals
/// sqrt(a_i a_j / s_ij) for cylinder areas a, and every rectangle has area
/// at least `threshold`. Vectors outside these bounds fail the criteria.
TwistBounds criteria_bounds(const std::vector<int> &cylinder_sizes, int rectangles, double threshold);

std::vector<TwistVector> enumerate_twists(const TwistBounds &bounds);

/// Every primitive vector for the given direction that passes the aggregate
/// bound and the pairwise bound on every cylinder pair, in lexicographic order.
std::vector<TwistVector> enumerate_twists(const RectangleComplex &complex, Direction direction,
                                          double beta);

/// Same, for explicit cylinder sizes (rectangle counts) and total count.
std::vector<TwistVector> enumerate_twists(const std::vector<int> &cylinder_sizes, int rectangles,
                                          double beta);

} // namespace veech

#endif // VEECH_TWIST_HPP
