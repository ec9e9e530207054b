#ifndef VEECH_CRITERIA_HPP
#define VEECH_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "veech/pf.hpp"

namespace veech {

struct CriteriaConfig
{
  double epsilon = 0.05;
  /// Apply the rectangle-area test to every (i, j), not only A(i,j) >= 1.
  bool universal_rect_area = false;
  /// Values within this distance of the threshold count as ties, and ties
  /// never reject.
  double tie_tolerance = 1e-9;

  double threshold() const { return 2.0 * epsilon; }
};

struct CriterionFailure
{
  int criterion = 0;        ///< 1..5
  std::vector<int> indices; ///< witnessing cylinder / rectangle indices
  double value = 0;         ///< the quantity that fell below the threshold
  std::string what;
};

struct CriteriaVerdict
{
  bool passed = true;
  std::optional<CriterionFailure> first_failure;
};

/// Non-owning view of everything the criteria read.
struct SurfaceView
{
  const IntMatrix &A, &V, &H, &D;
  const TwistVector &n, &n_vert;
  const Eigen::VectorXd &h, &v, &c, &c_vert;
};

SurfaceView view_of(const CandidateSurface &s);
SurfaceView view_of(const RectangleComplex &complex, const TwistVectorPair &twists, const Geometry &g);

std::optional<CriterionFailure> criterion_rect_area(const SurfaceView &s, const CriteriaConfig &cfg = {});

/// Horizontal half reports criterion 2, the vertical half criterion 4.
std::optional<CriterionFailure> criterion_twist_shift(const SurfaceView &s, const CriteriaConfig &cfg = {});

/// Horizontal half (H flags) reports criterion 3, vertical half (V flags) 4.
std::optional<CriterionFailure> criterion_cone_spacing(const SurfaceView &s, const CriteriaConfig &cfg = {});

std::optional<CriterionFailure> criterion_diagonal(const SurfaceView &s, const CriteriaConfig &cfg = {});

/// Necessary condition for the rectangle-area criterion, from the twist
/// vectors alone (no eigen-solve).
///
/// With a_i, b_j the horizontal and vertical cylinder areas, rectangle (i,j)
/// has area sqrt(a_i b_j n_i n'_j / lambda), so criterion 1 forces
/// lambda <= a_i b_j n_i n'_j / t^2. Every other rectangle has area >= t,
/// which caps a_i and b_j; lambda is bounded below by the diagonal and the
/// minimal row sum of M and by the Rayleigh quotient of the symmetrized M at
/// sqrt(n).
class RectAreaScreen
{
public:
  RectAreaScreen(const RectangleComplex &complex, const CriteriaConfig &cfg = {});
  bool admits(const TwistVector &n, const TwistVector &n_vert) const;

private:
  IntMatrix A_;
  std::vector<double> a_max_, b_max_;
  std::vector<int> col_sum_;
  double t2_ = 0;
};

/// 1, 2, 3, 4, 5 in order; stops at the first failure.
CriteriaVerdict run_criteria(const SurfaceView &s, const CriteriaConfig &cfg = {});
CriteriaVerdict run_criteria(const CandidateSurface &s, const CriteriaConfig &cfg = {});

} // namespace veech

#endif // VEECH_CRITERIA_HPP
