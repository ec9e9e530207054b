#ifndef VEECH_COMPLEX_HPP
#define VEECH_COMPLEX_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "veech/perm.hpp"

namespace veech {

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

struct CornerFlags
{
  bool upper_left = false;
  bool upper_right = false;
  bool lower_left = false;
  bool lower_right = false;
};

/// Cylinder and corner combinatorics of a transitive pair.
///
/// Horizontal cylinders are the cycles of `r`, vertical ones the cycles of
/// `r_down`; both lists are sorted by size (descending), ties broken by the
/// least rectangle they contain. A(i,j) counts rectangles shared by
/// horizontal cylinder i and vertical cylinder j. V, H and D flag cylinder
/// intersections containing a rectangle whose left or right side, top or
/// bottom side, or lower-right/upper-left diagonal joins two cone points.
struct RectangleComplex
{
  PermutationPair pair;
  std::vector<Cycle> h_cyls;
  std::vector<Cycle> v_cyls;
  std::vector<int> h_of; ///< rectangle -> horizontal cylinder id
  std::vector<int> v_of; ///< rectangle -> vertical cylinder id
  IntMatrix A, V, H, D;
  std::vector<CornerFlags> corners;
  std::vector<Cycle> vertex_cycles;
  int genus = 1;
  /// Orders of the cone points (vertex cycle length - 1), non-increasing.
  std::vector<int> stratum;

  int rectangles() const { return pair.size(); }
  int h_count() const { return static_cast<int>(h_cyls.size()); }
  int v_count() const { return static_cast<int>(v_cyls.size()); }
  std::vector<int> h_sizes() const;
  std::vector<int> v_sizes() const;
};

/// Throws std::invalid_argument for non-transitive pairs.
RectangleComplex build_complex(const PermutationPair &pair);

/// True when the lower-right corner of rectangle i is a cone point, i.e.
/// right-then-down and down-then-right lead to different rectangles.
bool is_cone_corner(const PermutationPair &pair, int i);

/// All four corner flags of every rectangle.
std::vector<CornerFlags> corner_flags(const PermutationPair &pair);

/// Cycles of c = r . r_down . r^-1 . r_down^-1; one cycle per vertex.
std::vector<Cycle> vertex_cycles(const PermutationPair &pair);

/// Genus from the vertex count: (N - #vertices + 2) / 2.
int genus_of(const PermutationPair &pair);

struct Step1Config
{
  int genus_floor = 2;   ///< discard genus <= genus_floor
  int min_cylinders = 2; ///< discard when either direction has fewer cylinders
};

struct FilterDecision
{
  bool keep = true;
  /// Comma-separated failed filters in the order "genus", "one-cylinder";
  /// empty when kept.
  std::string reason;
};

FilterDecision step1_filters(const RectangleComplex &complex, const Step1Config &config = {});

/// Same decision as step1_filters(build_complex(pair)) without building the
/// complex; used to prune enumeration.
bool passes_step1(const PermutationPair &pair, const Step1Config &config);

} // namespace veech

#endif // VEECH_COMPLEX_HPP
