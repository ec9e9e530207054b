#ifndef VEECH_FLAT_HPP
#define VEECH_FLAT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "veech/pf.hpp"

namespace veech {

/// Corner indices, counter-clockwise from the lower-left.
enum Corner : int { lower_left = 0, lower_right = 1, upper_right = 2, upper_left = 3 };

/// Rectangles glued along full edges, with corner classes.
template <typename Coord>
struct BasicFlatSurface
{
  PermutationPair pair;
  std::vector<Coord> width;
  std::vector<Coord> height;
  Coord area{};
  std::vector<std::array<int, 4>> corner_class; ///< rectangle x corner -> point id
  std::vector<int> class_size;                  ///< corners per point; 4 means angle 2 pi
  std::vector<bool> singular;                   ///< cone point, or the marked point of a torus
};

using FlatSurface = BasicFlatSurface<double>;

struct SaddleConnection
{
  double dx = 0; ///< holonomy, area-normalized
  double dy = 0;
  int start = -1; ///< singular point ids
  int end = -1;

  friend bool operator==(const SaddleConnection &, const SaddleConnection &) = default;
};

struct SearchLimits
{
  /// Give up (inconclusive) after visiting this many rectangles.
  std::int64_t max_steps = 200'000'000;
};

/// Floating-point realization: widths v of the vertical cylinders, heights h
/// of the horizontal ones (area 1).
FlatSurface build_surface(const CandidateSurface &s);

/// Unit square torus on n squares with gluings from `pair`; used for checks.
FlatSurface build_square_tiled(const PermutationPair &pair);

/// All saddle connections with max(|dx|, |dy|) <= L, both orientations,
/// sorted lexicographically by holonomy. Holonomies are in area-1 units.
std::vector<SaddleConnection> saddle_connections(const FlatSurface &f, double L, const SearchLimits &limits = {});

struct CrossResult
{
  bool conclusive = false; ///< at least two non-parallel connections
  bool complete = true;    ///< false when the search hit its step limit
  double value = 0;        ///< min |cross| over non-parallel pairs, area-normalized
  SaddleConnection first, second;
  std::size_t connections = 0;
};

CrossResult min_cross(const FlatSurface &f, double L, const SearchLimits &limits = {});

struct VerifyVerdict
{
  enum class Kind { refuted, survived, inconclusive };
  Kind kind = Kind::inconclusive;
  double cross = 0;    ///< witness value (refuted) or smallest found (survived)
  double l_max = 0;    ///< largest L searched
  bool exact = false;  ///< decided in Q(sqrt d) rather than floating point
  SaddleConnection first, second;
};

const char *to_string(VerifyVerdict::Kind kind);

/// Runs min_cross for each L in `schedule`; refuted at the first L with a
/// non-zero cross product below `cutoff`.
VerifyVerdict verify_candidate(const CandidateSurface &s, double cutoff = 0.1,
                               const std::vector<double> &schedule = {2, 4, 8, 16},
                               const SearchLimits &limits = {});

} // namespace veech

#endif // VEECH_FLAT_HPP
