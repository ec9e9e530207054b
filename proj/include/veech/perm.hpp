#ifndef VEECH_PERM_HPP
#define VEECH_PERM_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace veech {

/// Largest number of points a Perm can act on.
inline constexpr int kMaxPoints = 12;

using Cycle = std::vector<int>;

/// A permutation of {0..N-1}, stored inline as its image sequence.
class Perm
{
public:
  Perm() = default;

  /// Identity on n points.
  explicit Perm(int n);

  /// Throws std::invalid_argument unless `images` is a bijection on {0..N-1}.
  explicit Perm(std::span<const int> images);
  Perm(std::initializer_list<int> images);

  int size() const { return size_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }

  Perm inverse() const;
  bool is_identity() const;

  /// (a * b)(i) = a(b(i))
  friend Perm operator*(const Perm &a, const Perm &b);

  std::vector<int> images() const;

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &a, const Perm &b)
  {
    return a.images_ <=> b.images_;
  }

  const std::uint8_t *data() const { return images_.data(); }

  /// Unchecked construction from raw images; caller guarantees a bijection.
  static Perm from_raw(const std::uint8_t *images, int n);

private:
  std::array<std::uint8_t, kMaxPoints> images_{};
  std::uint8_t size_ = 0;
};

/// Rectangles glued by two permutations: `r` sends a rectangle to its right
/// neighbour and `r_down` to the one below it.
struct PermutationPair
{
  Perm r;
  Perm r_down;

  PermutationPair() = default;
  PermutationPair(Perm right, Perm down);

  int size() const { return r.size(); }

  friend bool operator==(const PermutationPair &, const PermutationPair &) = default;
  friend auto operator<=>(const PermutationPair &a, const PermutationPair &b)
  {
    if (auto c = a.r <=> b.r; c != 0)
      return c;
    return a.r_down <=> b.r_down;
  }
};

/// Cycles with the minimal element first, sorted by minimal element.
std::vector<Cycle> cycle_decomposition(const Perm &p);

/// Cycle lengths in non-increasing order.
std::vector<int> cycle_type(const Perm &p);

bool is_transitive(const PermutationPair &pair);

/// Simultaneous conjugation: the result sends sigma(i) to sigma(r(i)).
PermutationPair conjugate(const PermutationPair &pair, const Perm &sigma);

struct CanonicalForm
{
  PermutationPair pair;
  /// relabel(i) is the label of old rectangle i in `pair`.
  Perm relabel;
};

/// Lexicographically least relabelling among the breadth-first relabellings
/// seeded at each point (r explored before r_down). Requires transitivity.
CanonicalForm canonical_form(const PermutationPair &pair);
PermutationPair canonical_pair(const PermutationPair &pair);

/// Brute-force conjugacy test for transitive pairs: tries every image of 0.
bool are_conjugate(const PermutationPair &a, const PermutationPair &b);

/// Parses cycle notation such as "(0,1,2)(3,4)" on n points (n = 0 infers it
/// from the largest label). Missing points are fixed.
Perm parse_cycles(std::string_view text, int n = 0);

/// Cycle notation, fixed points included, cycles in `cycle_decomposition` order.
std::string format_cycles(const Perm &p);

/// Canonical representative of a cycle type: cycles listed in the given
/// order, each labelled consecutively.
Perm permutation_of_type(std::span<const int> lengths);

/// All partitions of n in reverse lexicographic order (largest part first).
std::vector<std::vector<int>> partitions(int n);

/// Look-up table from the lexicographic rank of a permutation of {0..n-1}
/// to the index of its cycle type in `partitions(n)`.
class CycleTypeTable
{
public:
  explicit CycleTypeTable(int n);

  int points() const { return n_; }
  int type_count() const { return static_cast<int>(types_.size()); }
  const std::vector<int> &type(int id) const { return types_[static_cast<std::size_t>(id)]; }
  int type_of_rank(std::size_t rank) const { return table_[rank]; }
  int type_of(const Perm &p) const;

private:
  int n_;
  std::vector<std::vector<int>> types_;
  std::vector<std::uint8_t> table_;
};

/// Lexicographic rank of a permutation among all permutations of its size.
std::size_t permutation_rank(const Perm &p);

std::size_t factorial(int n);

struct PermHash
{
  std::size_t operator()(const Perm &p) const noexcept;
};

struct PairHash
{
  std::size_t operator()(const PermutationPair &p) const noexcept;
};

} // namespace veech

#endif // VEECH_PERM_HPP
