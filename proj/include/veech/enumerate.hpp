#ifndef VEECH_ENUMERATE_HPP
#define VEECH_ENUMERATE_HPP

#include <optional>
#include <vector>

#include "veech/complex.hpp"
#include "veech/perm.hpp"

namespace veech {

struct FilterConfig
{
  /// Identify (r, r_down) with (r_down, r).
  bool quotient_rotation = false;
  /// Only compare pairs whose (cycle type of r, cycle type of r_down) agree,
  /// using the rank -> cycle type look-up table. When off, every new pair is
  /// tested against every stored representative (slow, small N only).
  bool cycle_type_pruning = true;
  /// Step-1 filters applied before canonicalisation. Empty emits every class.
  std::optional<Step1Config> prefilter;
  int jobs = 1;
};

/// Canonical forms of every transitive pair on exactly n points (one per
/// conjugacy class), sorted.
std::vector<PermutationPair> enumerate_pairs_of_size(int n, const FilterConfig &config = {});

/// Union of enumerate_pairs_of_size(n) for 1 <= n <= n_max, sorted by size
/// then by canonical form.
std::vector<PermutationPair> enumerate_pairs(int n_max, const FilterConfig &config = {});

/// Canonical key honouring `quotient_rotation`.
PermutationPair class_key(const PermutationPair &pair, bool quotient_rotation);

} // namespace veech

#endif // VEECH_ENUMERATE_HPP
