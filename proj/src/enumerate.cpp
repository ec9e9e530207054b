#include "veech/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace veech {

PermutationPair class_key(const PermutationPair &pair, bool quotient_rotation)
{
  auto key = canonical_pair(pair);
  if (quotient_rotation) {
    auto swapped = canonical_pair(PermutationPair(pair.r_down, pair.r));
    if (swapped < key)
      key = swapped;
  }
  return key;
}

namespace {

using PairSet = std::unordered_set<PermutationPair, PairHash>;

// All classes whose r has the given cycle type.
std::vector<PermutationPair> enumerate_shard(const CycleTypeTable &table, int r_type,
                                             const FilterConfig &config)
{
  const int n = table.points();
  const Perm r = permutation_of_type(table.type(r_type));
  std::map<int, PairSet> buckets;           // keyed by cycle type of r_down
  std::vector<PermutationPair> flat;        // representatives when pruning is off

  std::array<std::uint8_t, kMaxPoints> images{};
  std::iota(images.begin(), images.begin() + n, std::uint8_t{0});
  std::size_t rank = 0;
  do {
    const std::size_t this_rank = rank++;
    PermutationPair pair(r, Perm::from_raw(images.data(), n));
    if (!is_transitive(pair))
      continue;
    if (config.prefilter && !passes_step1(pair, *config.prefilter))
      continue;
    if (config.cycle_type_pruning) {
      buckets[table.type_of_rank(this_rank)].insert(class_key(pair, config.quotient_rotation));
    } else {
      bool seen = false;
      for (const auto &rep : flat) {
        if (are_conjugate(rep, pair) ||
            (config.quotient_rotation && are_conjugate(rep, PermutationPair(pair.r_down, pair.r)))) {
          seen = true;
          break;
        }
      }
      if (!seen)
        flat.push_back(pair);
    }
  } while (std::next_permutation(images.begin(), images.begin() + n));

  std::vector<PermutationPair> out;
  if (config.cycle_type_pruning) {
    for (auto &[type, set] : buckets)
      out.insert(out.end(), set.begin(), set.end());
  } else {
    for (const auto &rep : flat)
      out.push_back(class_key(rep, config.quotient_rotation));
  }
  return out;
}

} // namespace

std::vector<PermutationPair> enumerate_pairs_of_size(int n, const FilterConfig &config)
{
  if (n < 1 || n > 10)
    throw std::invalid_argument("enumerate_pairs: size must be in [1, 10]");
  const CycleTypeTable table(n);
  const int shards = table.type_count();
  std::vector<std::vector<PermutationPair>> results(static_cast<std::size_t>(shards));

  const int jobs = std::max(1, std::min(config.jobs, shards));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (int t = next++; t < shards; t = next++) {
      try {
        results[static_cast<std::size_t>(t)] = enumerate_shard(table, t, config);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
    for (auto &th : pool)
      th.join();
  }
  if (failure)
    std::rethrow_exception(failure);

  std::vector<PermutationPair> merged;
  for (auto &shard : results)
    merged.insert(merged.end(), shard.begin(), shard.end());
  std::sort(merged.begin(), merged.end());
  // with the rotation quotient a class can be reached from two shards
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

std::vector<PermutationPair> enumerate_pairs(int n_max, const FilterConfig &config)
{
  if (n_max < 1 || n_max > 10)
    throw std::invalid_argument("enumerate_pairs: n_max must be in [1, 10]");
  std::vector<PermutationPair> all;
  for (int n = 1; n <= n_max; ++n) {
    auto part = enumerate_pairs_of_size(n, config);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

} // namespace veech
