#ifndef VEECH_PIPELINE_HPP
#define VEECH_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "veech/criteria.hpp"
#include "veech/enumerate.hpp"
#include "veech/flat.hpp"

namespace veech {

struct PipelineConfig
{
  double epsilon = 0.05;
  int max_rect = 10; ///< exclusive: pairs on at most max_rect - 1 rectangles
  int genus_floor = 1; ///< discard genus <= genus_floor; 1 keeps genus 2
  bool quotient_rotation = false;
  int jobs = 1;
};

/// A surviving (A, V, H, D, n, n') with every pair realizing the tuple.
struct TupleSurvivor
{
  TwistVectorPair twists;
  Eigen::VectorXd w;
  double pf_eigenvalue = 0;
  bool arithmetic = false;
};

struct TupleRecord
{
  IntMatrix A, V, H, D;
  std::vector<PermutationPair> pairs; ///< canonical forms, sorted
  std::vector<TupleSurvivor> survivors;
};

struct StageCounts
{
  std::int64_t pairs = 0;       ///< classes passing the step-1 filters
  std::int64_t tuples = 0;      ///< distinct (A, V, H, D)
  std::int64_t twist_pairs = 0; ///< (n, n') combinations solved
  std::int64_t survivors = 0;   ///< (tuple, n, n') passing all criteria
  std::int64_t arithmetic = 0;
  std::int64_t candidates = 0;  ///< (pair, n, n') records, all survivors
  std::int64_t non_arithmetic_candidates = 0;
};

struct PipelineReport
{
  PipelineConfig config;
  std::vector<TupleRecord> tuples; ///< only tuples with survivors, by key
  StageCounts counts;
};

/// One (pair, n, n') survivor, flattened from the tuple records.
struct Candidate
{
  PermutationPair pair;
  IntMatrix A, V, H, D;
  TwistVectorPair twists;
  Eigen::VectorXd w;
  bool arithmetic = false;
  std::optional<VerifyVerdict> verdict;
};

class PipelineError : public std::runtime_error
{
public:
  PipelineError(const std::string &what, std::string dump) : std::runtime_error(what), dump(std::move(dump)) {}
  std::string dump;
};

/// Steps 1-3. Throws PipelineError when the eigen-solver fails.
PipelineReport run_pipeline(const PipelineConfig &config);

/// Twist search and criteria for a single tuple (exposed for tests).
std::vector<TupleSurvivor> sieve_tuple(const RectangleComplex &complex, const CriteriaConfig &criteria,
                                       std::int64_t *solved = nullptr);

std::vector<Candidate> candidates(const PipelineReport &report);

/// A candidate up to relabelling: the canonical pair with the twist vectors
/// carried along to its cylinder order.
struct CandidateKey
{
  PermutationPair pair;
  TwistVectorPair twists;

  friend bool operator==(const CandidateKey &, const CandidateKey &) = default;
  friend auto operator<=>(const CandidateKey &, const CandidateKey &) = default;
};

CandidateKey canonical_candidate(const PermutationPair &pair, const TwistVectorPair &twists);

/// Rebuild the complex and geometry of a candidate.
CandidateSurface realize(const PermutationPair &pair, const TwistVectorPair &twists);

} // namespace veech

#endif // VEECH_PIPELINE_HPP
