#include "veech/pipeline.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace veech {

namespace {

using TupleKey = std::vector<int>;

TupleKey key_of(const RectangleComplex &cx)
{
  TupleKey key{static_cast<int>(cx.A.rows()), static_cast<int>(cx.A.cols())};
  for (const IntMatrix *m : {&cx.A, &cx.V, &cx.H, &cx.D})
    for (Eigen::Index i = 0; i < m->rows(); ++i)
      for (Eigen::Index j = 0; j < m->cols(); ++j)
        key.push_back((*m)(i, j));
  return key;
}

std::string dump_candidate(const RectangleComplex &cx, const TwistVector &n, const TwistVector &nv)
{
  std::ostringstream out;
  out << "pair: " << format_cycles(cx.pair.r) << ' ' << format_cycles(cx.pair.r_down) << "\nA:\n"
      << cx.A << "\nn:";
  for (int x : n)
    out << ' ' << x;
  out << "\nn':";
  for (int x : nv)
    out << ' ' << x;
  out << '\n';
  return out.str();
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn &&fn)
{
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard guard(lock);
        if (!failure)
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
    for (auto &t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace

std::vector<TupleSurvivor> sieve_tuple(const RectangleComplex &complex, const CriteriaConfig &criteria,
                                       std::int64_t *solved)
{
  const double beta = criteria.epsilon;
  const auto hs = enumerate_twists(criteria_bounds(complex.h_sizes(), complex.rectangles(), criteria.threshold()));
  const auto vs = enumerate_twists(criteria_bounds(complex.v_sizes(), complex.rectangles(), criteria.threshold()));
  const RectAreaScreen screen(complex, criteria);
  std::vector<TupleSurvivor> out;
  Geometry g;
  for (const auto &n : hs)
    for (const auto &nv : vs) {
      if (solved)
        ++*solved;
      if (!screen.admits(n, nv))
        continue;
      try {
        solve_raw(complex.A, n, nv, g);
      } catch (const SolverError &e) {
        throw PipelineError(e.what(), dump_candidate(complex, n, nv));
      }
      const SurfaceView view{complex.A, complex.V, complex.H, complex.D, n, nv, g.h, g.v, g.c, g.c_vert};
      if (!run_criteria(view, criteria).passed)
        continue;
      if (!admissible(n, beta) || !admissible(nv, beta))
        throw std::logic_error("sieve: survivor violates the twist-vector bound");
      TupleSurvivor s;
      s.twists = {n, nv};
      s.w = g.w;
      s.pf_eigenvalue = g.pf_eigenvalue;
      s.arithmetic = is_arithmetic(complex.A, n, nv);
      out.push_back(std::move(s));
    }
  return out;
}

PipelineReport run_pipeline(const PipelineConfig &config)
{
  if (config.max_rect < 2 || config.max_rect > 11)
    throw std::invalid_argument("run_pipeline: max_rect must be in [2, 11]");
  if (!(config.epsilon > 0))
    throw std::invalid_argument("run_pipeline: epsilon must be positive");

  PipelineReport report;
  report.config = config;

  FilterConfig filter;
  filter.quotient_rotation = config.quotient_rotation;
  filter.prefilter = Step1Config{config.genus_floor, 2};
  filter.jobs = config.jobs;

  std::map<TupleKey, TupleRecord> groups;
  std::map<TupleKey, RectangleComplex> representative;
  for (int n = 1; n < config.max_rect; ++n) {
    for (const auto &pair : enumerate_pairs_of_size(n, filter)) {
      RectangleComplex cx = build_complex(pair);
      if (!step1_filters(cx, *filter.prefilter).keep)
        continue;
      ++report.counts.pairs;
      auto key = key_of(cx);
      auto [it, fresh] = groups.try_emplace(key);
      if (fresh) {
        it->second.A = cx.A;
        it->second.V = cx.V;
        it->second.H = cx.H;
        it->second.D = cx.D;
        representative.emplace(key, std::move(cx));
      }
      it->second.pairs.push_back(pair);
    }
  }
  report.counts.tuples = static_cast<std::int64_t>(groups.size());

  std::vector<TupleRecord *> order;
  std::vector<const RectangleComplex *> complexes;
  for (auto &[key, rec] : groups) {
    order.push_back(&rec);
    complexes.push_back(&representative.at(key));
  }
  std::vector<std::int64_t> solved(order.size(), 0);
  CriteriaConfig criteria;
  criteria.epsilon = config.epsilon;
  parallel_for(order.size(), config.jobs, [&](std::size_t i) {
    order[i]->survivors = sieve_tuple(*complexes[i], criteria, &solved[i]);
  });

  for (std::size_t i = 0; i < order.size(); ++i) {
    report.counts.twist_pairs += solved[i];
    TupleRecord &rec = *order[i];
    if (rec.survivors.empty())
      continue;
    std::sort(rec.pairs.begin(), rec.pairs.end());
    const auto pairs = static_cast<std::int64_t>(rec.pairs.size());
    for (const auto &s : rec.survivors) {
      ++report.counts.survivors;
      report.counts.candidates += pairs;
      if (s.arithmetic)
        ++report.counts.arithmetic;
      else
        report.counts.non_arithmetic_candidates += pairs;
    }
    report.tuples.push_back(std::move(rec));
  }
  return report;
}

std::vector<Candidate> candidates(const PipelineReport &report)
{
  std::vector<Candidate> out;
  for (const auto &t : report.tuples)
    for (const auto &s : t.survivors)
      for (const auto &p : t.pairs)
        out.push_back({p, t.A, t.V, t.H, t.D, s.twists, s.w, s.arithmetic, std::nullopt});
  return out;
}

CandidateKey canonical_candidate(const PermutationPair &pair, const TwistVectorPair &twists)
{
  const CanonicalForm cf = canonical_form(pair);
  const RectangleComplex from = build_complex(pair);
  const RectangleComplex to = build_complex(cf.pair);
  if (static_cast<int>(twists.horizontal.size()) != from.h_count() ||
      static_cast<int>(twists.vertical.size()) != from.v_count())
    throw std::invalid_argument("canonical_candidate: twist length does not match the pair");
  CandidateKey key{cf.pair, {TwistVector(twists.horizontal.size()), TwistVector(twists.vertical.size())}};
  for (int i = 0; i < from.h_count(); ++i) {
    const int rect = cf.relabel(from.h_cyls[static_cast<std::size_t>(i)].front());
    key.twists.horizontal[static_cast<std::size_t>(to.h_of[static_cast<std::size_t>(rect)])] =
        twists.horizontal[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < from.v_count(); ++j) {
    const int rect = cf.relabel(from.v_cyls[static_cast<std::size_t>(j)].front());
    key.twists.vertical[static_cast<std::size_t>(to.v_of[static_cast<std::size_t>(rect)])] =
        twists.vertical[static_cast<std::size_t>(j)];
  }
  return key;
}

CandidateSurface realize(const PermutationPair &pair, const TwistVectorPair &twists)
{
  return solve_geometry(build_complex(pair), twists);
}

} // namespace veech
