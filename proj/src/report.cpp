#include "veech/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace veech {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const IntMatrix &m)
{
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from(const Json &j, const char *name)
{
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw ReportParseError(std::string(name) + ": expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json &row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ReportParseError(std::string(name) + ": ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = row[static_cast<std::size_t>(k)].get<int>();
  }
  return m;
}

Json connection_json(const SaddleConnection &s)
{
  return Json::array({s.dx, s.dy});
}

Json verdict_json(const Candidate &c)
{
  Json v;
  v["criteria"] = "passed";
  if (!c.verdict) {
    v["verify"] = nullptr;
    return v;
  }
  const VerifyVerdict &d = *c.verdict;
  Json w;
  w["kind"] = to_string(d.kind);
  w["cross"] = d.cross;
  w["l_max"] = d.l_max;
  w["exact"] = d.exact;
  if (d.kind != VerifyVerdict::Kind::inconclusive)
    w["witness"] = Json::array({connection_json(d.first), connection_json(d.second)});
  v["verify"] = std::move(w);
  return v;
}

VerifyVerdict::Kind kind_from(const std::string &s)
{
  for (auto k : {VerifyVerdict::Kind::refuted, VerifyVerdict::Kind::survived, VerifyVerdict::Kind::inconclusive})
    if (s == to_string(k))
      return k;
  throw ReportParseError("unknown verdict kind: " + s);
}

Perm perm_from(const Json &j, int n, const char *name)
{
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ReportParseError(std::string(name) + ": expected " + std::to_string(n) + " images");
  const auto images = j.get<std::vector<int>>();
  try {
    return Perm(images);
  } catch (const std::invalid_argument &e) {
    throw ReportParseError(std::string(name) + ": " + e.what());
  }
}

} // namespace

std::string format_matrix(const IntMatrix &m)
{
  return matrix_json(m).dump();
}

std::string format_tuple(const TwistVector &n)
{
  std::string out = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(n[i]);
  }
  return out + ")";
}

std::string format_w(const Eigen::VectorXd &w)
{
  std::string out = "(";
  char buf[32];
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i)
      out += ',';
    std::snprintf(buf, sizeof buf, "%g", w(i));
    out += buf;
  }
  return out + ")";
}

void write_text_report(std::ostream &out, const PipelineReport &report)
{
  const PipelineConfig &cfg = report.config;
  char eps[32];
  std::snprintf(eps, sizeof eps, "%g", cfg.epsilon);
  out << "# epsilon=" << eps << " max_rect=" << cfg.max_rect << " genus_floor=" << cfg.genus_floor
      << " quotient_rotation=" << (cfg.quotient_rotation ? "on" : "off") << '\n';
  for (const TupleRecord &t : report.tuples) {
    out << '\n'
        << "A=" << format_matrix(t.A) << ", V=" << format_matrix(t.V) << ", H=" << format_matrix(t.H)
        << ", D=" << format_matrix(t.D) << '\n';
    for (const PermutationPair &p : t.pairs)
      out << "  pair r=" << format_cycles(p.r) << " r'=" << format_cycles(p.r_down) << '\n';
    for (const TupleSurvivor &s : t.survivors)
      out << "n=" << format_tuple(s.twists.horizontal) << ", n'=" << format_tuple(s.twists.vertical)
          << ", w=" << format_w(s.w) << '\n';
  }
  const StageCounts &c = report.counts;
  out << '\n'
      << "# pairs=" << c.pairs << " tuples=" << c.tuples << " twist_pairs=" << c.twist_pairs
      << " survivors=" << c.survivors << " arithmetic=" << c.arithmetic << " candidates=" << c.candidates
      << " non_arithmetic_candidates=" << c.non_arithmetic_candidates << '\n';
}

std::string to_json_line(const Candidate &c)
{
  Json j;
  j["pair"] = {{"n", c.pair.size()}, {"r", c.pair.r.images()}, {"r_down", c.pair.r_down.images()}};
  j["A"] = matrix_json(c.A);
  j["V"] = matrix_json(c.V);
  j["H"] = matrix_json(c.H);
  j["D"] = matrix_json(c.D);
  j["twists"] = {{"n", c.twists.horizontal}, {"n_vert", c.twists.vertical}};
  j["w"] = std::vector<double>(c.w.data(), c.w.data() + c.w.size());
  j["arithmetic"] = c.arithmetic;
  j["verdicts"] = verdict_json(c);
  return j.dump();
}

void write_jsonl(std::ostream &out, const std::vector<Candidate> &candidates)
{
  for (const Candidate &c : candidates)
    out << to_json_line(c) << '\n';
}

Candidate from_json_line(const std::string &line)
{
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error &e) {
    throw ReportParseError(e.what());
  }
  try {
    if (!j.is_object() || !j.contains("pair") || !j.contains("twists"))
      throw ReportParseError("candidate needs 'pair' and 'twists'");
    Candidate c;
    const Json &p = j.at("pair");
    const int n = p.at("n").get<int>();
    if (n < 1 || n > kMaxPoints)
      throw ReportParseError("pair.n out of range");
    c.pair = PermutationPair(perm_from(p.at("r"), n, "pair.r"), perm_from(p.at("r_down"), n, "pair.r_down"));
    if (!is_transitive(c.pair))
      throw ReportParseError("pair is not transitive");
    const RectangleComplex cx = build_complex(c.pair);
    c.A = cx.A;
    c.V = cx.V;
    c.H = cx.H;
    c.D = cx.D;
    for (const char *name : {"A", "V", "H", "D"}) {
      if (!j.contains(name))
        continue;
      const IntMatrix given = matrix_from(j.at(name), name);
      const IntMatrix &mine = name[0] == 'A' ? cx.A : name[0] == 'V' ? cx.V : name[0] == 'H' ? cx.H : cx.D;
      if (given.rows() != mine.rows() || given.cols() != mine.cols() || given != mine)
        throw ReportParseError(std::string(name) + " does not match the pair");
    }
    c.twists.horizontal = j.at("twists").at("n").get<TwistVector>();
    c.twists.vertical = j.at("twists").at("n_vert").get<TwistVector>();
    if (static_cast<int>(c.twists.horizontal.size()) != cx.h_count() ||
        static_cast<int>(c.twists.vertical.size()) != cx.v_count())
      throw ReportParseError("twist vector length does not match the cylinder count");
    for (const TwistVector *t : {&c.twists.horizontal, &c.twists.vertical})
      for (int x : *t)
        if (x <= 0)
          throw ReportParseError("twist entries must be positive");
    if (j.contains("w")) {
      const auto w = j.at("w").get<std::vector<double>>();
      c.w = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
    }
    if (j.contains("arithmetic"))
      c.arithmetic = j.at("arithmetic").get<bool>();
    if (j.contains("verdicts") && j.at("verdicts").contains("verify") && !j.at("verdicts").at("verify").is_null()) {
      const Json &v = j.at("verdicts").at("verify");
      VerifyVerdict d;
      d.kind = kind_from(v.at("kind").get<std::string>());
      d.cross = v.at("cross").get<double>();
      d.l_max = v.at("l_max").get<double>();
      d.exact = v.value("exact", false);
      if (v.contains("witness")) {
        const Json &w = v.at("witness");
        d.first.dx = w.at(0).at(0).get<double>();
        d.first.dy = w.at(0).at(1).get<double>();
        d.second.dx = w.at(1).at(0).get<double>();
        d.second.dy = w.at(1).at(1).get<double>();
      }
      c.verdict = d;
    }
    return c;
  } catch (const nlohmann::json::exception &e) {
    throw ReportParseError(e.what());
  }
}

std::vector<Candidate> read_jsonl(std::istream &in)
{
  std::vector<Candidate> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      out.push_back(from_json_line(line));
    } catch (const ReportParseError &e) {
      throw ReportParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

} // namespace veech
