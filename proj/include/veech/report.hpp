#ifndef VEECH_REPORT_HPP
#define VEECH_REPORT_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "veech/pipeline.hpp"

namespace veech {

class ReportParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// "[[6,1],[1,1]]"
std::string format_matrix(const IntMatrix &m);
/// "(1,4)"
std::string format_tuple(const TwistVector &n);
/// "(1,1.23607)", six significant digits.
std::string format_w(const Eigen::VectorXd &w);

/// Tuple blocks: the A, V, H, D line, the realizing pairs, then one
/// "n=..., n'=..., w=..." line per surviving twist pair. A '#' header echoes
/// the configuration and a '#' footer the stage counts.
void write_text_report(std::ostream &out, const PipelineReport &report);

/// One JSON object per candidate:
/// {pair:{n,r,r_down}, A, V, H, D, twists:{n,n_vert}, w, arithmetic, verdicts}.
void write_jsonl(std::ostream &out, const std::vector<Candidate> &candidates);
std::string to_json_line(const Candidate &c);

/// Blank lines are skipped. Throws ReportParseError on malformed input.
std::vector<Candidate> read_jsonl(std::istream &in);
Candidate from_json_line(const std::string &line);

} // namespace veech

#endif // VEECH_REPORT_HPP
