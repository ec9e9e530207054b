// veech_sieve: enumerate Thurston-Veech candidates, verify them by saddle
// connection search, and tabulate the closed-form triangle areas.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "veech/closed_forms.hpp"
#include "veech/pipeline.hpp"
#include "veech/report.hpp"

using namespace veech;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

struct EnumerateOptions
{
  PipelineConfig config;
  std::string out = "-";
};

struct VerifyOptions
{
  std::string input = "-";
  std::string out;
  double cutoff = 0.1;
  std::vector<double> schedule{2, 4, 8, 16};
};

struct FormulaOptions
{
  std::string family;
  std::vector<long long> d;
  long long d_from = 0, d_to = -1;
  int m = 0;
  std::vector<int> n;
  std::string id;
  std::string csv;
};

int cmd_enumerate(const EnumerateOptions &opt)
{
  PipelineReport report;
  try {
    report = run_pipeline(opt.config);
  } catch (const PipelineError &e) {
    std::cerr << "solver failure: " << e.what() << '\n' << e.dump;
    return kExitSolver;
  } catch (const std::invalid_argument &e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  if (opt.out == "-") {
    write_text_report(std::cout, report);
    return 0;
  }
  std::ofstream text(opt.out + ".txt"), jsonl(opt.out + ".jsonl");
  if (!text || !jsonl) {
    std::cerr << "cannot write " << opt.out << ".{txt,jsonl}\n";
    return kExitUsage;
  }
  write_text_report(text, report);
  write_jsonl(jsonl, candidates(report));
  const StageCounts &c = report.counts;
  std::cout << "pairs " << c.pairs << ", tuples " << c.tuples << ", twist pairs " << c.twist_pairs << ", survivors "
            << c.survivors << " (" << c.arithmetic << " arithmetic), non-arithmetic candidates "
            << c.non_arithmetic_candidates << '\n';
  return 0;
}

std::string connection_text(const SaddleConnection &s)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.9g,%.9g)", s.dx, s.dy);
  return buf;
}

int cmd_verify(const VerifyOptions &opt)
{
  std::vector<Candidate> input;
  try {
    if (opt.input == "-") {
      input = read_jsonl(std::cin);
    } else {
      std::ifstream in(opt.input);
      if (!in) {
        std::cerr << "cannot read " << opt.input << '\n';
        return kExitUsage;
      }
      input = read_jsonl(in);
    }
  } catch (const ReportParseError &e) {
    std::cerr << "malformed candidate file: " << e.what() << '\n';
    return kExitUsage;
  }

  std::map<VerifyVerdict::Kind, int> tally;
  for (Candidate &c : input) {
    try {
      c.verdict = verify_candidate(realize(c.pair, c.twists), opt.cutoff, opt.schedule);
    } catch (const SolverError &e) {
      std::cerr << "solver failure: " << e.what() << '\n' << to_json_line(c) << '\n';
      return kExitSolver;
    }
    const VerifyVerdict &v = *c.verdict;
    ++tally[v.kind];
    std::printf("%-9s cross=%.9g L=%g %s r=%s r'=%s n=%s n'=%s", to_string(v.kind), v.cross, v.l_max,
                v.exact ? "exact" : "float", format_cycles(c.pair.r).c_str(), format_cycles(c.pair.r_down).c_str(),
                format_tuple(c.twists.horizontal).c_str(), format_tuple(c.twists.vertical).c_str());
    if (v.kind != VerifyVerdict::Kind::inconclusive)
      std::printf(" witness=%s,%s", connection_text(v.first).c_str(), connection_text(v.second).c_str());
    std::printf("\n");
  }
  std::printf("verdicts %zu: refuted %d (Area_VT < %g certified), survived %d, inconclusive %d\n", input.size(),
              tally[VerifyVerdict::Kind::refuted], opt.cutoff / 2, tally[VerifyVerdict::Kind::survived],
              tally[VerifyVerdict::Kind::inconclusive]);
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) {
      std::cerr << "cannot write " << opt.out << '\n';
      return kExitUsage;
    }
    write_jsonl(out, input);
  }
  return 0;
}

std::vector<FamilySpec> family_specs(const FormulaOptions &opt)
{
  std::vector<long long> ds = opt.d;
  if (opt.d_to >= opt.d_from && opt.d_from > 0)
    for (long long D = opt.d_from; D <= opt.d_to; ++D)
      ds.push_back(D);

  std::vector<FamilySpec> specs;
  const auto need = [](bool ok, const char *what) {
    if (!ok)
      throw CLI::ValidationError(what);
  };
  if (opt.family == "h2" || opt.family == "prym4") {
    need(!ds.empty(), "--d or --d-from/--d-to required");
    for (long long D : ds) {
      if (opt.family == "h2")
        specs.push_back(H2Family{D});
      else
        specs.push_back(PrymH4Family{D});
    }
  } else if (opt.family == "bm") {
    need(opt.m > 0 && !opt.n.empty(), "--m and --n required");
    for (int n : opt.n)
      specs.push_back(BouwMollerFamily{opt.m, n});
  } else if (opt.family == "ngon" || opt.family == "double-ngon") {
    need(!opt.n.empty(), "--n required");
    for (int n : opt.n) {
      if (opt.family == "ngon")
        specs.push_back(RegularNgon{n});
      else
        specs.push_back(DoubleNgon{n});
    }
  } else if (opt.family == "isolated") {
    const std::map<std::string, IsolatedId> ids{{"ks-4-3-512", IsolatedId::ks_4_3_512},
                                                {"ks-9-3-49", IsolatedId::ks_9_3_49},
                                                {"ks-5-3-715", IsolatedId::ks_5_3_715}};
    if (opt.id.empty()) {
      for (const auto &[name, id] : ids)
        specs.push_back(IsolatedSurface{id});
    } else {
      auto it = ids.find(opt.id);
      need(it != ids.end(), "unknown --id");
      specs.push_back(IsolatedSurface{it->second});
    }
  } else {
    throw CLI::ValidationError("unknown --family " + opt.family);
  }
  return specs;
}

int cmd_formulas(const FormulaOptions &opt)
{
  std::vector<FamilySpec> specs;
  try {
    specs = family_specs(opt);
  } catch (const CLI::ValidationError &e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  const auto rows = emit_family_table(specs);
  if (specs.size() == 1 && rows.front().status != "ok") {
    std::cerr << rows.front().status << '\n';
    return kExitUsage;
  }
  if (!opt.csv.empty()) {
    std::ofstream out(opt.csv);
    if (!out) {
      std::cerr << "cannot write " << opt.csv << '\n';
      return kExitUsage;
    }
    write_csv(out, rows);
    return 0;
  }
  std::printf("%-12s %-12s %-12s %s\n", "param", "area_t", "area_vt", "status");
  for (const auto &r : rows)
    std::printf("%-12s %-12.6g %-12.6g %s\n", r.param.c_str(), r.area_t, r.area_vt, r.status.c_str());
  return 0;
}

int cmd_table1(bool json)
{
  const auto rows = table1_rows();
  if (json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &r : rows)
      out.push_back({{"area_vt", r.area_vt}, {"surfaces", r.surfaces}, {"description", r.description}});
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::printf("%-10s %-8s %s\n", "Area_VT", "count", "surface");
  int total = 0;
  for (const auto &r : rows) {
    std::printf("%-10.6g %-8d %s\n", r.area_vt, r.surfaces, r.description.c_str());
    total += r.surfaces;
  }
  std::printf("%zu rows, %d surfaces\n", rows.size(), total);
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Thurston-Veech sieve for lattice surfaces with large virtual triangles"};
  app.require_subcommand(1);

  EnumerateOptions en;
  auto *enumerate = app.add_subcommand("enumerate", "Steps 1-3: pairs, twist vectors, criteria");
  enumerate->add_option("--epsilon", en.config.epsilon, "Target Area_VT bound")->check(CLI::PositiveNumber);
  auto *max_rect = enumerate->add_option("--max-rect", en.config.max_rect,
                                         "Exclusive bound on rectangles (default floor(1/(2 epsilon)))");
  max_rect->check(CLI::Range(2, 11));
  enumerate->add_option("--genus-floor", en.config.genus_floor, "Discard genus <= this")->check(CLI::Range(0, 10));
  enumerate->add_flag("--quotient-rotation", en.config.quotient_rotation, "Identify (r, r') with (r', r)");
  enumerate->add_option("--jobs", en.config.jobs, "Worker threads")->envname("VEECH_SIEVE_JOBS")->check(CLI::Range(1, 1024));
  enumerate->add_option("--out", en.out, "Output prefix for .txt and .jsonl, '-' for stdout text");

  VerifyOptions ve;
  auto *verify = app.add_subcommand("verify", "Step 4: saddle connection search on candidates");
  verify->add_option("input", ve.input, "JSON-lines candidate file, '-' for stdin");
  verify->add_option("--cutoff", ve.cutoff, "Refute below this normalized cross product")->check(CLI::PositiveNumber);
  verify->add_option("--schedule", ve.schedule, "Search radii")->check(CLI::PositiveNumber);
  verify->add_option("--out", ve.out, "Write candidates with verdicts as JSON lines");

  FormulaOptions fo;
  auto *formulas = app.add_subcommand("formulas", "Closed-form Area_T and Area_VT");
  formulas->add_option("--family", fo.family, "h2|prym4|bm|ngon|double-ngon|isolated")
      ->required()
      ->check(CLI::IsMember({"h2", "prym4", "bm", "ngon", "double-ngon", "isolated"}));
  formulas->add_option("--d", fo.d, "Discriminants");
  formulas->add_option("--d-from", fo.d_from, "First discriminant of a range");
  formulas->add_option("--d-to", fo.d_to, "Last discriminant of a range");
  formulas->add_option("--m", fo.m, "Bouw-Moller m");
  formulas->add_option("--n", fo.n, "Bouw-Moller n, or polygon sides");
  formulas->add_option("--id", fo.id, "ks-4-3-512|ks-9-3-49|ks-5-3-715");
  formulas->add_option("--csv", fo.csv, "Write CSV instead of a table");

  bool table1_json = false;
  auto *table1 = app.add_subcommand("table1", "Non-arithmetic lattice surfaces with Area_VT > 0.05");
  table1->add_flag("--json", table1_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*enumerate) {
    if (max_rect->count() == 0)
      en.config.max_rect = static_cast<int>(1.0 / (2.0 * en.config.epsilon) + 1e-9);
    if (en.config.max_rect < 2 || en.config.max_rect > 11) {
      std::cerr << "--max-rect must be in [2, 11]\n";
      return kExitUsage;
    }
    return cmd_enumerate(en);
  }
  if (*verify)
    return cmd_verify(ve);
  if (*formulas)
    return cmd_formulas(fo);
  return cmd_table1(table1_json);
}
