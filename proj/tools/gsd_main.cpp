// Command-line front end: classify, analyze, and verification campaigns.
//
// Exit codes: 0 success or positive verdict, 1 negative mathematical verdict
// (or an equivalence failure in a campaign), 2 input error, 3 internal
// consistency failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gsd/harness.hpp"
#include "gsd/report.hpp"

using namespace gsd;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kInternal = 3 };

struct RunConfig {
  std::string field;  // empty: take the field from the spec file
  int D = 8;
  int jobs = 1;
  std::uint64_t seed = 0;
  int cap = 12;
  bool witness = false;
  bool no_symmetry = false;
  bool no_reduction = false;
  std::string output;
  std::string dump_dir;
  bool verbose = false;

  AnalysisOptions analysis() const {
    AnalysisOptions o;
    o.D = D;
    o.seed = seed;
    o.artinian_reduction = !no_reduction;
    return o;
  }
  FieldChoice field_or(const FieldChoice& fallback) const { return field.empty() ? fallback : FieldChoice::parse(field); }
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_report(const RunConfig& cfg, const nlohmann::json& j) {
  if (cfg.output.empty()) return;
  if (cfg.output == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw InputError("cannot write " + cfg.output);
  out << j.dump(2) << "\n";
}

// Human-readable text; moved to stderr when the JSON report goes to stdout.
std::ostream& text(const RunConfig& cfg) { return cfg.output == "-" ? std::cerr : std::cout; }

void add_common_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--field", cfg.field, "fp:<prime> or qq (default: the spec's field, else fp:32003)");
  app->add_option("--max-internal-degree,-D", cfg.D, "truncation degree for Poincare series")
      ->check(CLI::Range(2, 40));
  app->add_option("--jobs,-j", cfg.jobs, "worker threads for campaigns")->check(CLI::PositiveNumber);
  app->add_option("--seed", cfg.seed, "seed for random linear forms and spot checks");
  app->add_option("--cap", cfg.cap, "maximum number of minors to enumerate")->check(CLI::PositiveNumber);
  app->add_flag("--witness", cfg.witness, "include full cycle serializations of product witnesses");
  app->add_option("--output,-o", cfg.output, "write the JSON report here ('-' for standard output)");
  app->add_flag("--no-reduction", cfg.no_reduction, "resolve k over S/I without cutting by linear forms");
  app->add_flag("-v,--verbose", cfg.verbose, "print witness cycles");
}

std::string list(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

int cmd_classify(const RunConfig& cfg, const std::string& path) {
  IdealSpec spec = parse_ideal_spec(read_file(path));
  FieldChoice field = cfg.field_or(spec.field);
  const MinorSelection& sel = spec.selection;
  nlohmann::json j;
  j["meta"] = meta_json(field, cfg.D, cfg.seed);
  j["selection"] = selection_json(sel);
  if (sel.t() != 2) {
    text(cfg) << "Skipped: the block criterion applies to 2x2 minors (t = " << sel.t() << ")\n";
    j["conditions"] = {{"shape", "skipped"}};
    write_report(cfg, j);
    return kOk;
  }
  ShapeVerdict v = field.rational ? shape_classify(RationalField(), sel) : shape_classify(PrimeField(field.prime), sel);
  text(cfg) << v.to_string() << "\n";
  j["conditions"] = {{"shape", v.to_string()}};
  write_report(cfg, j);
  return v.kind == ShapeVerdict::Kind::not_block ? kNegative : kOk;
}

int cmd_analyze(const RunConfig& cfg, const std::string& path) {
  IdealSpec spec = parse_ideal_spec(read_file(path));
  FieldChoice field = cfg.field_or(spec.field);
  AnalysisOptions options = cfg.analysis();
  IdealAnalysis a = analyze_ideal(field, spec.selection, options);

  for (const auto& n : a.notices) text(cfg) << "notice: " << n << "\n";
  text(cfg) << "selection: " << a.selection.to_string() << " over " << field.to_string() << "\n";
  text(cfg) << "shape:   " << (a.shape ? a.shape->to_string() : "skipped") << "\n";
  text(cfg) << "linear:  " << (a.linear ? "yes" : "no") << "\n";
  text(cfg) << "product: " << (a.product_trivial ? "Trivial" : "Nontrivial") << "\n";
  text(cfg) << "golod:   " << a.golod.verdict.to_string();
  if (a.golod.fast_path != FastPath::none) text(cfg) << " (fast path: " << to_string(a.golod.fast_path) << ")";
  text(cfg) << "\n";
  text(cfg) << "betti totals: " << list(a.betti.totals()) << "\n" << a.betti.tally();
  if (a.witness && cfg.verbose)
    text(cfg) << "witness: a = " << a.witness->factor_a << "\n         b = " << a.witness->factor_b
              << "\n         a*b = " << a.witness->product << "\n";
  text(cfg) << "time: " << a.seconds << " s\n";
  write_report(cfg, analysis_report(a, field, options, cfg.witness));

  if (!a.hilbert_ok || a.cross_route_ok == false || a.kunneth_ok == false || (a.witness && !a.witness->verified)) {
    std::cerr << "internal consistency check failed\n";
    return kInternal;
  }
  bool negative = (a.shape && a.shape->kind != ShapeVerdict::Kind::block) || !a.linear || !a.product_trivial ||
                  a.golod.verdict.kind == GolodVerdict::Kind::not_golod;
  return negative ? kNegative : kOk;
}

int cmd_verify_theorem(const RunConfig& cfg, int rows, int cols, int t) {
  CensusOptions o;
  o.rows = rows;
  o.cols = cols;
  o.t = t;
  o.symmetry = !cfg.no_symmetry;
  o.cap = cfg.cap;
  o.jobs = cfg.jobs;
  o.field = cfg.field_or(FieldChoice{});
  o.analysis = cfg.analysis();
  o.dump_dir = cfg.dump_dir;
  auto start = std::chrono::steady_clock::now();
  CensusReport r = verify_theorem(o);
  text(cfg) << r.summary();
  text(cfg) << "time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  write_report(cfg, census_report(r, cfg.witness));
  if (r.internal_error()) return kInternal;
  return r.ok() ? kOk : kNegative;
}

int cmd_verify_restriction(const RunConfig& cfg, int rows, int cols) {
  FieldChoice field = cfg.field_or(FieldChoice{});
  RestrictionReport r = verify_restriction(rows, cols, field, !cfg.no_symmetry, cfg.cap, cfg.jobs);
  text(cfg) << "restriction check " << rows << "x" << cols << " over " << field.to_string() << "\n"
            << "trivial product: " << r.trivial_count << "\n"
            << "selections with a non-block pair restriction: " << r.contrapositive_checked << "\n"
            << "violations: " << r.violations << "\n";
  for (const auto& rec : r.records)
    if (!rec.consistent) text(cfg) << "VIOLATION " << rec.selection.to_string() << "\n";
  write_report(cfg, restriction_report(r, field, cfg.D, cfg.seed));
  return r.ok() ? kOk : kNegative;
}

int cmd_verify_three_minors(const RunConfig& cfg) {
  FieldChoice field = cfg.field_or(FieldChoice{});
  AnalysisOptions options = cfg.analysis();
  ThreeMinorReport r = reproduce_three_of_four_minors(field, options);
  text(cfg) << "three of the four 3x3 minors of a generic 3x4 matrix, over " << field.to_string() << "\n";
  for (std::size_t k = 0; k < r.choices.size(); ++k) {
    const auto& c = r.choices[k];
    text(cfg) << "omit minor " << k + 1 << ": totals " << list(c.totals) << ", linear "
              << (c.analysis.linear ? "yes" : "no") << ", product "
              << (c.analysis.product_trivial ? "Trivial" : "Nontrivial") << ", golod "
              << c.analysis.golod.verdict.to_string() << (c.ok() ? "" : "  (unexpected)") << "\n";
  }
  text(cfg) << "graded Betti numbers (i, j, value):";
  for (const auto& e : r.graded) text(cfg) << " (" << e[0] << "," << e[1] << "," << e[2] << ")";
  text(cfg) << "\n" << r.choices.front().analysis.betti.tally();
  write_report(cfg, three_minor_report(r, field, options, cfg.witness));
  for (const auto& c : r.choices)
    if (!c.analysis.hilbert_ok || c.analysis.cross_route_ok == false) return kInternal;
  return r.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subdeterminantal ideals: block shape, linear resolutions, Koszul products and Golod bounds"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  RunConfig cfg;

  std::string spec_path;
  auto* classify = app.add_subcommand("classify", "block-shape verdict for an ideal spec");
  classify->add_option("spec", spec_path, "ideal spec (JSON)")->required();
  add_common_options(classify, cfg);

  auto* analyze = app.add_subcommand("analyze", "all four conditions, Betti table, witness and series");
  analyze->add_option("spec", spec_path, "ideal spec (JSON)")->required();
  add_common_options(analyze, cfg);

  auto* verify = app.add_subcommand("verify", "verification campaigns");
  verify->require_subcommand(1);
  int rows = 2, cols = 3, t = 2;
  auto* theorem = verify->add_subcommand("theorem", "census of every nonzero selection of minors");
  theorem->add_option("--rows", rows)->check(CLI::Range(2, 6));
  theorem->add_option("--cols", cols)->check(CLI::Range(2, 6));
  theorem->add_option("--t", t, "minor size (t != 2 only records data)")->check(CLI::Range(2, 6));
  theorem->add_flag("--no-symmetry", cfg.no_symmetry, "evaluate every selection instead of orbit representatives");
  theorem->add_option("--dump-dir", cfg.dump_dir, "write artifacts for failing selections here");
  add_common_options(theorem, cfg);
  auto* restriction = verify->add_subcommand("restriction", "pair restrictions of trivial-product selections");
  restriction->add_option("--rows", rows)->check(CLI::Range(2, 6));
  restriction->add_option("--cols", cols)->check(CLI::Range(2, 6));
  restriction->add_flag("--no-symmetry", cfg.no_symmetry, "evaluate every selection");
  add_common_options(restriction, cfg);
  auto* three = verify->add_subcommand("remark45", "three of the four maximal minors of a generic 3x4 matrix");
  add_common_options(three, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*classify) return cmd_classify(cfg, spec_path);
    if (*analyze) return cmd_analyze(cfg, spec_path);
    if (*theorem) {
      if (t > std::min(rows, cols)) throw InputError("--t must not exceed min(rows, cols)");
      return cmd_verify_theorem(cfg, rows, cols, t);
    }
    if (*restriction) return cmd_verify_restriction(cfg, rows, cols);
    if (*three) return cmd_verify_three_minors(cfg);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    // Bad --field text.
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInputError;
}
