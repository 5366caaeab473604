#include "gsd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "gsd/koszul.hpp"
#include "gsd/report.hpp"

namespace gsd {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(k) for k in [0, n) on `jobs` threads pulling indices from a
// shared counter. body returns false to ask the remaining workers to stop.
void parallel_for(std::size_t n, int jobs, const std::function<bool(std::size_t)>& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load()) {
      std::size_t k = next.fetch_add(1);
      if (k >= n) return;
      if (!body(k)) stop.store(true);
    }
  };
  int count = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (count == 1) {
    worker();
    return;
  }
  std::vector<std::thread> threads;
  for (int k = 0; k < count; ++k) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <class Result>
Result with_field(const FieldChoice& choice, const std::function<Result(const PrimeField&)>& fp,
                  const std::function<Result(const RationalField&)>& qq) {
  if (choice.rational) return qq(RationalField());
  return fp(PrimeField(choice.prime));
}

bool same_verdicts(const IdealAnalysis& a, const IdealAnalysis& b) {
  auto kind = [](const IdealAnalysis& x) { return x.shape ? static_cast<int>(x.shape->kind) : -1; };
  return kind(a) == kind(b) && a.linear == b.linear && a.product_trivial == b.product_trivial &&
         a.betti == b.betti && a.golod.verdict.to_string() == b.golod.verdict.to_string();
}

// Problems with a finished analysis that are not about the equivalence
// itself; internal ones map to the consistency-failure exit status.
void audit(CensusRecord& r) {
  const IdealAnalysis& a = r.analysis;
  auto fail = [&](const std::string& why, bool internal) {
    if (!r.failure.empty()) r.failure += "; ";
    r.failure += why;
    r.internal_error = r.internal_error || internal;
  };
  if (!a.hilbert_ok) fail("Hilbert series certificate failed", true);
  if (a.cross_route_ok == false) fail("Koszul Betti table differs from the resolution", true);
  if (a.kunneth_ok == false) fail("Kunneth convolution mismatch", true);
  if (!a.product_trivial && (!a.witness || !a.witness->verified)) fail("product witness did not re-verify", true);
  if (r.equivalence == false) fail("equivalence pattern violated: " + verdict_combination(a), false);
}

}  // namespace

bool IdealAnalysis::golod_measured_not_golod() const {
  return golod.verdict.kind == GolodVerdict::Kind::not_golod && !golod.fast_path_unconfirmed;
}

template <class F>
IdealAnalysis analyze_ideal(const F& field, const MinorSelection& sel, const AnalysisOptions& options) {
  auto start = Clock::now();
  IdealAnalysis a{.selection = sel, .field = field.name()};
  const GenericMatrix& x = sel.matrix();
  const int n = x.nvars();
  auto gens = selection_polynomials(field, sel);
  auto grading = x.grading(GradingMode::fine);
  auto gb = buchberger(field, n, gens);

  a.betti = minimal_resolution(field, gens, grading).table;
  a.hilbert_ok = hilbert_certificate(a.betti, gb, std::max(options.D, a.betti.max_internal_degree() + 1));
  a.linear = linear_resolution_check(a.betti, sel.t());
  if (sel.t() == 2)
    a.shape = shape_classify(field, sel);
  else
    a.notices.push_back("shape check skipped: the block criterion applies to 2x2 minors, t = " +
                        std::to_string(sel.t()));

  QuotientRing<F> ring(gb, grading);
  KoszulComplex<F> complex(ring);
  KoszulHomology<F> homology(complex);
  auto product = trivial_product_check(homology, a.betti);
  a.product_trivial = product.trivial;
  a.pairs_checked = product.pairs_checked;
  if (product.witness) {
    const auto& w = *product.witness;
    auto names = x.names();
    WitnessRecord rec{.i_a = w.a.i,
                      .j_a = w.a.key.total(),
                      .i_b = w.b.i,
                      .j_b = w.b.key.total(),
                      .key_a = w.a.key.to_string(),
                      .key_b = w.b.key.to_string(),
                      .factor_a = chain_to_string(w.factor_a, names, x.cols()),
                      .factor_b = chain_to_string(w.factor_b, names, x.cols()),
                      .product = chain_to_string(w.product, names, x.cols())};
    rec.verified = verify_witness_text(rec.factor_a, rec.factor_b, rec.product, gb, grading, names, x.cols()).ok();
    a.witness = std::move(rec);
  }
  if (options.cross_route)
    a.cross_route_ok = koszul_betti_table(homology, a.betti.max_internal_degree() + 1) == a.betti;

  auto groups = disjoint_split(sel);
  a.disjoint_groups = groups.size();
  if (options.kunneth && groups.size() >= 2) a.kunneth_ok = kunneth_check(field, sel).ok;

  FastPath hint = FastPath::none;
  if (groups.size() == 2)
    hint = FastPath::disjoint_split;
  else if (!a.product_trivial)
    hint = FastPath::product_witness;
  GolodOptions golod_options;
  golod_options.D = options.D;
  golod_options.seed = options.seed;
  golod_options.artinian_reduction = options.artinian_reduction;
  a.golod = golod_check(field, gens, grading, a.betti, golod_options, hint);

  a.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return a;
}

IdealAnalysis analyze_ideal(const FieldChoice& field, const MinorSelection& sel, const AnalysisOptions& options) {
  return with_field<IdealAnalysis>(
      field, [&](const PrimeField& f) { return analyze_ideal(f, sel, options); },
      [&](const RationalField& f) { return analyze_ideal(f, sel, options); });
}

std::optional<bool> equivalence_holds(const IdealAnalysis& a) {
  if (a.selection.t() != 2 || a.selection.empty() || !a.shape) return std::nullopt;
  bool block = a.shape->kind == ShapeVerdict::Kind::block;
  bool golod_ok =
      block ? a.golod.verdict.kind == GolodVerdict::Kind::consistent_up_to : a.golod_measured_not_golod();
  return a.linear == block && a.product_trivial == block && golod_ok;
}

std::string verdict_combination(const IdealAnalysis& a) {
  std::string shape = a.shape ? yes_no(a.shape->kind == ShapeVerdict::Kind::block) : "skipped";
  std::string golod = a.golod.verdict.kind == GolodVerdict::Kind::consistent_up_to ? "ConsistentUpTo" : "NotGolod";
  return std::string("linear=") + yes_no(a.linear) + " block=" + shape + " trivial=" + yes_no(a.product_trivial) +
         " golod=" + golod;
}

// ------------------------------------------------------------------- census

bool CensusReport::internal_error() const {
  return std::any_of(records.begin(), records.end(), [](const CensusRecord& r) { return r.internal_error; });
}

bool CensusReport::ok() const {
  if (halted || equivalence_failures > 0 || internal_error()) return false;
  for (const auto& r : records)
    if (!r.failure.empty()) return false;
  return std::all_of(spot_checks.begin(), spot_checks.end(),
                     [](const SpotCheck& s) { return s.canonical_matches && s.verdicts_match; });
}

std::string CensusReport::summary() const {
  std::ostringstream out;
  out << "census " << options.rows << "x" << options.cols << " t=" << options.t << " over " << options.field.to_string()
      << ", D=" << options.analysis.D << (options.symmetry ? ", up to symmetry (" : " (") << records.size()
      << " evaluated)\n";
  out << "nonzero selections: " << nonzero_selections << "\n";
  out << "linear: " << linear_count << "  block: " << block_count << "  trivial product: " << trivial_count
      << "  all three: " << all_three_count << "\n";
  out << "golod: ConsistentUpTo " << consistent_count << ", NotGolod " << not_golod_count << "\n";
  if (options.t == 2)
    out << "equivalence failures: " << equivalence_failures << "\n";
  else
    out << "t != 2: verdict combinations are recorded as data, no equivalence is asserted\n";
  std::size_t width = 0;
  for (const auto& [combo, count] : combinations) width = std::max(width, combo.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "combination" << "count\n";
  for (const auto& [combo, count] : combinations)
    out << std::left << std::setw(static_cast<int>(width) + 2) << combo << count << "\n";
  if (!spot_checks.empty()) {
    auto agree = std::count_if(spot_checks.begin(), spot_checks.end(),
                               [](const SpotCheck& s) { return s.canonical_matches && s.verdicts_match; });
    out << "symmetry spot checks: " << agree << "/" << spot_checks.size() << " agree\n";
  }
  for (const auto& r : records)
    if (!r.failure.empty()) out << "FAILURE " << r.analysis.selection.to_string() << ": " << r.failure << "\n";
  if (halted) out << "census halted at the first failure\n";
  for (const auto& d : dumps) out << "artifacts: " << d << "\n";
  return out.str();
}

CensusReport verify_theorem(const CensusOptions& options) {
  CensusReport report;
  report.options = options;
  auto selections = enumerate_selections(options.rows, options.cols, options.t, options.symmetry, options.cap);

  std::vector<EnumeratedSelection> work;
  for (auto& e : selections) {
    if (e.selection.empty())
      report.empty_selection_is_empty = options.t != 2 ||
                                        shape_classify_combinatorial(e.selection).kind == ShapeVerdict::Kind::empty;
    else
      work.push_back(std::move(e));
  }

  std::vector<std::optional<CensusRecord>> slots(work.size());
  parallel_for(work.size(), options.jobs, [&](std::size_t k) {
    CensusRecord r{.analysis = IdealAnalysis{.selection = work[k].selection, .field = options.field.to_string()},
                   .orbit_size = work[k].orbit_size};
    try {
      r.analysis = analyze_ideal(options.field, work[k].selection, options.analysis);
      r.equivalence = equivalence_holds(r.analysis);
      audit(r);
    } catch (const std::exception& e) {
      // SerreViolation, a disagreeing shape test, or arithmetic overflow.
      r.failure = e.what();
      r.internal_error = true;
    }
    bool keep_going = r.failure.empty() || !options.halt_on_failure;
    slots[k] = std::move(r);
    return keep_going;
  });

  for (auto& slot : slots) {
    if (!slot) {
      report.halted = true;
      continue;
    }
    CensusRecord& r = *slot;
    const IdealAnalysis& a = r.analysis;
    const std::uint64_t w = r.orbit_size;
    report.nonzero_selections += w;
    bool block = a.shape && a.shape->kind == ShapeVerdict::Kind::block;
    if (a.linear) report.linear_count += w;
    if (block) report.block_count += w;
    if (a.product_trivial) report.trivial_count += w;
    if (a.linear && block && a.product_trivial) report.all_three_count += w;
    if (r.failure.empty() || !r.internal_error) {
      if (a.golod.verdict.kind == GolodVerdict::Kind::consistent_up_to)
        report.consistent_count += w;
      else
        report.not_golod_count += w;
      report.combinations[verdict_combination(a)] += w;
    }
    if (r.equivalence == false) report.equivalence_failures += w;
    if (!r.failure.empty() && !options.dump_dir.empty())
      report.dumps.push_back(dump_failure(options.field, a, r.failure, options.dump_dir));
    report.records.push_back(std::move(r));
  }
  if (report.halted) return report;

  // Orbit invariance: re-run a few representatives from a random non-canonical member.
  std::vector<std::size_t> eligible;
  for (std::size_t k = 0; k < report.records.size(); ++k)
    if (report.records[k].orbit_size > 1) eligible.push_back(k);
  std::mt19937_64 rng(options.analysis.seed);
  std::shuffle(eligible.begin(), eligible.end(), rng);
  eligible.resize(std::min<std::size_t>(eligible.size(), static_cast<std::size_t>(std::max(0, options.symmetry_spot_checks))));
  std::sort(eligible.begin(), eligible.end());
  for (std::size_t k : eligible) {
    const auto& rep = report.records[k].analysis.selection;
    std::vector<int> rows(static_cast<std::size_t>(options.rows)), cols(static_cast<std::size_t>(options.cols));
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    MinorSelection member = rep;
    for (int attempt = 0; attempt < 64 && member == rep; ++attempt) {
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      bool transpose = options.rows == options.cols && (rng() & 1);
      member = permute_selection(rep, rows, cols, transpose);
    }
    SpotCheck s{.record = k, .member = member};
    s.canonical_matches = canonicalize(member) == rep;
    try {
      s.verdicts_match = same_verdicts(analyze_ideal(options.field, member, options.analysis), report.records[k].analysis);
    } catch (const std::exception&) {
      s.verdicts_match = false;
    }
    report.spot_checks.push_back(std::move(s));
  }
  return report;
}

// -------------------------------------------------------------- restriction

std::vector<std::pair<std::string, ShapeVerdict>> pair_restrictions(const MinorSelection& sel) {
  std::vector<std::pair<std::string, ShapeVerdict>> out;
  const GenericMatrix& x = sel.matrix();
  for (Axis axis : {Axis::rows, Axis::columns}) {
    int extent = axis == Axis::rows ? x.rows() : x.cols();
    for (int a = 1; a <= extent; ++a)
      for (int b = a + 1; b <= extent; ++b) {
        std::string label = (axis == Axis::rows ? "rows " : "cols ") + std::to_string(a) + "," + std::to_string(b);
        out.emplace_back(label, shape_classify_combinatorial(restrict_pair(sel, axis, a, b)));
      }
  }
  return out;
}

namespace {

template <class F>
bool products_trivial(const F& field, const MinorSelection& sel) {
  auto gens = selection_polynomials(field, sel);
  auto grading = sel.matrix().grading(GradingMode::fine);
  auto gb = buchberger(field, sel.matrix().nvars(), gens);
  auto betti = minimal_resolution(field, gens, grading).table;
  QuotientRing<F> ring(gb, grading);
  KoszulComplex<F> complex(ring);
  KoszulHomology<F> homology(complex);
  return trivial_product_check(homology, betti).trivial;
}

}  // namespace

RestrictionReport verify_restriction(int rows, int cols, const FieldChoice& field, bool symmetry, int cap, int jobs) {
  RestrictionReport report;
  report.rows = rows;
  report.cols = cols;
  std::vector<EnumeratedSelection> work;
  for (auto& e : enumerate_selections(rows, cols, 2, symmetry, cap))
    if (!e.selection.empty()) work.push_back(std::move(e));

  std::vector<std::optional<RestrictionRecord>> records(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t k) {
    RestrictionRecord& r = records[k].emplace(RestrictionRecord{.selection = work[k].selection, .orbit_size = work[k].orbit_size});
    r.product_trivial = with_field<bool>(
        field, [&](const PrimeField& f) { return products_trivial(f, r.selection); },
        [&](const RationalField& f) { return products_trivial(f, r.selection); });
    r.restrictions = pair_restrictions(r.selection);
    r.all_block_or_empty = std::all_of(r.restrictions.begin(), r.restrictions.end(), [](const auto& p) {
      return p.second.kind != ShapeVerdict::Kind::not_block;
    });
    r.consistent = !(r.product_trivial && !r.all_block_or_empty);
    return true;
  });
  for (auto& slot : records) {
    RestrictionRecord& r = *slot;
    if (r.product_trivial) report.trivial_count += r.orbit_size;
    if (!r.all_block_or_empty) report.contrapositive_checked += r.orbit_size;
    if (!r.consistent) report.violations += r.orbit_size;
    report.records.push_back(std::move(r));
  }
  return report;
}

// ------------------------------------------------- three of four 3x3 minors

bool ThreeMinorReport::ok() const {
  return choices.size() == 4 && all_equal_tables &&
         std::all_of(choices.begin(), choices.end(), [](const ThreeMinorChoice& c) { return c.ok(); });
}

ThreeMinorReport reproduce_three_of_four_minors(const FieldChoice& field, const AnalysisOptions& options) {
  ThreeMinorReport report;
  GenericMatrix x(3, 4);
  auto maximal = all_minors(x, 3);
  for (std::size_t omit = 0; omit < maximal.size(); ++omit) {
    std::vector<Minor> pick;
    for (std::size_t k = 0; k < maximal.size(); ++k)
      if (k != omit) pick.push_back(maximal[k]);
    ThreeMinorChoice c{.analysis = analyze_ideal(field, MinorSelection(x, 3, pick), options)};
    c.totals = c.analysis.betti.totals();
    c.totals_ok = c.totals == std::vector<std::int64_t>{1, 3, 3, 1};
    c.nonlinear = !c.analysis.linear;
    c.golod_consistent = c.analysis.golod.verdict.kind == GolodVerdict::Kind::consistent_up_to;
    report.choices.push_back(std::move(c));
  }
  for (const auto& [ij, v] : report.choices.front().analysis.betti.entries())
    report.graded.push_back({ij.first, ij.second, v});
  report.all_equal_tables = std::all_of(report.choices.begin(), report.choices.end(), [&](const ThreeMinorChoice& c) {
    return c.analysis.betti == report.choices.front().analysis.betti;
  });
  return report;
}

// ---------------------------------------------------------- failure dumps

namespace {

template <class F>
nlohmann::json failure_artifacts(const F& field, const IdealAnalysis& a) {
  nlohmann::json j;
  const MinorSelection& sel = a.selection;
  const GenericMatrix& x = sel.matrix();
  auto names = x.names();
  auto gens = selection_polynomials(field, sel);
  auto grading = x.grading(GradingMode::fine);
  auto gb = buchberger(field, x.nvars(), gens);
  j["groebner_basis"] = nlohmann::json::array();
  for (const auto& g : gb.generators()) j["groebner_basis"].push_back(to_string(g, names));

  BettiTable betti = a.betti.empty() ? minimal_resolution(field, gens, grading).table : a.betti;
  j["betti"] = betti_json(betti);
  QuotientRing<F> ring(gb, grading);
  KoszulComplex<F> complex(ring);
  KoszulHomology<F> homology(complex);
  j["homology"] = nlohmann::json::array();
  for (const auto& [id, count] : betti.multigraded()) {
    if (id.first < 1) continue;
    const auto& block = homology.block(id.first, id.second);
    const auto& basis = complex.block(id.first, id.second);
    nlohmann::json h{{"i", id.first}, {"key", id.second.to_string()}, {"dimension", block.dimension()}};
    h["representatives"] = nlohmann::json::array();
    for (const auto& v : block.representatives)
      h["representatives"].push_back(chain_to_string(complex.to_chain(basis, v), names, x.cols()));
    j["homology"].push_back(std::move(h));
  }
  return j;
}

}  // namespace

std::string dump_failure(const FieldChoice& field, const IdealAnalysis& a, const std::string& reason,
                         const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const MinorSelection& sel = a.selection;
  auto everything = all_minors(sel.matrix(), sel.t());
  std::string name = "failure_" + std::to_string(sel.matrix().rows()) + "x" + std::to_string(sel.matrix().cols()) +
                     "_t" + std::to_string(sel.t());
  for (const Minor& m : sel.minors())
    name += "_" + std::to_string(std::find(everything.begin(), everything.end(), m) - everything.begin() + 1);

  nlohmann::json j;
  j["reason"] = reason;
  j["spec"] = nlohmann::json::parse(ideal_spec_to_json({sel, field}));
  j["conditions"] = conditions_json(a);
  j["golod"] = golod_json(a.golod);
  j["series"] = {{"actual", series_json(a.golod.actual)}, {"bound", series_json(a.golod.bound)}};
  try {
    j.update(with_field<nlohmann::json>(
        field, [&](const PrimeField& f) { return failure_artifacts(f, a); },
        [&](const RationalField& f) { return failure_artifacts(f, a); }));
  } catch (const std::exception& e) {
    j["artifact_error"] = e.what();
  }
  fs::path path = fs::path(dir) / (name + ".json");
  std::ofstream(path) << j.dump(2) << "\n";
  return path.string();
}

template IdealAnalysis analyze_ideal(const PrimeField&, const MinorSelection&, const AnalysisOptions&);
template IdealAnalysis analyze_ideal(const RationalField&, const MinorSelection&, const AnalysisOptions&);

}  // namespace gsd
