#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsd/betti.hpp"
#include "gsd/golod.hpp"
#include "gsd/subdet.hpp"

namespace gsd {

inline constexpr const char* kVersion = "1.0.0";

struct AnalysisOptions {
  int D = 8;
  std::uint64_t seed = 0;
  bool artinian_reduction = true;
  /// Recompute the Betti table from Koszul homology and compare.
  bool cross_route = true;
  /// Check the Kunneth splitting when the selection has disjoint groups.
  bool kunneth = true;
};

/// A nonzero product of Koszul homology classes, kept in text form so it can
/// be re-verified without the objects that produced it.
struct WitnessRecord {
  int i_a = 0, j_a = 0;
  int i_b = 0, j_b = 0;
  std::string key_a, key_b;
  std::string factor_a, factor_b, product;
  bool verified = false;
};

/// Every per-ideal verdict the pipeline computes. Field independent.
struct IdealAnalysis {
  MinorSelection selection;
  std::string field;
  /// Absent when t != 2: the block criterion only applies to 2x2 minors.
  std::optional<ShapeVerdict> shape{};
  std::vector<std::string> notices{};
  BettiTable betti{};
  bool hilbert_ok = false;
  bool linear = false;
  bool product_trivial = true;
  std::size_t pairs_checked = 0;
  std::optional<WitnessRecord> witness{};
  std::optional<bool> cross_route_ok{};
  std::size_t disjoint_groups = 0;
  std::optional<bool> kunneth_ok{};
  GolodReport golod{};
  double seconds = 0;

  /// NotGolod backed by a measured gap (not only by a fast-path hint).
  bool golod_measured_not_golod() const;
};

/// Runs the whole pipeline on one selection: resolution, Hilbert
/// certificate, linearity, shape, Koszul products (with witness), and the
/// Poincare series comparison. The product verdict is passed to the series
/// comparison only as a fast-path hint; the gap is still measured.
template <class F>
IdealAnalysis analyze_ideal(const F& field, const MinorSelection& sel, const AnalysisOptions& options);

/// Dispatches on the field choice.
IdealAnalysis analyze_ideal(const FieldChoice& field, const MinorSelection& sel, const AnalysisOptions& options);

/// For t = 2: linear == block == trivial product, a block has ConsistentUpTo
/// and a non-block has a measured NotGolod gap. nullopt for I = 0 and t != 2.
std::optional<bool> equivalence_holds(const IdealAnalysis& a);

/// "yes"/"no" condition labels, e.g. "linear=yes block=yes trivial=yes golod=ConsistentUpTo".
std::string verdict_combination(const IdealAnalysis& a);

struct CensusOptions {
  int rows = 2;
  int cols = 3;
  int t = 2;
  bool symmetry = true;
  int cap = 12;
  int jobs = 1;
  FieldChoice field;
  AnalysisOptions analysis;
  /// Directory for failure artifacts; empty disables dumping.
  std::string dump_dir;
  bool halt_on_failure = true;
  /// Number of records re-checked through a random non-canonical orbit member.
  int symmetry_spot_checks = 3;
};

struct CensusRecord {
  IdealAnalysis analysis;
  std::uint64_t orbit_size = 1;
  std::optional<bool> equivalence{};
  /// Non-empty when the pipeline threw or the equivalence failed.
  std::string failure{};
  bool internal_error = false;
};

struct SpotCheck {
  std::size_t record = 0;
  MinorSelection member;
  bool canonical_matches = false;
  bool verdicts_match = false;
};

struct CensusReport {
  CensusOptions options;
  std::vector<CensusRecord> records;  // census order, I = 0 excluded
  std::uint64_t nonzero_selections = 0;
  bool empty_selection_is_empty = false;
  /// Weighted by orbit size.
  std::uint64_t linear_count = 0, block_count = 0, trivial_count = 0, all_three_count = 0;
  std::uint64_t consistent_count = 0, not_golod_count = 0;
  std::uint64_t equivalence_failures = 0;
  std::map<std::string, std::uint64_t> combinations;
  std::vector<SpotCheck> spot_checks;
  bool halted = false;
  std::vector<std::string> dumps;

  bool ok() const;
  bool internal_error() const;
  /// Human-readable table of counts per verdict combination.
  std::string summary() const;
};

/// Census over every nonzero selection of t x t minors (one representative
/// per orbit when options.symmetry). Asserts the equivalence pattern for t = 2
/// and only records data for other t. Throws CapExceeded.
CensusReport verify_theorem(const CensusOptions& options);

struct RestrictionRecord {
  MinorSelection selection;
  std::uint64_t orbit_size = 1;
  bool product_trivial = true;
  /// "rows 1,2: Block 2x2 ..." style labels for every row and column pair.
  std::vector<std::pair<std::string, ShapeVerdict>> restrictions{};
  bool all_block_or_empty = true;
  bool consistent = true;
};

struct RestrictionReport {
  int rows = 0, cols = 0;
  std::vector<RestrictionRecord> records;
  std::uint64_t trivial_count = 0;
  /// Selections with a non-block restriction; each must have a nontrivial product.
  std::uint64_t contrapositive_checked = 0;
  std::uint64_t violations = 0;
  bool ok() const { return violations == 0; }
};

/// Every trivial-product selection restricts to Block or Empty on each pair
/// of rows and each pair of columns. Throws CapExceeded.
RestrictionReport verify_restriction(int rows, int cols, const FieldChoice& field, bool symmetry = true, int cap = 12,
                                     int jobs = 1);

/// Pair-restriction verdicts of one selection (rows pairs, then column pairs).
std::vector<std::pair<std::string, ShapeVerdict>> pair_restrictions(const MinorSelection& sel);

struct ThreeMinorChoice {
  IdealAnalysis analysis;
  std::vector<std::int64_t> totals{};
  bool totals_ok = false;
  bool nonlinear = false;
  bool golod_consistent = false;
  bool ok() const { return totals_ok && nonlinear && golod_consistent && analysis.product_trivial && analysis.hilbert_ok; }
};

struct ThreeMinorReport {
  std::vector<ThreeMinorChoice> choices;  // one per omitted maximal minor
  /// Graded Betti entries (i, j, value) of the first choice.
  std::vector<std::array<std::int64_t, 3>> graded;
  bool all_equal_tables = false;
  bool ok() const;
};

/// Three of the four 3x3 minors of the generic 3x4 matrix, all four choices.
ThreeMinorReport reproduce_three_of_four_minors(const FieldChoice& field, const AnalysisOptions& options);

/// Writes the ideal spec, Groebner basis, Betti table, Koszul homology bases
/// on the Betti support, and both series to dir/<name>.json. Returns the path.
std::string dump_failure(const FieldChoice& field, const IdealAnalysis& a, const std::string& reason,
                         const std::string& dir);

}  // namespace gsd
