#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "gsd/harness.hpp"
#include "gsd/report.hpp"

using namespace gsd;

namespace {

MinorSelection two_by(int ell, std::vector<Minor> minors) { return MinorSelection(GenericMatrix(2, ell), 2, std::move(minors)); }
Minor m2(int c1, int c2) { return {{1, 2}, {c1, c2}}; }
Minor minor33(int r1, int r2, int c1, int c2) { return {{r1, r2}, {c1, c2}}; }

CensusOptions census(int rows, int cols) {
  CensusOptions o;
  o.rows = rows;
  o.cols = cols;
  return o;
}

}  // namespace

TEST_CASE("2x3 census: the four block selections are exactly the positive ones") {
  auto report = verify_theorem(census(2, 3));
  REQUIRE(report.ok());
  CHECK(report.nonzero_selections == 7);
  CHECK(report.empty_selection_is_empty);
  CHECK(report.linear_count == 4);
  CHECK(report.block_count == 4);
  CHECK(report.trivial_count == 4);
  CHECK(report.all_three_count == 4);
  CHECK(report.consistent_count == 4);
  CHECK(report.not_golod_count == 3);
  for (const auto& r : report.records) {
    CAPTURE(r.analysis.selection.to_string());
    CHECK(r.equivalence == true);
    if (!r.analysis.product_trivial) {
      REQUIRE(r.analysis.witness);
      CHECK(r.analysis.witness->verified);
      CHECK(r.analysis.golod_measured_not_golod());
    }
  }
}

TEST_CASE("symmetry-reduced and full censuses agree") {
  auto reduced = verify_theorem(census(2, 3));
  auto o = census(2, 3);
  o.symmetry = false;
  auto full = verify_theorem(o);
  REQUIRE(full.ok());
  CHECK(full.records.size() == 7);
  CHECK(full.combinations == reduced.combinations);
  CHECK(full.nonzero_selections == reduced.nonzero_selections);
  for (const auto& r : full.records) CHECK(r.orbit_size == 1);
}

TEST_CASE("census reports do not depend on the number of jobs") {
  auto serial = census(2, 4);
  auto parallel = census(2, 4);
  parallel.jobs = 3;
  auto a = census_report(verify_theorem(serial), true).dump();
  auto b = census_report(verify_theorem(parallel), true).dump();
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
}

TEST_CASE("census refuses shapes beyond the cap") {
  CHECK_THROWS_AS(verify_theorem(census(4, 4)), CapExceeded);
  CHECK_THROWS_AS(verify_restriction(4, 4, FieldChoice{}), CapExceeded);
}

TEST_CASE("equivalence pattern") {
  IdealAnalysis a{.selection = two_by(3, {m2(1, 2)})};
  a.shape = ShapeVerdict{.kind = ShapeVerdict::Kind::block};
  a.linear = true;
  a.product_trivial = true;
  a.golod.verdict.kind = GolodVerdict::Kind::consistent_up_to;
  CHECK(equivalence_holds(a) == true);
  a.golod.verdict.kind = GolodVerdict::Kind::not_golod;
  CHECK(equivalence_holds(a) == false);

  IdealAnalysis b{.selection = two_by(3, {m2(1, 2), m2(1, 3)})};
  b.shape = ShapeVerdict{.kind = ShapeVerdict::Kind::not_block};
  b.product_trivial = false;
  b.golod.verdict.kind = GolodVerdict::Kind::not_golod;
  CHECK(equivalence_holds(b) == true);
  // A NotGolod verdict resting only on the fast-path hint does not count.
  b.golod.fast_path_unconfirmed = true;
  CHECK(equivalence_holds(b) == false);
  b.golod.fast_path_unconfirmed = false;
  b.linear = true;
  CHECK(equivalence_holds(b) == false);

  IdealAnalysis zero{.selection = two_by(3, {})};
  CHECK_FALSE(equivalence_holds(zero).has_value());
}

TEST_CASE("pair restrictions") {
  GenericMatrix x(3, 3);
  MinorSelection block(x, 2, {minor33(1, 2, 1, 2), minor33(1, 2, 1, 3), minor33(1, 2, 2, 3)});
  auto rs = pair_restrictions(block);
  REQUIRE(rs.size() == 6);
  CHECK(rs[0].first == "rows 1,2");
  CHECK(rs[0].second.to_string() == "Block 2x3 rows=[1,2] cols=[1,2,3]");
  CHECK(rs[1].first == "rows 1,3");
  CHECK(rs[1].second.kind == ShapeVerdict::Kind::empty);

  // Minors 1, 3, 5, 7 in lexicographic order: the rows 1,2 part is two of
  // the three minors of a 2x3 block.
  MinorSelection spread(x, 2, {minor33(1, 2, 1, 2), minor33(1, 2, 2, 3), minor33(1, 3, 1, 3), minor33(2, 3, 1, 2)});
  auto sr = pair_restrictions(spread);
  CHECK(sr[0].second.kind == ShapeVerdict::Kind::not_block);
  auto a = analyze_ideal(FieldChoice{}, spread, AnalysisOptions{});
  CHECK_FALSE(a.product_trivial);

  MinorSelection single(x, 2, {minor33(2, 3, 1, 3)});
  for (const auto& [label, v] : pair_restrictions(single)) CHECK(v.kind != ShapeVerdict::Kind::not_block);
}

TEST_CASE("restriction census over 2x3 and 3x3") {
  auto small = verify_restriction(2, 3, FieldChoice{});
  CHECK(small.ok());
  CHECK(small.trivial_count == 4);
  // Non-block 2x3 selections are their own rows 1,2 restriction.
  CHECK(small.contrapositive_checked == 3);

  auto r = verify_restriction(3, 3, FieldChoice{}, true, 12, 2);
  CHECK(r.ok());
  CHECK(r.trivial_count == 15);
  for (const auto& rec : r.records)
    if (rec.product_trivial) CHECK(rec.all_block_or_empty);
}

TEST_CASE("three of the four maximal minors of a 3x4 matrix") {
  AnalysisOptions opts;
  opts.cross_route = false;
  auto r = reproduce_three_of_four_minors(FieldChoice{}, opts);
  REQUIRE(r.choices.size() == 4);
  CHECK(r.ok());
  CHECK(r.all_equal_tables);
  for (const auto& c : r.choices) {
    CHECK(c.totals == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK_FALSE(c.analysis.shape);
    CHECK(c.analysis.notices.size() == 1);
    CHECK(c.analysis.golod.verdict.to_string() == "ConsistentUpTo(8)");
  }
  // Independent oracle for the degrees: the Hilbert numerator of the initial
  // ideal is 1 - 3t^3 + 3t^5 - t^6, and a Betti table with totals 1 3 3 1 can
  // only produce it with these shifts.
  PrimeField f;
  const auto& sel = r.choices.front().analysis.selection;
  auto gb = buchberger(f, 12, selection_polynomials(f, sel));
  CHECK(hilbert_numerator(gb.leading_monomials(), 12) == std::vector<std::int64_t>{1, 0, 0, -3, 0, 3, -1});
  std::vector<std::array<std::int64_t, 3>> want = {{0, 0, 1}, {1, 3, 3}, {2, 5, 3}, {3, 6, 1}};
  CHECK(r.graded == want);
}

TEST_CASE("t = 3 census only records data") {
  auto o = census(3, 4);
  o.t = 3;
  o.analysis.cross_route = false;
  o.symmetry_spot_checks = 1;
  auto r = verify_theorem(o);
  CHECK(r.ok());
  CHECK(r.nonzero_selections == 15);
  CHECK(r.equivalence_failures == 0);
  for (const auto& rec : r.records) {
    CHECK_FALSE(rec.equivalence.has_value());
    CHECK_FALSE(rec.analysis.shape);
  }
  CHECK(r.summary().find("no equivalence is asserted") != std::string::npos);
}

TEST_CASE("single-ideal report layout") {
  FieldChoice fp;
  AnalysisOptions opts;
  opts.seed = 5;
  auto a = analyze_ideal(fp, two_by(3, {m2(1, 2), m2(1, 3)}), opts);
  auto brief = analysis_report(a, fp, opts, false);
  CHECK(brief["meta"]["version"] == kVersion);
  CHECK(brief["meta"]["field"] == "fp:32003");
  CHECK(brief["meta"]["D"] == 8);
  CHECK(brief["meta"]["seed"] == 5);
  CHECK(brief["conditions"]["shape"] == "NotBlock");
  CHECK(brief["conditions"]["linear"] == false);
  CHECK(brief["conditions"]["product"] == "Nontrivial");
  CHECK(brief["conditions"]["golod"] == "NotGolod(gap 1 at z^3 t^4)");
  CHECK(brief["betti"] == nlohmann::json::parse("[[0,0,1],[1,2,2],[2,4,1]]"));
  CHECK(brief["witness"]["verified"] == true);
  CHECK_FALSE(brief["witness"]["a"].contains("cycle"));
  CHECK(brief["series"]["bound"]["c"][3][4] == 1 + brief["series"]["actual"]["c"][3][4].get<int>());

  auto full = analysis_report(a, fp, opts, true);
  CHECK(full["witness"]["a"]["cycle"].is_string());
  CHECK(full["witness"]["product"].is_string());
  CHECK(full.dump() == analysis_report(analyze_ideal(fp, two_by(3, {m2(1, 2), m2(1, 3)}), opts), fp, opts, true).dump());
}

TEST_CASE("failure dumps carry the full artifacts") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gsd_dump_test";
  fs::remove_all(dir);
  auto sel = two_by(4, {m2(1, 2), m2(3, 4)});
  auto a = analyze_ideal(FieldChoice{}, sel, AnalysisOptions{});
  std::string path = dump_failure(FieldChoice{}, a, "test dump", dir.string());
  CHECK(fs::path(path).filename() == "failure_2x4_t2_1_6.json");
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["reason"] == "test dump");
  CHECK(j["spec"]["minors"].size() == 2);
  CHECK(j["groebner_basis"].size() == 2);
  CHECK(j["betti"] == nlohmann::json::parse("[[0,0,1],[1,2,2],[2,4,1]]"));
  std::size_t reps = 0;
  for (const auto& h : j["homology"]) reps += h["representatives"].size();
  CHECK(reps == 3);
  CHECK(j["series"]["actual"]["rows"].get<int>() >= 3);
  fs::remove_all(dir);
}
