#include "gsd/report.hpp"

namespace gsd {

using nlohmann::json;

json meta_json(const FieldChoice& field, int D, std::uint64_t seed) {
  return {{"version", kVersion}, {"field", field.to_string()}, {"D", D}, {"seed", seed}};
}

json selection_json(const MinorSelection& sel) {
  json minors = json::array();
  for (const Minor& m : sel.minors()) minors.push_back({{"rows", m.rows}, {"cols", m.cols}});
  return {{"matrix", {{"rows", sel.matrix().rows()}, {"cols", sel.matrix().cols()}}}, {"t", sel.t()}, {"minors", minors}};
}

json betti_json(const BettiTable& bt) {
  json out = json::array();
  for (const auto& [ij, v] : bt.entries()) out.push_back({ij.first, ij.second, v});
  return out;
}

json series_json(const BigradedSeries& s) {
  json rows = json::array();
  for (int i = 0; i <= s.computed_rows; ++i) {
    json row = json::array();
    for (int j = 0; j <= s.D; ++j) row.push_back(s.get(i, j));
    rows.push_back(std::move(row));
  }
  return {{"provenance", to_string(s.provenance)}, {"rows", s.computed_rows}, {"c", rows}};
}

json golod_json(const GolodReport& g) {
  json j{{"verdict", g.verdict.to_string()},
         {"D", g.verdict.D},
         {"fast_path", to_string(g.fast_path)},
         {"fast_path_unconfirmed", g.fast_path_unconfirmed},
         {"reduced_by", g.reduced_by},
         {"seed", g.seed}};
  if (g.verdict.kind == GolodVerdict::Kind::not_golod && !g.fast_path_unconfirmed)
    j["first_gap"] = {{"i", g.verdict.gap_i}, {"j", g.verdict.gap_j}, {"size", g.verdict.gap_size}};
  else
    j["first_gap"] = nullptr;
  return j;
}

json witness_json(const WitnessRecord& w, bool full_witness) {
  json j{{"a", {{"i", w.i_a}, {"j", w.j_a}, {"key", w.key_a}}},
         {"b", {{"i", w.i_b}, {"j", w.j_b}, {"key", w.key_b}}},
         {"verified", w.verified}};
  if (full_witness) {
    j["a"]["cycle"] = w.factor_a;
    j["b"]["cycle"] = w.factor_b;
    j["product"] = w.product;
  }
  return j;
}

json conditions_json(const IdealAnalysis& a) {
  return {{"shape", a.shape ? a.shape->to_string() : "skipped"},
          {"linear", a.linear},
          {"product", a.product_trivial ? "Trivial" : "Nontrivial"},
          {"golod", a.golod.verdict.to_string()}};
}

namespace {

json checks_json(const IdealAnalysis& a) {
  json j{{"hilbert_certificate", a.hilbert_ok}, {"pairs_checked", a.pairs_checked}, {"disjoint_groups", a.disjoint_groups}};
  j["cross_route"] = a.cross_route_ok ? json(*a.cross_route_ok) : json(nullptr);
  j["kunneth"] = a.kunneth_ok ? json(*a.kunneth_ok) : json(nullptr);
  return j;
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json analysis_report(const IdealAnalysis& a, const FieldChoice& field, const AnalysisOptions& options,
                     bool full_witness) {
  json j;
  j["meta"] = meta_json(field, options.D, options.seed);
  j["selection"] = selection_json(a.selection);
  j["conditions"] = conditions_json(a);
  j["betti"] = betti_json(a.betti);
  j["checks"] = checks_json(a);
  j["golod"] = golod_json(a.golod);
  j["series"] = {{"actual", series_json(a.golod.actual)}, {"bound", series_json(a.golod.bound)}};
  if (a.witness) j["witness"] = witness_json(*a.witness, full_witness);
  j["equivalence"] = optional_bool(equivalence_holds(a));
  j["notices"] = a.notices;
  return j;
}

json census_report(const CensusReport& r, bool full_witness) {
  const CensusOptions& o = r.options;
  json j;
  j["meta"] = meta_json(o.field, o.analysis.D, o.analysis.seed);
  j["census"] = {{"rows", o.rows},
                 {"cols", o.cols},
                 {"t", o.t},
                 {"symmetry", o.symmetry},
                 {"artinian_reduction", o.analysis.artinian_reduction},
                 {"evaluated", r.records.size()},
                 {"nonzero_selections", r.nonzero_selections},
                 {"empty_selection_is_empty", r.empty_selection_is_empty}};
  j["summary"] = {{"linear", r.linear_count},
                  {"block", r.block_count},
                  {"trivial_product", r.trivial_count},
                  {"all_three", r.all_three_count},
                  {"consistent_up_to", r.consistent_count},
                  {"not_golod", r.not_golod_count},
                  {"equivalence_failures", r.equivalence_failures},
                  {"combinations", r.combinations},
                  {"halted", r.halted},
                  {"ok", r.ok()}};
  json records = json::array();
  for (const auto& rec : r.records) {
    const IdealAnalysis& a = rec.analysis;
    json x{{"selection", selection_json(a.selection)},
           {"orbit_size", rec.orbit_size},
           {"conditions", conditions_json(a)},
           {"betti", betti_json(a.betti)},
           {"checks", checks_json(a)},
           {"golod", golod_json(a.golod)},
           {"equivalence", optional_bool(rec.equivalence)}};
    if (a.witness) x["witness"] = witness_json(*a.witness, full_witness);
    if (!rec.failure.empty()) x["failure"] = rec.failure;
    records.push_back(std::move(x));
  }
  j["records"] = std::move(records);
  json spots = json::array();
  for (const auto& s : r.spot_checks)
    spots.push_back({{"record", s.record},
                     {"member", selection_json(s.member)},
                     {"canonical_matches", s.canonical_matches},
                     {"verdicts_match", s.verdicts_match}});
  j["symmetry_spot_checks"] = std::move(spots);
  return j;
}

json restriction_report(const RestrictionReport& r, const FieldChoice& field, int D, std::uint64_t seed) {
  json j;
  j["meta"] = meta_json(field, D, seed);
  j["census"] = {{"rows", r.rows}, {"cols", r.cols}};
  j["summary"] = {{"trivial_product", r.trivial_count},
                  {"contrapositive_checked", r.contrapositive_checked},
                  {"violations", r.violations},
                  {"ok", r.ok()}};
  json records = json::array();
  for (const auto& rec : r.records) {
    json restrictions = json::object();
    for (const auto& [label, v] : rec.restrictions) restrictions[label] = v.to_string();
    records.push_back({{"selection", selection_json(rec.selection)},
                       {"orbit_size", rec.orbit_size},
                       {"product", rec.product_trivial ? "Trivial" : "Nontrivial"},
                       {"restrictions", restrictions},
                       {"consistent", rec.consistent}});
  }
  j["records"] = std::move(records);
  return j;
}

json three_minor_report(const ThreeMinorReport& r, const FieldChoice& field, const AnalysisOptions& options,
                        bool full_witness) {
  json j;
  j["meta"] = meta_json(field, options.D, options.seed);
  json choices = json::array();
  for (const auto& c : r.choices) {
    json x = analysis_report(c.analysis, field, options, full_witness);
    x.erase("meta");
    x["totals"] = c.totals;
    x["ok"] = c.ok();
    choices.push_back(std::move(x));
  }
  j["choices"] = std::move(choices);
  json graded = json::array();
  for (const auto& e : r.graded) graded.push_back(e);
  j["graded_betti"] = std::move(graded);
  j["all_equal_tables"] = r.all_equal_tables;
  j["ok"] = r.ok();
  return j;
}

}  // namespace gsd
