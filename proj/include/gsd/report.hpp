#pragma once

#include <cstdint>
#include <string>

#include "gsd/harness.hpp"
#include "json.hpp"

namespace gsd {

/// Structured reports. Keys are sorted and no wall-clock data is written, so
/// identical inputs give byte-identical documents.

nlohmann::json meta_json(const FieldChoice& field, int D, std::uint64_t seed);
nlohmann::json selection_json(const MinorSelection& sel);
nlohmann::json betti_json(const BettiTable& bt);
/// {"rows": computed rows, "c": [[c_{i,0}, ..., c_{i,D}], ...]}
nlohmann::json series_json(const BigradedSeries& s);
nlohmann::json golod_json(const GolodReport& g);
/// Witness classes and their verification; the chain texts only with full_witness.
nlohmann::json witness_json(const WitnessRecord& w, bool full_witness);
/// {shape, linear, product, golod} condition verdicts.
nlohmann::json conditions_json(const IdealAnalysis& a);

/// Full single-ideal report: meta, conditions, betti, witness?, series.
nlohmann::json analysis_report(const IdealAnalysis& a, const FieldChoice& field, const AnalysisOptions& options,
                               bool full_witness);
/// One record per canonical selection plus the summary counts.
nlohmann::json census_report(const CensusReport& r, bool full_witness);
nlohmann::json restriction_report(const RestrictionReport& r, const FieldChoice& field, int D, std::uint64_t seed);
nlohmann::json three_minor_report(const ThreeMinorReport& r, const FieldChoice& field, const AnalysisOptions& options,
                                  bool full_witness);

}  // namespace gsd
