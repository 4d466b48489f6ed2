#pragma once

// Machine-readable forms of the reports. Every JSON document carries
// "schema": kSchemaVersion; the layouts are described in schema/*.json.

#include <ostream>
#include <vector>

#include <json.hpp>

#include "partrep/bound_lab.hpp"
#include "partrep/partition_builder.hpp"

namespace partrep::io {

inline constexpr int kSchemaVersion = 1;

nlohmann::json seeds_json(std::uint64_t k, std::uint64_t n0,
                          const std::vector<SeedAssignment>& seeds);
nlohmann::json lemma1_json(const Lemma1Report& r);
nlohmann::json lemma2_json(const Lemma2Report& r, std::size_t max_listed = 20);
/// Summary of a scan; rows are included when `with_rows` is set.
nlohmann::json scan_json(const ScanReport& r, bool with_rows);
nlohmann::json decomposition_json(const Decomposition& d);
nlohmann::json witness_set_json(const WitnessSet& ws);
nlohmann::json search_json(const SearchOutcome& s);

/// Header `n,R_A,R_comp,bound,ok` for bound scans and `n,R_A,R_comp,equal`
/// for equality scans, then one row per n.
void write_scan_csv(std::ostream& os, const ScanReport& r);

/// Rebuilds the rows of a scan document produced by scan_json(r, true).
std::vector<ScanRow> rows_from_json(const nlohmann::json& doc);

}  // namespace partrep::io
