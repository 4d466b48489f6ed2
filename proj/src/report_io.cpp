#include "partrep/report_io.hpp"

namespace partrep::io {

using nlohmann::json;

namespace {

json optional_u64(const std::optional<std::uint64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string bits_string(const std::vector<std::uint8_t>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace

json seeds_json(std::uint64_t k, std::uint64_t n0, const std::vector<SeedAssignment>& seeds) {
  json list = json::array();
  for (const auto& s : seeds) list.push_back(s.to_string());
  return {{"schema", kSchemaVersion}, {"command", "seeds"}, {"k", k},
          {"n0", n0},                 {"count", seeds.size()}, {"seeds", list}};
}

json lemma1_json(const Lemma1Report& r) {
  auto counterexample = [](const std::optional<Lemma1Report::Counterexample>& c) {
    return c ? json{{"n", c->n}, {"lhs", c->lhs}, {"rhs", c->rhs}} : json(nullptr);
  };
  return {{"passed", r.passed()},
          {"checked_up_to", r.checked_up_to},
          {"initial_window", counterexample(r.initial_window)},
          {"recursion", counterexample(r.recursion)}};
}

json lemma2_json(const Lemma2Report& r, std::size_t max_listed) {
  json listed = json::array();
  for (std::size_t idx = 0; idx < r.violations.size() && idx < max_listed; ++idx) {
    const auto& v = r.violations[idx];
    listed.push_back({{"n", v.n}, {"i", v.i}, {"j", v.j}});
  }
  return {{"passed", r.passed()},
          {"i_max", r.i_max},
          {"threshold", r.threshold},
          {"n_hi", r.n_hi},
          {"checks", r.checks},
          {"violation_count", r.violation_count},
          {"violations", listed},
          {"below_threshold",
           {{"holds", r.below_threshold_holds}, {"fails", r.below_threshold_fails}}}};
}

json scan_json(const ScanReport& r, bool with_rows) {
  json out = {{"schema", kSchemaVersion},
              {"kind", r.kind == ScanKind::kBound ? "bound" : "equality"},
              {"k", r.k},
              {"n0", r.n0},
              {"lo", r.lo},
              {"hi", r.hi},
              {"rows_checked", r.rows.size()},
              {"violation_count", r.violations.size()},
              {"first_violation",
               r.violations.empty() ? json(nullptr) : json(r.violations.front())},
              {"passed", r.passed()}};
  out["min_log_ratio"] = r.min_log_ratio ? json(*r.min_log_ratio) : json(nullptr);
  if (with_rows) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"n", row.n},
                      {"R_A", row.r_set},
                      {"R_comp", row.r_complement},
                      {"bound", optional_u64(row.bound)},
                      {"ok", row.ok}});
    }
    out["rows"] = std::move(rows);
  }
  return out;
}

json decomposition_json(const Decomposition& d) {
  return {{"n", d.n},   {"j", d.j},         {"i", d.i},
          {"t", d.t},   {"r", d.r},         {"T", d.T},
          {"flog", d.log}, {"case", std::string(to_string(d.case_tag))},
          {"s", optional_u64(d.s)}};
}

json witness_set_json(const WitnessSet& ws) {
  json records = json::array();
  for (const auto& o : ws.outcomes) {
    json rec = decomposition_json(o.decomposition);
    if (o.record) {
      rec["status"] = "found";
      rec["a1"] = o.record->a1;
      rec["a2"] = o.record->a2;
      rec["side"] = std::string(to_string(o.record->side));
    } else {
      rec["status"] = "below_threshold";
      rec["reason"] = o.below_threshold.value_or("");
    }
    records.push_back(std::move(rec));
  }
  return {{"schema", kSchemaVersion},
          {"command", "witness"},
          {"n", ws.n},
          {"bound", ws.bound},
          {"found", ws.found_count()},
          {"records", records}};
}

json search_json(const SearchOutcome& s) {
  json out = {{"schema", kSchemaVersion},
              {"command", "search"},
              {"k1", s.weights.k1},
              {"k2", s.weights.k2},
              {"n0", s.n0},
              {"cap", s.depth_cap},
              {"status", std::string(to_string(s.status))},
              {"unsat_depth", optional_u64(s.unsat_depth)},
              {"max_depth", s.max_depth},
              {"nodes", s.nodes},
              {"wall_time_s", s.wall_time.count()}};
  if (s.status == SearchStatus::kSat) {
    out["certificate"] = bits_string(s.certificate);
    out["certified_up_to"] = optional_u64(s.certified_up_to);
  } else {
    out["certificate"] = nullptr;
    out["certified_up_to"] = nullptr;
  }
  return out;
}

void write_scan_csv(std::ostream& os, const ScanReport& r) {
  if (r.kind == ScanKind::kBound) {
    os << "n,R_A,R_comp,bound,ok\n";
    for (const auto& row : r.rows) {
      os << row.n << ',' << row.r_set << ',' << row.r_complement << ','
         << row.bound.value_or(0) << ',' << (row.ok ? 1 : 0) << '\n';
    }
  } else {
    os << "n,R_A,R_comp,equal\n";
    for (const auto& row : r.rows) {
      os << row.n << ',' << row.r_set << ',' << row.r_complement << ',' << (row.ok ? 1 : 0)
         << '\n';
    }
  }
}

std::vector<ScanRow> rows_from_json(const json& doc) {
  std::vector<ScanRow> rows;
  for (const auto& j : doc.at("rows")) {
    ScanRow row;
    row.n = j.at("n").get<std::uint64_t>();
    row.r_set = j.at("R_A").get<std::uint64_t>();
    row.r_complement = j.at("R_comp").get<std::uint64_t>();
    if (!j.at("bound").is_null()) row.bound = j.at("bound").get<std::uint64_t>();
    row.ok = j.at("ok").get<bool>();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace partrep::io
