#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partrep/bound_lab.hpp"
#include "partrep/core_repfn.hpp"
#include "partrep/partition_builder.hpp"

namespace py = pybind11;
using namespace partrep;

PYBIND11_MODULE(_partrep, m) {
  m.doc() = "Partitions of N with equal weighted representation functions";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<QueryBeyondPrefix>(m, "QueryBeyondPrefix", base.ptr());
  py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", base.ptr());
  py::register_exception<InvalidSeed>(m, "InvalidSeed", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<NoWitness>(m, "NoWitness", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  py::enum_<Side>(m, "Side")
      .value("SET", Side::kSet)
      .value("COMPLEMENT", Side::kComplement);
  py::enum_<ClassicVariant>(m, "ClassicVariant")
      .value("R1", ClassicVariant::kR1)
      .value("R2", ClassicVariant::kR2)
      .value("R3", ClassicVariant::kR3);
  py::enum_<WitnessCase>(m, "WitnessCase")
      .value("CASE1", WitnessCase::kCase1)
      .value("CASE2", WitnessCase::kCase2);
  py::enum_<SearchStatus>(m, "SearchStatus")
      .value("UNSAT", SearchStatus::kUnsat)
      .value("SAT", SearchStatus::kSat)
      .value("INCONCLUSIVE", SearchStatus::kInconclusive);

  py::class_<WeightPair>(m, "WeightPair")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("k1"), py::arg("k2"))
      .def_readonly("k1", &WeightPair::k1)
      .def_readonly("k2", &WeightPair::k2)
      .def("__repr__", [](const WeightPair& w) {
        return "WeightPair(" + std::to_string(w.k1) + ", " + std::to_string(w.k2) + ")";
      });

  py::class_<ChiTable>(m, "ChiTable")
      .def(py::init<std::uint64_t, std::uint64_t, std::vector<std::uint8_t>>(), py::arg("k"),
           py::arg("n0"), py::arg("bits"))
      .def_static("from_string", &ChiTable::from_string, py::arg("k"), py::arg("n0"),
                  py::arg("bits"))
      .def_property_readonly("k", &ChiTable::k)
      .def_property_readonly("n0", &ChiTable::n0)
      .def_property_readonly("limit", &ChiTable::limit)
      .def("at", &ChiTable::at)
      .def("contains", &ChiTable::contains)
      .def("prefix_count", &ChiTable::prefix_count)
      .def("__str__", &ChiTable::to_string)
      .def("__len__", [](const ChiTable& c) { return c.limit() + 1; });

  py::class_<RepTable>(m, "RepTable")
      .def_readonly("weights", &RepTable::weights)
      .def_readonly("side", &RepTable::side)
      .def_readonly("values", &RepTable::values);

  m.def("rep_count_weighted", &rep_count_weighted, py::arg("chi"), py::arg("side"), py::arg("w"),
        py::arg("n"));
  m.def("rep_table", &rep_table, py::arg("chi"), py::arg("side"), py::arg("w"),
        py::arg("up_to"), py::arg("workers") = 1);
  m.def("classic_rep", &classic_rep, py::arg("chi"), py::arg("side"), py::arg("variant"),
        py::arg("n"));
  m.def("total_identity_check", &total_identity_check, py::arg("chi"), py::arg("w"),
        py::arg("n"));

  py::class_<SeedAssignment>(m, "SeedAssignment")
      .def_static("from_string", &SeedAssignment::from_string)
      .def_readonly("k", &SeedAssignment::k)
      .def_readonly("n0", &SeedAssignment::n0)
      .def_readonly("values", &SeedAssignment::values)
      .def("complement", &SeedAssignment::complement)
      .def("satisfies_initial_window", &SeedAssignment::satisfies_initial_window)
      .def("__str__", &SeedAssignment::to_string)
      .def("__eq__", [](const SeedAssignment& a, const SeedAssignment& b) { return a == b; });

  m.def("eq1_lhs", &eq1_lhs, py::arg("k"), py::arg("n"));
  m.def("enumerate_valid_seeds", &enumerate_valid_seeds, py::arg("k"), py::arg("n0"));
  m.def(
      "extend_chi",
      [](const SeedAssignment& seed, std::uint64_t limit) { return extend_chi(seed, limit); },
      py::arg("seed"), py::arg("limit"));

  py::class_<Lemma1Report::Counterexample>(m, "Lemma1Counterexample")
      .def_readonly("n", &Lemma1Report::Counterexample::n)
      .def_readonly("lhs", &Lemma1Report::Counterexample::lhs)
      .def_readonly("rhs", &Lemma1Report::Counterexample::rhs);
  py::class_<Lemma1Report>(m, "Lemma1Report")
      .def_property_readonly("passed", &Lemma1Report::passed)
      .def_readonly("initial_window", &Lemma1Report::initial_window)
      .def_readonly("recursion", &Lemma1Report::recursion)
      .def_readonly("checked_up_to", &Lemma1Report::checked_up_to);
  m.def("verify_lemma1", &verify_lemma1, py::arg("chi"), py::arg("up_to"));

  py::class_<ScanRow>(m, "ScanRow")
      .def_readonly("n", &ScanRow::n)
      .def_readonly("r_set", &ScanRow::r_set)
      .def_readonly("r_complement", &ScanRow::r_complement)
      .def_readonly("bound", &ScanRow::bound)
      .def_readonly("ok", &ScanRow::ok);
  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("rows", &ScanReport::rows)
      .def_readonly("violations", &ScanReport::violations)
      .def_readonly("min_log_ratio", &ScanReport::min_log_ratio)
      .def_property_readonly("passed", &ScanReport::passed);
  m.def("verify_equality", &verify_equality, py::arg("chi"), py::arg("up_to"),
        py::arg("workers") = 1);

  py::class_<Lemma2Violation>(m, "Lemma2Violation")
      .def_readonly("n", &Lemma2Violation::n)
      .def_readonly("i", &Lemma2Violation::i)
      .def_readonly("j", &Lemma2Violation::j);
  py::class_<Lemma2Report>(m, "Lemma2Report")
      .def_readonly("i_max", &Lemma2Report::i_max)
      .def_readonly("threshold", &Lemma2Report::threshold)
      .def_readonly("checks", &Lemma2Report::checks)
      .def_readonly("violations", &Lemma2Report::violations)
      .def_readonly("violation_count", &Lemma2Report::violation_count)
      .def_property_readonly("passed", &Lemma2Report::passed);
  m.def("verify_lemma2", &verify_lemma2, py::arg("chi"), py::arg("i_max"));

  m.def("flog", &flog, py::arg("k"), py::arg("n"), py::arg("T"));
  m.def("compute_T", &compute_T, py::arg("k"), py::arg("n0"));
  m.def("guaranteed_bound", &guaranteed_bound, py::arg("k"), py::arg("n0"), py::arg("n"));

  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("n", &Decomposition::n)
      .def_readonly("j", &Decomposition::j)
      .def_readonly("i", &Decomposition::i)
      .def_readonly("t", &Decomposition::t)
      .def_readonly("r", &Decomposition::r)
      .def_readonly("T", &Decomposition::T)
      .def_readonly("case_tag", &Decomposition::case_tag)
      .def_readonly("s", &Decomposition::s);
  m.def("decompose", &decompose, py::arg("k"), py::arg("n0"), py::arg("n"), py::arg("j"));

  py::class_<WitnessRecord>(m, "WitnessRecord")
      .def_readonly("decomposition", &WitnessRecord::decomposition)
      .def_readonly("n", &WitnessRecord::n)
      .def_readonly("a1", &WitnessRecord::a1)
      .def_readonly("a2", &WitnessRecord::a2)
      .def_readonly("side", &WitnessRecord::side);
  py::class_<WitnessOutcome>(m, "WitnessOutcome")
      .def_readonly("decomposition", &WitnessOutcome::decomposition)
      .def_readonly("record", &WitnessOutcome::record)
      .def_readonly("below_threshold", &WitnessOutcome::below_threshold);
  m.def(
      "extract_witness",
      [](const ChiTable& chi, std::uint64_t n, unsigned j) { return extract_witness(chi, n, j); },
      py::arg("chi"), py::arg("n"), py::arg("j"));
  py::class_<WitnessSet>(m, "WitnessSet")
      .def_readonly("n", &WitnessSet::n)
      .def_readonly("bound", &WitnessSet::bound)
      .def_readonly("outcomes", &WitnessSet::outcomes);
  m.def("witness_set", &witness_set, py::arg("chi"), py::arg("n"));

  m.def("bound_scan", &bound_scan, py::arg("chi"), py::arg("lo"), py::arg("hi"),
        py::arg("stride") = 1, py::arg("workers") = 1);

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("status", &SearchOutcome::status)
      .def_readonly("unsat_depth", &SearchOutcome::unsat_depth)
      .def_readonly("max_depth", &SearchOutcome::max_depth)
      .def_readonly("nodes", &SearchOutcome::nodes)
      .def_readonly("certificate", &SearchOutcome::certificate)
      .def_readonly("certified_up_to", &SearchOutcome::certified_up_to);
  m.def(
      "nonexistence_search",
      [](const WeightPair& w, std::uint64_t n0, std::uint64_t cap, std::uint64_t node_limit) {
        SearchOptions options;
        options.node_limit = node_limit;
        return nonexistence_search(w, n0, cap, options);
      },
      py::arg("w"), py::arg("n0"), py::arg("cap"), py::arg("node_limit") = 50'000'000);
}
