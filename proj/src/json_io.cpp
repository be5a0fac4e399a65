#include "numsemi/json_io.hpp"

#include <sstream>

namespace numsemi {

Json to_json(const NumericalSemigroup& s) {
  return Json{{"gens", s.minimal_generators()},
              {"frobenius", s.frobenius()},
              {"conductor", s.conductor()},
              {"genus", s.genus()},
              {"gaps", s.gaps()}};
}

Json to_json(const Semimodule& m) {
  return Json{{"gens_of_S", m.semigroup().minimal_generators()},
              {"gaps", m.gap_list()},
              {"codim", m.codim()},
              {"min_gens", m.minimal_generators()}};
}

Json to_json(const LevelCensus& census, bool include_members) {
  Json out{{"gens", census.semigroup.minimal_generators()},
           {"r", census.r},
           {"count", census.count()}};
  if (include_members) {
    Json members = Json::array();
    for (const auto& m : census.members) {
      members.push_back(Json{{"gaps", m.gap_list()}});
    }
    out["members"] = std::move(members);
  }
  return out;
}

Json to_json(const CrossCheckResult& c) {
  Json out{{"ok", c.ok}};
  if (!c.ok) {
    out["r"] = c.r;
    out["missing"] = c.missing_gap_list;
    out["extra"] = c.extra_gap_list;
  }
  return out;
}

Json to_json(const VerificationReport& report) {
  const auto& s = report.semigroup;
  Json out{{"gens", s.minimal_generators()},
           {"frobenius", s.frobenius()},
           {"conductor", s.conductor()},
           {"genus", s.genus()},
           {"j_sequence", report.j_sequence},
           {"monotone_ok", report.monotone_ok},
           {"stable_ok", report.stable_ok},
           {"oracle_checked", report.oracle_checked},
           {"n_s_used", report.n_s_used},
           {"observed_min_threshold", report.observed_min_threshold},
           {"window", report.window},
           {"passed", report.passed()}};
  if (report.oracle_checked && !report.oracle.ok) {
    out["discrepancy"] = to_json(report.oracle);
  }
  return out;
}

namespace {

std::string join(const std::vector<Int>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

}  // namespace

std::string report_csv_header() {
  return "gens,frobenius,conductor,genus,j_sequence,monotone_ok,stable_ok,"
         "oracle_checked,n_s_used,observed_min_threshold";
}

std::string report_csv_row(const VerificationReport& report) {
  const auto& s = report.semigroup;
  std::ostringstream out;
  out << '"' << join(s.minimal_generators(), ',') << '"' << ','
      << s.frobenius() << ',' << s.conductor() << ',' << s.genus() << ','
      << join(report.j_sequence, ' ') << ','
      << (report.monotone_ok ? "true" : "false") << ','
      << (report.stable_ok ? "true" : "false") << ','
      << (report.oracle_checked ? "true" : "false") << ',' << report.n_s_used
      << ',' << report.observed_min_threshold;
  return out.str();
}

}  // namespace numsemi
