#pragma once

#include <string>

#include <json.hpp>

#include "numsemi/enumeration.hpp"
#include "numsemi/verify.hpp"

namespace numsemi {

// Insertion-ordered so the rendered key order below is stable.
using Json = nlohmann::ordered_json;

/// {"gens":[...], "frobenius":F, "conductor":c, "genus":g, "gaps":[...]}
Json to_json(const NumericalSemigroup& s);

/// {"gens_of_S":[...], "gaps":[...], "codim":r, "min_gens":[...]}
Json to_json(const Semimodule& m);

/// {"gens":[...], "r":r, "count":N [, "members":[{"gaps":[...]}...]]}
Json to_json(const LevelCensus& census, bool include_members);

Json to_json(const CrossCheckResult& c);
Json to_json(const VerificationReport& report);

/// CSV with columns
/// gens,frobenius,conductor,genus,j_sequence,monotone_ok,stable_ok,
/// oracle_checked,n_s_used,observed_min_threshold
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report);

}  // namespace numsemi
