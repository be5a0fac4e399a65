#include "numsemi/cli.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numsemi/enumeration.hpp"
#include "numsemi/json_io.hpp"
#include "numsemi/verify.hpp"

namespace numsemi::cli {

namespace {

std::string join(const std::vector<Int>& values, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << sep;
    out << values[i];
  }
  return out.str();
}

std::string bracketed(const std::vector<Int>& values) {
  return "[" + join(values, ",") + "]";
}

std::string braced(const std::vector<Int>& values) {
  return "{" + join(values, ",") + "}";
}

std::string list_or_dash(const std::vector<Int>& values) {
  return values.empty() ? "-" : join(values, ",");
}

NumericalSemigroup semigroup_from(const std::string& text) {
  return NumericalSemigroup::from_generators(parse_integer_list(text));
}

int env_default_threads() {
  const char* env = std::getenv("NUMSEMI_THREADS");
  if (env == nullptr) return 0;
  try {
    return std::max(0, std::stoi(env));
  } catch (const std::exception&) {
    return 0;
  }
}

std::string equation(Int value, const Factorization& f,
                     const std::vector<Int>& gens) {
  std::ostringstream out;
  out << value << " = ";
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j > 0) out << " + ";
    out << f.coefficients[j] << '*' << gens[j];
  }
  return out.str();
}

void print_report_table(const VerificationReport& report, std::ostream& out) {
  const auto& s = report.semigroup;
  out << "S = " << s.to_string() << "  F=" << s.frobenius()
      << " c=" << s.conductor() << " g=" << s.genus() << "\n";
  out << "j_sequence = " << bracketed(report.j_sequence) << "\n";
  out << "n_S = " << report.n_s_used << "  window = " << report.window
      << "\n";
  out << "monotone_ok = " << (report.monotone_ok ? "true" : "false") << "\n";
  out << "stable_ok = " << (report.stable_ok ? "true" : "false") << "\n";
  out << "observed_min_threshold = " << report.observed_min_threshold << "\n";
  if (!report.oracle_checked) {
    out << "oracle = not checked\n";
  } else if (report.oracle.ok) {
    out << "oracle = ok\n";
  } else {
    out << "oracle = MISMATCH at r=" << report.oracle.r << "\n";
  }
  out << "verdict = " << (report.passed() ? "PASS" : "FAIL") << "\n";
}

Json census_lists_json(const NumericalSemigroup& s, Int r) {
  Json out{{"r", r}};
  Json recursion = Json::array();
  for (const auto& g : detail::gap_level(s, r, 1)) recursion.push_back(g);
  Json oracle = Json::array();
  for (const auto& g : detail::oracle_gap_level(s, r)) oracle.push_back(g);
  out["recursion"] = std::move(recursion);
  out["oracle"] = std::move(oracle);
  return out;
}

// Everything needed to replay a failed verification: the report plus both
// censuses at the levels around the first bad index.
Json failure_bundle(const VerificationReport& report) {
  Json bundle{{"report", to_json(report)}};
  const auto& j = report.j_sequence;
  Json levels = Json::array();
  if (report.oracle_checked && !report.oracle.ok) {
    levels.push_back(census_lists_json(report.semigroup, report.oracle.r));
  } else {
    Int bad = -1;
    for (std::size_t i = 0; i + 1 < j.size(); ++i) {
      if (j[i] > j[i + 1]) {
        bad = static_cast<Int>(i);
        break;
      }
    }
    if (bad < 0) bad = report.n_s_used;
    levels.push_back(census_lists_json(report.semigroup, bad + 1));
    levels.push_back(census_lists_json(report.semigroup, bad + 2));
  }
  bundle["reproduction"] = std::move(levels);
  return bundle;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"numerical semigroups, their semimodules, and level counts"};
  app.name("numsemi");
  app.fallthrough(true);
  app.require_subcommand(1);

  int threads = env_default_threads();
  app.add_option("--threads", threads,
                 "worker threads for sweeps and level fans (0 = auto)");

  std::string gens_text;
  std::string gaps_text;
  Int r_max = -1;
  Int r_value = 0;
  Int window = 3;
  Int number = 0;
  Int genus_bound = 0;
  bool members = false;
  bool with_oracle = false;
  bool as_json = false;
  bool as_csv = false;

  auto* info = app.add_subcommand("info", "semigroup card");
  info->add_option("gens", gens_text, "comma-separated generators")
      ->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* mods = app.add_subcommand("mods", "semimodule counts per codimension");
  mods->add_option("gens", gens_text)->required();
  mods->add_option("--r-max", r_max, "highest codimension (default c+3)");
  mods->add_flag("--members", members, "list the gap sets of every level");
  mods->add_flag("--json", as_json);

  auto* jcounts_cmd = app.add_subcommand("jcounts", "the sequence #J(S,r)");
  jcounts_cmd->add_option("gens", gens_text)->required();
  jcounts_cmd->add_option("--r-max", r_max, "highest index (default c+3)");
  jcounts_cmd->add_flag("--json", as_json);

  auto* jset_cmd =
      app.add_subcommand("jset", "the semigroups in J(S,r), one per line");
  jset_cmd->add_option("gens", gens_text)->required();
  jset_cmd->add_option("--r", r_value, "genus offset r")->required();
  jset_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand(
      "verify", "check that the j-sequence increases and stabilizes");
  verify_cmd->add_option("gens", gens_text)->required();
  verify_cmd->add_option("--window", window, "indices checked past n_S");
  verify_cmd->add_flag("--oracle", with_oracle,
                       "cross-check levels r <= c+2 exhaustively");
  verify_cmd->add_flag("--json", as_json);
  verify_cmd->add_flag("--csv", as_csv)->excludes("--json");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "verify every semigroup up to a genus");
  sweep_cmd->add_option("--genus", genus_bound, "largest genus")->required();
  sweep_cmd->add_option("--window", window, "indices checked past n_S");
  sweep_cmd->add_flag("--json", as_json);
  sweep_cmd->add_flag("--csv", as_csv)->excludes("--json");

  auto* witness_cmd = app.add_subcommand(
      "witness", "monomial-ideal exponent data for a semimodule");
  witness_cmd->add_option("gens", gens_text)->required();
  witness_cmd->add_option("--gaps", gaps_text, "gap set, e.g. 0,2,3")
      ->required();
  witness_cmd->add_flag("--json", as_json);

  auto* factor_cmd =
      app.add_subcommand("factor", "factorize an element over the generators");
  factor_cmd->add_option("gens", gens_text)->required();
  factor_cmd->add_option("n", number, "element to factorize")->required();
  factor_cmd->add_flag("--json", as_json);

  std::vector<const char*> argv;
  argv.push_back("numsemi");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*info) {
      auto s = semigroup_from(gens_text);
      if (as_json) {
        out << to_json(s).dump() << "\n";
      } else {
        out << "S = " << s.to_string() << "\n";
        out << "frobenius   " << s.frobenius() << "\n";
        out << "conductor   " << s.conductor() << "\n";
        out << "genus       " << s.genus() << "\n";
        out << "gaps        " << list_or_dash(s.gaps()) << "\n";
        out << "min_gens    " << join(s.minimal_generators(), ",") << "\n";
        out << "apery[" << s.multiplicity() << "]    "
            << join(s.apery_row(), ",") << "\n";
        out << "small       " << list_or_dash(s.small_elements()) << "\n";
      }
      return 0;
    }

    if (*mods) {
      auto s = semigroup_from(gens_text);
      if (r_max < 0) r_max = s.conductor() + 3;
      std::vector<LevelCensus> levels;
      levels.push_back(level_zero(s));
      for (Int r = 1; r <= r_max; ++r) {
        levels.push_back(next_level(levels.back(), threads));
      }
      if (as_json) {
        Json arr = Json::array();
        for (const auto& census : levels) {
          arr.push_back(to_json(census, members));
        }
        out << arr.dump() << "\n";
      } else {
        out << "S = " << s.to_string() << "\n";
        out << "r count\n";
        for (const auto& census : levels) {
          out << census.r << " " << census.count() << "\n";
          if (members) {
            for (const auto& m : census.members) {
              out << "  " << braced(m.gap_list()) << "\n";
            }
          }
        }
      }
      return 0;
    }

    if (*jcounts_cmd) {
      auto s = semigroup_from(gens_text);
      if (r_max < 0) r_max = s.conductor() + 3;
      auto counts = j_counts(s, r_max, threads);
      if (as_json) {
        out << Json{{"gens", s.minimal_generators()},
                    {"r_max", r_max},
                    {"j_counts", counts}}
                   .dump()
            << "\n";
      } else {
        out << "S = " << s.to_string() << "\n";
        out << "j_counts[0.." << r_max << "] = " << bracketed(counts) << "\n";
      }
      return 0;
    }

    if (*jset_cmd) {
      auto s = semigroup_from(gens_text);
      auto set = j_set(s, r_value, threads);
      if (as_json) {
        Json members_json = Json::array();
        for (const auto& t : set) members_json.push_back(to_json(t));
        out << Json{{"gens", s.minimal_generators()},
                    {"r", r_value},
                    {"count", static_cast<Int>(set.size())},
                    {"members", std::move(members_json)}}
                   .dump()
            << "\n";
      } else {
        out << "S = " << s.to_string() << "  r=" << r_value
            << "  count=" << set.size() << "\n";
        for (const auto& t : set) out << t.to_string() << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      auto s = semigroup_from(gens_text);
      auto report = verify_conjecture(s, window, with_oracle, threads);
      if (as_json) {
        out << to_json(report).dump() << "\n";
      } else if (as_csv) {
        out << report_csv_header() << "\n" << report_csv_row(report) << "\n";
      } else {
        print_report_table(report, out);
      }
      if (!report.passed()) {
        err << failure_bundle(report).dump() << "\n";
        return 1;
      }
      return 0;
    }

    if (*sweep_cmd) {
      auto result = sweep(genus_bound, window, threads);
      std::size_t passed = 0;
      for (const auto& r : result.reports) {
        if (r.passed()) ++passed;
      }
      std::size_t failed = result.reports.size() - passed;
      if (as_json) {
        Json reports = Json::array();
        for (const auto& r : result.reports) reports.push_back(to_json(r));
        out << Json{{"genus_max", result.genus_max},
                    {"window", result.window},
                    {"corpus_size", result.corpus_size},
                    {"all_passed", result.all_passed()},
                    {"reports", std::move(reports)}}
                   .dump()
            << "\n";
      } else if (as_csv) {
        out << report_csv_header() << "\n";
        for (const auto& r : result.reports) {
          out << report_csv_row(r) << "\n";
        }
      } else {
        out << "sweep genus <= " << result.genus_max
            << "  window = " << result.window << "\n";
        for (const auto& r : result.reports) {
          out << r.semigroup.to_string() << " g=" << r.semigroup.genus()
              << " F=" << r.semigroup.frobenius() << " j="
              << bracketed(r.j_sequence) << " "
              << (r.passed() ? "PASS" : "FAIL") << "\n";
        }
        out << "swept " << result.reports.size() << " of "
            << result.corpus_size << " semigroups: " << passed << " passed, "
            << failed << " failed\n";
      }
      if (!result.all_passed()) {
        err << failure_bundle(result.reports[*result.first_failure]).dump()
            << "\n";
        return 1;
      }
      return 0;
    }

    if (*witness_cmd) {
      auto s = semigroup_from(gens_text);
      auto delta = Semimodule::from_gaps(s, parse_integer_list(gaps_text));
      auto mins = delta.minimal_generators();
      auto witness = delta.monomial_ideal_witness();
      if (as_json) {
        Json exps = Json::array();
        for (const auto& f : witness) exps.push_back(f.coefficients);
        Json body = to_json(delta);
        body["witness"] = std::move(exps);
        out << body.dump() << "\n";
      } else {
        out << "S = " << s.to_string() << "  gaps = "
            << braced(delta.gap_list()) << "  codim = " << delta.codim()
            << "\n";
        out << "min_gens = " << join(mins, ",") << "\n";
        for (std::size_t i = 0; i < mins.size(); ++i) {
          out << equation(mins[i], witness[i], s.minimal_generators()) << "\n";
        }
      }
      return 0;
    }

    if (*factor_cmd) {
      auto s = semigroup_from(gens_text);
      auto f = s.factorize(number);
      if (as_json) {
        out << Json{{"gens", s.minimal_generators()},
                    {"n", number},
                    {"coefficients", f.coefficients}}
                   .dump()
            << "\n";
      } else {
        out << equation(number, f, s.minimal_generators()) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace numsemi::cli
