#include "numsemi/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace numsemi {

CrossCheckResult cross_check(const NumericalSemigroup& s, Int r_max,
                             int threads) {
  if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
  std::vector<detail::GapList> level = {detail::GapList{}};
  for (Int r = 0; r <= r_max; ++r) {
    if (r > 0) level = detail::next_gap_level(s, level, threads);
    std::vector<detail::GapList> oracle = detail::oracle_gap_level(s, r);
    if (level != oracle) {  // both sorted, so set equality is list equality
      CrossCheckResult bad;
      bad.ok = false;
      bad.r = r;
      std::set<detail::GapList> recursion(level.begin(), level.end());
      std::set<detail::GapList> exhaustive(oracle.begin(), oracle.end());
      for (const auto& g : exhaustive) {
        if (!recursion.count(g)) {
          bad.missing_gap_list = g;
          break;
        }
      }
      for (const auto& g : recursion) {
        if (!exhaustive.count(g)) {
          bad.extra_gap_list = g;
          break;
        }
      }
      return bad;
    }
  }
  return {};
}

VerificationReport verify_conjecture(const NumericalSemigroup& s, Int window,
                                     bool with_oracle, int threads) {
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  VerificationReport report{s, window};
  report.n_s_used = std::max<Int>(s.frobenius(), 1);

  const Int r_top = report.n_s_used + window;
  report.j_sequence = j_counts(s, r_top, threads);

  report.monotone_ok =
      std::is_sorted(report.j_sequence.begin(), report.j_sequence.end());
  report.stable_ok = true;
  for (Int n = report.n_s_used; n <= r_top; ++n) {
    if (report.j_sequence[static_cast<std::size_t>(n)] !=
        report.j_sequence[static_cast<std::size_t>(report.n_s_used)]) {
      report.stable_ok = false;
      break;
    }
  }
  Int threshold = r_top;
  while (threshold > 0 &&
         report.j_sequence[static_cast<std::size_t>(threshold - 1)] ==
             report.j_sequence.back()) {
    --threshold;
  }
  report.observed_min_threshold = threshold;

  if (with_oracle) {
    report.oracle = cross_check(s, s.conductor() + 2, threads);
    report.oracle_checked = true;
  }
  return report;
}

SweepResult sweep(Int g_max, Int window, int threads) {
  if (g_max < 0) throw std::invalid_argument("genus bound must be nonnegative");
  std::vector<NumericalSemigroup> corpus;
  for (auto& [genus, level] : enumerate_semigroups_by_genus(g_max)) {
    for (auto& s : level) corpus.push_back(std::move(s));
  }

  SweepResult result;
  result.genus_max = g_max;
  result.window = window;
  result.corpus_size = corpus.size();

  std::vector<std::optional<VerificationReport>> reports(corpus.size());
  detail::parallel_chunks(corpus.size(), threads,
                          [&](std::size_t begin, std::size_t end) {
                            for (std::size_t i = begin; i < end; ++i) {
                              reports[i] = verify_conjecture(corpus[i], window,
                                                             false, 1);
                            }
                          });

  for (std::size_t i = 0; i < reports.size(); ++i) {
    result.reports.push_back(std::move(*reports[i]));
    if (!result.reports.back().passed()) {
      result.first_failure = i;
      break;  // a counterexample aborts the sweep
    }
  }
  return result;
}

}  // namespace numsemi
