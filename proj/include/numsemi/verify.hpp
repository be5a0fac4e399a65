#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "numsemi/enumeration.hpp"

namespace numsemi {

/// Outcome of comparing the level recursion against the exhaustive
/// enumerator. On mismatch, carries one witness from each side at the first
/// level that differs (empty vector when that side has no witness).
struct CrossCheckResult {
  bool ok = true;
  Int r = -1;
  std::vector<Int> missing_gap_list;  // found by the oracle only
  std::vector<Int> extra_gap_list;    // found by the recursion only
};

/// True iff the recursion census equals the oracle census, as sets of gap
/// lists, for every level r <= r_max.
CrossCheckResult cross_check(const NumericalSemigroup& s, Int r_max,
                             int threads = 1);

/// Per-semigroup record of the count sequence r -> #J(S,r) and the verdicts
/// for the two conjectured clauses: the sequence weakly increases, and it is
/// constant from the threshold n_S = max(F(S), 1) onwards.
struct VerificationReport {
  NumericalSemigroup semigroup;
  Int window = 0;
  Int n_s_used = 1;
  /// Entries 0 .. n_s_used + window.
  std::vector<Int> j_sequence;
  /// Weakly increasing over the whole computed range (which subsumes the
  /// clause for indices up to n_S).
  bool monotone_ok = false;
  /// Constant on [n_S, n_S + window].
  bool stable_ok = false;
  /// Least index from which the computed sequence is constant.
  Int observed_min_threshold = 0;
  bool oracle_checked = false;
  CrossCheckResult oracle;  // meaningful when oracle_checked

  bool passed() const {
    return monotone_ok && stable_ok && (!oracle_checked || oracle.ok);
  }
};

/// Computes the j-sequence up to n_S + window via the level recursion and
/// fills in the verdicts. When with_oracle is set, additionally cross-checks
/// levels r <= c(S) + 2 against the exhaustive enumerator.
VerificationReport verify_conjecture(const NumericalSemigroup& s, Int window,
                                     bool with_oracle = false,
                                     int threads = 1);

struct SweepResult {
  Int genus_max = 0;
  Int window = 0;
  std::size_t corpus_size = 0;
  /// In (genus, generator-list) order; truncated just past the first
  /// failure, if any.
  std::vector<VerificationReport> reports;
  std::optional<std::size_t> first_failure;

  bool all_passed() const {
    return !first_failure && reports.size() == corpus_size;
  }
};

/// verify_conjecture over every numerical semigroup of genus <= g_max.
/// A failing report aborts the sweep.
SweepResult sweep(Int g_max, Int window, int threads = 1);

}  // namespace numsemi
