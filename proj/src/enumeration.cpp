#include "numsemi/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace numsemi {

namespace detail {

namespace {

// Children of one gap list: remove each minimal generator.
void emit_children(const NumericalSemigroup& s, const GapList& gaps,
                   std::set<GapList>& out) {
  for (Int alpha : minimal_module_generators(s, gaps)) {
    GapList child = gaps;
    child.insert(std::upper_bound(child.begin(), child.end(), alpha), alpha);
    out.insert(std::move(child));
  }
}

}  // namespace

std::vector<GapList> next_gap_level(const NumericalSemigroup& s,
                                    const std::vector<GapList>& level,
                                    int threads) {
  std::set<GapList> merged;
  constexpr std::size_t kParallelCutoff = 64;
  if (level.size() >= kParallelCutoff && resolve_threads(threads) > 1) {
    std::mutex lock;
    parallel_chunks(level.size(), threads,
                    [&](std::size_t begin, std::size_t end) {
                      std::set<GapList> local;
                      for (std::size_t i = begin; i < end; ++i) {
                        emit_children(s, level[i], local);
                      }
                      std::lock_guard<std::mutex> guard(lock);
                      merged.merge(local);
                    });
  } else {
    for (const auto& gaps : level) emit_children(s, gaps, merged);
  }
  return {merged.begin(), merged.end()};
}

std::vector<GapList> gap_level(const NumericalSemigroup& s, Int r,
                               int threads) {
  std::vector<GapList> level = {GapList{}};
  for (Int i = 0; i < r; ++i) level = next_gap_level(s, level, threads);
  return level;
}

std::vector<GapList> oracle_gap_level(const NumericalSemigroup& s, Int r) {
  if (r == 0) return {GapList{}};
  // Candidate window: every down-closed r-subset G of S satisfies
  // min(S \ G) <= s_r, so G lies within [0, s_r + F(S)].
  const Int limit = s.nth_element(r) + s.frobenius();
  std::vector<Int> window;
  for (Int n = 0; n <= limit; ++n) {
    if (s.contains(n)) window.push_back(n);
  }
  // Predecessor indices within the window (predecessors never exceed the
  // element, so they are always inside the window).
  std::vector<std::vector<std::size_t>> preds(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Int diff = window[i] - window[j];
      if (diff > 0 && s.contains(diff)) preds[i].push_back(j);
    }
  }

  std::vector<GapList> found;
  std::vector<std::size_t> chosen_idx;
  std::vector<bool> chosen(window.size(), false);
  // Ascending-element extension: each prefix of a down-closed set is
  // down-closed, so pruning at the first violation is exact.
  auto extend = [&](auto&& self, std::size_t next) -> void {
    if (chosen_idx.size() == static_cast<std::size_t>(r)) {
      GapList gaps;
      gaps.reserve(chosen_idx.size());
      for (std::size_t i : chosen_idx) gaps.push_back(window[i]);
      found.push_back(std::move(gaps));
      return;
    }
    std::size_t need = static_cast<std::size_t>(r) - chosen_idx.size();
    for (std::size_t i = next; i + need <= window.size(); ++i) {
      bool closed = true;
      for (std::size_t j : preds[i]) {
        if (!chosen[j]) {
          closed = false;
          break;
        }
      }
      if (!closed) continue;
      chosen[i] = true;
      chosen_idx.push_back(i);
      self(self, i + 1);
      chosen_idx.pop_back();
      chosen[i] = false;
    }
  };
  extend(extend, 0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace detail

namespace {

LevelCensus census_from_gap_lists(const NumericalSemigroup& s, Int r,
                                  std::vector<detail::GapList> lists) {
  LevelCensus census{s, r, {}};
  census.members.reserve(lists.size());
  for (auto& gaps : lists) {
    census.members.push_back(Semimodule::unchecked(s, std::move(gaps)));
  }
  return census;
}

}  // namespace

LevelCensus level_zero(const NumericalSemigroup& s) {
  return census_from_gap_lists(s, 0, {detail::GapList{}});
}

LevelCensus next_level(const LevelCensus& level, int threads) {
  std::vector<detail::GapList> lists;
  lists.reserve(level.members.size());
  for (const auto& m : level.members) lists.push_back(m.gap_list());
  return census_from_gap_lists(
      level.semigroup, level.r + 1,
      detail::next_gap_level(level.semigroup, lists, threads));
}

std::vector<Int> mod_counts(const NumericalSemigroup& s, Int r_max,
                            int threads) {
  if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
  std::vector<Int> counts;
  counts.reserve(static_cast<std::size_t>(r_max) + 1);
  std::vector<detail::GapList> level = {detail::GapList{}};
  counts.push_back(1);
  for (Int r = 1; r <= r_max; ++r) {
    level = detail::next_gap_level(s, level, threads);
    counts.push_back(static_cast<Int>(level.size()));
  }
  return counts;
}

std::vector<Int> j_counts(const NumericalSemigroup& s, Int r_max,
                          int threads) {
  if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
  std::vector<Int> mods = mod_counts(s, r_max + 1, threads);
  return {mods.begin() + 1, mods.end()};
}

std::vector<NumericalSemigroup> j_set(const NumericalSemigroup& s, Int r,
                                      int threads) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  std::vector<NumericalSemigroup> result;
  for (const auto& gaps : detail::gap_level(s, r + 1, threads)) {
    result.push_back(Semimodule::unchecked(s, gaps).associated_semigroup());
  }
  return result;
}

LevelCensus oracle_enumerate(const NumericalSemigroup& s, Int r) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  return census_from_gap_lists(s, r, detail::oracle_gap_level(s, r));
}

std::map<Int, std::vector<NumericalSemigroup>> enumerate_semigroups_by_genus(
    Int g_max) {
  if (g_max < 0) throw std::invalid_argument("genus bound must be nonnegative");
  std::map<Int, std::vector<NumericalSemigroup>> tree;
  tree[0] = {NumericalSemigroup::from_generators({1})};
  for (Int g = 1; g <= g_max; ++g) {
    // Every child removes a generator above the Frobenius number, so each
    // semigroup of genus g arises from exactly one parent; the sort gives
    // the canonical (generator-list) order and the dedup is a safety net.
    std::vector<NumericalSemigroup> level;
    for (const auto& parent : tree[g - 1]) {
      for (auto& child : parent.children()) level.push_back(std::move(child));
    }
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    tree[g] = std::move(level);
  }
  return tree;
}

}  // namespace numsemi
