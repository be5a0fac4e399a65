#pragma once

#include <map>
#include <vector>

#include "numsemi/semimodule.hpp"

namespace numsemi {

/// The full set Mod_r(S) at one codimension level.
struct LevelCensus {
  NumericalSemigroup semigroup;
  Int r = 0;
  /// Pairwise distinct, ordered lexicographically by gap list.
  std::vector<Semimodule> members;

  Int count() const { return static_cast<Int>(members.size()); }
};

/// Mod_0(S) = {S}.
LevelCensus level_zero(const NumericalSemigroup& s);

/// Mod_{r+1}(S) from Mod_r(S): remove each minimal generator of each member
/// and deduplicate by gap list.
LevelCensus next_level(const LevelCensus& level, int threads = 1);

/// [N_0, ..., N_{r_max}]. Keeps only two consecutive levels in memory.
std::vector<Int> mod_counts(const NumericalSemigroup& s, Int r_max,
                            int threads = 1);

/// [#J(S,0), ..., #J(S,r_max)]; entry r equals N_{r+1}.
std::vector<Int> j_counts(const NumericalSemigroup& s, Int r_max,
                          int threads = 1);

/// The associated semigroups of the members of Mod_{r+1}(S), in member
/// order. Pairwise distinct; every element has genus g(S) + r.
std::vector<NumericalSemigroup> j_set(const NumericalSemigroup& s, Int r,
                                      int threads = 1);

/// Independent enumeration of Mod_r(S): depth-first search over down-closed
/// r-subsets of S within [0, s_r + F(S)], where s_r is the r-th element of
/// S. Exercises none of the level recursion above.
LevelCensus oracle_enumerate(const NumericalSemigroup& s, Int r);

/// All numerical semigroups of genus <= g_max, grouped by genus: the
/// breadth-first closure of NumericalSemigroup::children starting from N0.
/// Each level is sorted by minimal generator list.
std::map<Int, std::vector<NumericalSemigroup>> enumerate_semigroups_by_genus(
    Int g_max);

namespace detail {

using GapList = std::vector<Int>;

/// Gap lists of Mod_{r+1}(S) from those of Mod_r(S).
std::vector<GapList> next_gap_level(const NumericalSemigroup& s,
                                    const std::vector<GapList>& level,
                                    int threads);

/// Gap lists of Mod_r(S) via the recursion from level 0.
std::vector<GapList> gap_level(const NumericalSemigroup& s, Int r,
                               int threads);

/// Gap lists of Mod_r(S) via the exhaustive down-closed-subset search.
std::vector<GapList> oracle_gap_level(const NumericalSemigroup& s, Int r);

}  // namespace detail

}  // namespace numsemi
