#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "numsemi/numerical_semigroup.hpp"

namespace numsemi {

/// An S-semimodule Delta (a subset of S with Delta + S contained in Delta),
/// stored canonically by its finite gap set G = S \ Delta. G is a down-closed
/// subset of S: removing an element forces removing all its S-predecessors.
/// Immutable; codim(Delta) = |G|.
class Semimodule {
 public:
  /// Validating constructor from the gap set. Sorts and deduplicates.
  /// Throws GapNotInSemigroup or NotDownClosed (with a witness predecessor).
  static Semimodule from_gaps(NumericalSemigroup s, std::vector<Int> gaps);

  /// The semimodule generated by `alphas`: the union of the sets alpha + S.
  /// Throws NotAMember for an alpha outside S.
  static Semimodule from_generators(NumericalSemigroup s,
                                    const std::vector<Int>& alphas);

  /// Trusted constructor: `gaps` must already be sorted, unique and
  /// down-closed. Used by the level recursion, which only produces valid
  /// gap sets.
  static Semimodule unchecked(NumericalSemigroup s, std::vector<Int> gaps);

  const NumericalSemigroup& semigroup() const { return semigroup_; }
  const std::vector<Int>& gap_list() const { return gaps_; }
  Int codim() const { return static_cast<Int>(gaps_.size()); }

  /// n in Delta, i.e. n in S and n not removed.
  bool contains(Int n) const;

  /// The unique minimal generating system: elements alpha of Delta such
  /// that alpha - a lies outside Delta for every minimal generator a of S.
  std::vector<Int> minimal_generators() const;

  /// Delta \ {alpha}; codimension grows by one. Throws NotAMinimalGenerator.
  Semimodule remove_generator(Int alpha) const;

  /// Restores the largest gap: returns (Delta with max(G) put back, max(G)).
  /// The restored element is a minimal generator of the result.
  /// Throws AlreadyFull at codimension 0.
  std::pair<Semimodule, Int> add_max_gap() const;

  /// The numerical semigroup Delta union {0}.
  NumericalSemigroup associated_semigroup() const;

  /// Exponent data of a monomial ideal whose order set is Delta: one
  /// factorization per minimal generator of Delta.
  std::vector<Factorization> monomial_ideal_witness() const;

  bool operator==(const Semimodule& other) const {
    return semigroup_ == other.semigroup_ && gaps_ == other.gaps_;
  }
  bool operator!=(const Semimodule& other) const { return !(*this == other); }

  std::size_t hash() const;
  /// "<2,5> \ {0,2}"
  std::string to_string() const;

 private:
  Semimodule(NumericalSemigroup s, std::vector<Int> gaps)
      : semigroup_(std::move(s)), gaps_(std::move(gaps)) {}

  NumericalSemigroup semigroup_;
  std::vector<Int> gaps_;
};

/// Order set of the monomial ideal with the given exponent data: evaluates
/// each factorization and returns the semimodule those values generate.
/// Round-trips with Semimodule::monomial_ideal_witness.
Semimodule order_set_of_monomial_ideal(
    const NumericalSemigroup& s, const std::vector<Factorization>& exponents);

/// Minimal generators of the semimodule with the given (valid) gap set,
/// without constructing a Semimodule. Shared with the level recursion.
std::vector<Int> minimal_module_generators(const NumericalSemigroup& s,
                                           const std::vector<Int>& gap_list);

}  // namespace numsemi

template <>
struct std::hash<numsemi::Semimodule> {
  std::size_t operator()(const numsemi::Semimodule& m) const {
    return m.hash();
  }
};
