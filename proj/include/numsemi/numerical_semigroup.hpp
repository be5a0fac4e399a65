#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "numsemi/errors.hpp"

namespace numsemi {

/// One representation of a semigroup element over the minimal generators,
/// coefficients in ascending generator order.
struct Factorization {
  std::vector<Int> coefficients;
  bool operator==(const Factorization&) const = default;
};

/// A cofinite additive submonoid of the nonnegative integers.
///
/// Identified by its unique minimal generating system; all derived tables
/// (gaps, Apery row, conductor, small elements) are computed once on
/// construction. Instances are immutable and cheap to copy (the tables are
/// shared), so they can be passed around by value and used concurrently.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `raw`. Zeros and duplicates are
  /// dropped, redundant generators removed. Throws EmptyGenerators or
  /// GcdNotOne; negative entries are rejected with std::invalid_argument.
  static NumericalSemigroup from_generators(const std::vector<Int>& raw);

  const std::vector<Int>& minimal_generators() const { return d_->min_gens; }
  /// Smallest nonzero element (= smallest minimal generator).
  Int multiplicity() const { return d_->min_gens.front(); }
  /// Largest gap; -1 when the semigroup is all of N0.
  Int frobenius() const { return d_->frobenius; }
  Int conductor() const { return d_->frobenius + 1; }
  Int genus() const { return static_cast<Int>(d_->gaps.size()); }
  const std::vector<Int>& gaps() const { return d_->gaps; }
  /// Apery row with respect to the multiplicity m: entry i is the least
  /// element congruent to i mod m.
  const std::vector<Int>& apery_row() const { return d_->apery; }
  /// Elements strictly below the conductor.
  const std::vector<Int>& small_elements() const { return d_->small; }

  bool contains(Int n) const {
    if (n < 0) return false;
    const auto& ap = d_->apery;
    return n >= ap[static_cast<std::size_t>(n % static_cast<Int>(ap.size()))];
  }

  /// k-th smallest element, counting from s_0 = 0.
  Int nth_element(Int k) const;

  /// Apery set with respect to an arbitrary nonzero element m.
  /// Throws NotAMember when m = 0 or m lies outside the semigroup.
  std::vector<Int> apery_set(Int m) const;

  /// The lexicographically greatest coefficient vector representing n over
  /// the minimal generators. Throws NotAMember.
  Factorization factorize(Int n) const;

  /// Sum of coefficient[j] * generator[j].
  Int evaluate(const Factorization& f) const;

  /// The semigroups S \ {a} for each minimal generator a exceeding the
  /// Frobenius number, in ascending order of the removed generator.
  std::vector<NumericalSemigroup> children() const;

  bool operator==(const NumericalSemigroup& other) const {
    return d_ == other.d_ || d_->min_gens == other.d_->min_gens;
  }
  bool operator!=(const NumericalSemigroup& other) const {
    return !(*this == other);
  }
  /// Canonical order: lexicographic on the minimal generator list.
  bool operator<(const NumericalSemigroup& other) const {
    return d_->min_gens < other.d_->min_gens;
  }

  std::size_t hash() const;
  /// "<2,5>"
  std::string to_string() const;

 private:
  struct Data {
    std::vector<Int> min_gens;
    Int frobenius = -1;
    std::vector<Int> gaps;
    std::vector<Int> apery;
    std::vector<Int> small;
  };
  explicit NumericalSemigroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

/// Parses "4,6,9" into a list of nonnegative integers.
std::vector<Int> parse_integer_list(std::string_view text);

}  // namespace numsemi

template <>
struct std::hash<numsemi::NumericalSemigroup> {
  std::size_t operator()(const numsemi::NumericalSemigroup& s) const {
    return s.hash();
  }
};
