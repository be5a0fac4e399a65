#include "numsemi/semimodule.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace numsemi {

namespace {

bool in_sorted(const std::vector<Int>& v, Int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Semimodule Semimodule::from_gaps(NumericalSemigroup s, std::vector<Int> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  for (Int g : gaps) {
    if (!s.contains(g)) throw GapNotInSemigroup(g);
  }
  // Closure under each minimal generator of S is enough: closure under sums
  // of generators follows, hence closure under all of S \ {0}.
  for (Int g : gaps) {
    for (Int a : s.minimal_generators()) {
      Int h = g - a;
      if (h >= 0 && s.contains(h) && !in_sorted(gaps, h)) {
        throw NotDownClosed(g, h);
      }
    }
  }
  return Semimodule(std::move(s), std::move(gaps));
}

Semimodule Semimodule::from_generators(NumericalSemigroup s,
                                       const std::vector<Int>& alphas) {
  if (alphas.empty()) {
    throw std::invalid_argument("semimodule generator list is empty");
  }
  for (Int a : alphas) {
    if (!s.contains(a)) throw NotAMember(a);
  }
  // Everything at or beyond min(alphas) + c lies in min(alphas) + S.
  Int bound = *std::min_element(alphas.begin(), alphas.end()) + s.conductor();
  std::vector<Int> gaps;
  for (Int n = 0; n < bound; ++n) {
    if (!s.contains(n)) continue;
    bool covered = false;
    for (Int a : alphas) {
      if (n >= a && s.contains(n - a)) {
        covered = true;
        break;
      }
    }
    if (!covered) gaps.push_back(n);
  }
  return Semimodule(std::move(s), std::move(gaps));
}

Semimodule Semimodule::unchecked(NumericalSemigroup s, std::vector<Int> gaps) {
  assert(std::is_sorted(gaps.begin(), gaps.end()));
  return Semimodule(std::move(s), std::move(gaps));
}

bool Semimodule::contains(Int n) const {
  return semigroup_.contains(n) && !in_sorted(gaps_, n);
}

std::vector<Int> minimal_module_generators(const NumericalSemigroup& s,
                                           const std::vector<Int>& gap_list) {
  // Minimal generators are Delta \ (Delta + (S \ {0})); testing against the
  // minimal generators of S suffices. Beyond the window below, alpha minus
  // the multiplicity is already in Delta.
  Int max_gap = gap_list.empty() ? 0 : gap_list.back() + 1;
  Int window = std::max(s.conductor(), max_gap) + s.multiplicity();
  std::vector<Int> result;
  for (Int alpha = 0; alpha <= window; ++alpha) {
    if (!s.contains(alpha) || in_sorted(gap_list, alpha)) continue;
    bool minimal = true;
    for (Int a : s.minimal_generators()) {
      Int h = alpha - a;
      if (h >= 0 && s.contains(h) && !in_sorted(gap_list, h)) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(alpha);
  }
  return result;
}

std::vector<Int> Semimodule::minimal_generators() const {
  return minimal_module_generators(semigroup_, gaps_);
}

Semimodule Semimodule::remove_generator(Int alpha) const {
  auto mins = minimal_generators();
  if (!in_sorted(mins, alpha)) throw NotAMinimalGenerator(alpha);
  std::vector<Int> gaps = gaps_;
  gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), alpha), alpha);
  return Semimodule(semigroup_, std::move(gaps));
}

std::pair<Semimodule, Int> Semimodule::add_max_gap() const {
  if (gaps_.empty()) throw AlreadyFull();
  Int alpha = gaps_.back();
  std::vector<Int> gaps(gaps_.begin(), gaps_.end() - 1);
  Semimodule parent(semigroup_, std::move(gaps));
  assert(in_sorted(parent.minimal_generators(), alpha));
  return {std::move(parent), alpha};
}

NumericalSemigroup Semimodule::associated_semigroup() const {
  if (gaps_.empty()) return semigroup_;
  // Gaps of Delta~ = gaps(S) together with the removed nonzero elements.
  Int frob = semigroup_.frobenius();
  if (gaps_.back() > 0) frob = std::max(frob, gaps_.back());
  const Int conductor = frob + 1;
  auto in_tilde = [&](Int n) { return n == 0 || contains(n); };
  Int mult = 0;
  for (Int n = 1; mult == 0; ++n) {
    if (in_tilde(n)) mult = n;
  }
  std::vector<Int> candidates;
  for (Int n = 1; n <= conductor + mult; ++n) {
    if (in_tilde(n)) candidates.push_back(n);
  }
  return NumericalSemigroup::from_generators(candidates);
}

std::vector<Factorization> Semimodule::monomial_ideal_witness() const {
  std::vector<Factorization> result;
  for (Int alpha : minimal_generators()) {
    result.push_back(semigroup_.factorize(alpha));
  }
  return result;
}

std::size_t Semimodule::hash() const {
  std::size_t h = semigroup_.hash();
  for (Int g : gaps_) {
    h ^= static_cast<std::size_t>(g) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::string Semimodule::to_string() const {
  std::ostringstream out;
  out << semigroup_.to_string() << " \\ {";
  for (std::size_t i = 0; i < gaps_.size(); ++i) {
    if (i > 0) out << ',';
    out << gaps_[i];
  }
  out << '}';
  return out.str();
}

Semimodule order_set_of_monomial_ideal(
    const NumericalSemigroup& s, const std::vector<Factorization>& exponents) {
  if (exponents.empty()) {
    throw std::invalid_argument("monomial ideal needs at least one exponent");
  }
  std::vector<Int> alphas;
  alphas.reserve(exponents.size());
  for (const auto& f : exponents) alphas.push_back(s.evaluate(f));
  return Semimodule::from_generators(s, alphas);
}

}  // namespace numsemi
