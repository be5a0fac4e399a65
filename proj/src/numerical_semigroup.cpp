#include "numsemi/numerical_semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace numsemi {

namespace {

// Least element of <gens> in each residue class mod m, via Dijkstra on the
// residue graph (vertices 0..m-1, an edge i -> (i+a) mod m of weight a per
// generator). Requires gcd(gens) coprime to nothing in particular here;
// every class is reachable exactly when gcd(gens) = 1.
std::vector<Int> apery_by_shortest_path(Int m, const std::vector<Int>& gens) {
  const Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(m), kInf);
  dist[0] = 0;
  using Node = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [v, i] = queue.top();
    queue.pop();
    if (v > dist[static_cast<std::size_t>(i)]) continue;
    for (Int a : gens) {
      if (a % m == 0) continue;  // never improves its own class
      Int j = (i + a) % m;
      Int nv = v + a;
      if (nv < dist[static_cast<std::size_t>(j)]) {
        dist[static_cast<std::size_t>(j)] = nv;
        queue.push({nv, j});
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(
    const std::vector<Int>& raw) {
  std::set<Int> cleaned;
  for (Int g : raw) {
    if (g < 0) throw std::invalid_argument("generators must be nonnegative");
    if (g > 0) cleaned.insert(g);
  }
  if (cleaned.empty()) throw EmptyGenerators();

  std::vector<Int> gens(cleaned.begin(), cleaned.end());
  Int g = 0;
  for (Int a : gens) g = std::gcd(g, a);
  if (g != 1) throw GcdNotOne(g);

  auto d = std::make_shared<Data>();
  const Int m = gens.front();
  d->apery = apery_by_shortest_path(m, gens);
  d->frobenius = *std::max_element(d->apery.begin(), d->apery.end()) - m;

  const Int conductor = d->frobenius + 1;
  for (Int n = 0; n < conductor; ++n) {
    if (n < d->apery[static_cast<std::size_t>(n % m)]) {
      d->gaps.push_back(n);
    } else {
      d->small.push_back(n);
    }
  }

  // The minimal system is contained in every generating set: keep exactly
  // the generators that are not a sum of two nonzero elements.
  auto member = [&](Int n) {
    return n >= 0 && n >= d->apery[static_cast<std::size_t>(n % m)];
  };
  for (Int a : gens) {
    bool redundant = false;
    for (Int s = m; s + m <= a; ++s) {
      if (member(s) && member(a - s)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) d->min_gens.push_back(a);
  }
  assert(!d->min_gens.empty());

  return NumericalSemigroup(std::move(d));
}

Int NumericalSemigroup::nth_element(Int k) const {
  if (k < 0) throw std::invalid_argument("element index must be nonnegative");
  const auto& small = d_->small;
  if (k < static_cast<Int>(small.size())) {
    return small[static_cast<std::size_t>(k)];
  }
  return conductor() + (k - static_cast<Int>(small.size()));
}

std::vector<Int> NumericalSemigroup::apery_set(Int m) const {
  if (m <= 0 || !contains(m)) throw NotAMember(m);
  std::vector<Int> result(static_cast<std::size_t>(m), -1);
  Int filled = 0;
  // Every class has a representative below conductor + m.
  for (Int n = 0; n < conductor() + m && filled < m; ++n) {
    auto& slot = result[static_cast<std::size_t>(n % m)];
    if (slot < 0 && contains(n)) {
      slot = n;
      ++filled;
    }
  }
  assert(filled == m);
  return result;
}

Factorization NumericalSemigroup::factorize(Int n) const {
  if (!contains(n)) throw NotAMember(n);
  const auto& gens = d_->min_gens;
  const int p = static_cast<int>(gens.size());
  std::vector<Int> coeff(gens.size(), 0);
  std::set<std::pair<int, Int>> dead;

  // Lexicographically greatest vector: maximize the coefficient of the
  // smallest generator first, backtracking on failure.
  std::function<bool(int, Int)> descend = [&](int idx, Int rem) -> bool {
    if (rem == 0) return true;
    if (idx == p) return false;
    if (dead.count({idx, rem})) return false;
    for (Int k = rem / gens[static_cast<std::size_t>(idx)]; k >= 0; --k) {
      coeff[static_cast<std::size_t>(idx)] = k;
      if (descend(idx + 1, rem - k * gens[static_cast<std::size_t>(idx)])) {
        return true;
      }
    }
    coeff[static_cast<std::size_t>(idx)] = 0;
    dead.insert({idx, rem});
    return false;
  };

  bool found = descend(0, n);
  assert(found);  // n is a member, so some representation exists
  (void)found;
  return Factorization{std::move(coeff)};
}

Int NumericalSemigroup::evaluate(const Factorization& f) const {
  const auto& gens = d_->min_gens;
  if (f.coefficients.size() != gens.size()) {
    throw std::invalid_argument(
        "factorization length does not match the number of generators");
  }
  Int total = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (f.coefficients[j] < 0) {
      throw std::invalid_argument("factorization coefficients must be >= 0");
    }
    total += f.coefficients[j] * gens[j];
  }
  return total;
}

std::vector<NumericalSemigroup> NumericalSemigroup::children() const {
  std::vector<NumericalSemigroup> result;
  for (Int a : d_->min_gens) {
    if (a <= frobenius()) continue;
    // S \ {a}: Frobenius number becomes a, so its minimal generators all lie
    // in (0, c' + m'] where c' = a + 1 and m' is its multiplicity.
    Int m_child = 0;
    for (Int n = 1; m_child == 0; ++n) {
      if (n != a && contains(n)) m_child = n;
    }
    std::vector<Int> candidates;
    for (Int n = 1; n <= a + 1 + m_child; ++n) {
      if (n != a && contains(n)) candidates.push_back(n);
    }
    result.push_back(from_generators(candidates));
  }
  return result;
}

std::size_t NumericalSemigroup::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Int g : d_->min_gens) {
    h ^= static_cast<std::size_t>(g);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < d_->min_gens.size(); ++i) {
    if (i > 0) out << ',';
    out << d_->min_gens[i];
  }
  out << '>';
  return out.str();
}

std::vector<Int> parse_integer_list(std::string_view text) {
  std::vector<Int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    Int value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || token.empty() || value < 0) {
      throw Error("cannot parse integer list: bad token '" +
                  std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.empty()) throw Error("cannot parse integer list: empty input");
  return values;
}

}  // namespace numsemi
