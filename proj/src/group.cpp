#include "supergraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "supergraph/error.hpp"
#include "supergraph/partition.hpp"

namespace supergraph {
namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 256;

std::string power_label(const std::string& base, std::size_t exp) {
  if (exp == 0) return "";
  if (exp == 1) return base;
  return base + "^" + std::to_string(exp);
}

// Group on pairs (s, i) given by an arbitrary product rule; enumerates
// index = s * inner + i and labels with `label`.
template <class Mul, class Label>
FiniteGroup build_pair_group(std::size_t outer, std::size_t inner, Mul mul, Label label) {
  const std::size_t n = outer * inner;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = label(x / inner, x % inner);
    for (std::size_t y = 0; y < n; ++y) {
      auto [s, i] = mul(x / inner, x % inner, y / inner, y % inner);
      table[x][y] = s * inner + i;
    }
  }
  return FiniteGroup::from_cayley_table(std::move(table), std::move(labels));
}

std::size_t pow_mod(std::size_t base, std::size_t exp, std::size_t mod) {
  std::size_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(std::vector<std::vector<std::size_t>> table,
                                           std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty Cayley table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw NotAGroup("row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                      " entries, expected " + std::to_string(n));
    for (std::size_t v : table[r])
      if (v >= n) throw NotAGroup("entry " + std::to_string(v) + " out of range in row " + std::to_string(r));
  }
  if (!labels.empty() && labels.size() != n)
    throw NotAGroup("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) std::copy(table[r].begin(), table[r].end(), g.table_.begin() + r * n);

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
      throw NotAGroup("not associative: (" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                          std::to_string(c) + " != " + std::to_string(a) + "*(" + std::to_string(b) +
                          "*" + std::to_string(c) + ")",
                      std::array<std::size_t, 3>{a, b, c});
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed'0f'a55ULL ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < 10 * n * n; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.multiply(e, x) == x && g.multiply(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("no two-sided identity element");
  g.identity_ = *identity;

  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[g.multiply(r, c)]++) throw NotAGroup("row " + std::to_string(r) + " is not a permutation");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[g.multiply(r, c)]++) throw NotAGroup("column " + std::to_string(c) + " is not a permutation");
    }
  }

  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.multiply(a, b) == g.identity_) g.inverse_[a] = b;

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) labels[a] = a == g.identity_ ? "e" : "g" + std::to_string(a);
  }
  g.labels_ = std::move(labels);
  return g;
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidParameter("no element labelled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::size_t>> out(order_);
  for (std::size_t r = 0; r < order_; ++r)
    out[r].assign(table_.begin() + r * order_, table_.begin() + (r + 1) * order_);
  return out;
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw InvalidParameter("dihedral group needs n >= 3, got " + std::to_string(n));
  // b^s a^i * b^t a^j = b^{s+t} a^{(-1)^t i + j}
  auto mul = [n](std::size_t s, std::size_t i, std::size_t t, std::size_t j) {
    std::size_t rot = (t == 0 ? i : (n - i) % n);
    return std::pair{(s + t) % 2, (rot + j) % n};
  };
  auto label = [](std::size_t s, std::size_t i) {
    std::string out = (s ? "b" : "") + power_label("a", i);
    return out.empty() ? std::string("e") : out;
  };
  return build_pair_group(2, n, mul, label);
}

FiniteGroup generalized_quaternion(std::size_t n) {
  if (n < 2) throw InvalidParameter("generalized quaternion group needs n >= 2, got " + std::to_string(n));
  const std::size_t m = 2 * n;
  // b^s a^i * b^t a^j = b^{s+t} a^{(-1)^t i + j}, folding b^2 = a^n
  auto mul = [n, m](std::size_t s, std::size_t i, std::size_t t, std::size_t j) {
    std::size_t rot = (t == 0 ? i : (m - i) % m);
    std::size_t exp = (rot + j) % m;
    if (s + t == 2) return std::pair{std::size_t{0}, (exp + n) % m};
    return std::pair{s + t, exp};
  };
  auto label = [](std::size_t s, std::size_t i) {
    std::string out = (s ? "b" : "") + power_label("a", i);
    return out.empty() ? std::string("e") : out;
  };
  return build_pair_group(2, m, mul, label);
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t semidirect_twist(std::size_t p, std::size_t q) {
  for (std::size_t m = 2; m < p; ++m)
    if (pow_mod(m, q, p) == 1) return m;
  throw InvalidParameter("no m > 1 with m^" + std::to_string(q) + " = 1 mod " + std::to_string(p));
}

FiniteGroup semidirect_pq(std::size_t p, std::size_t q) {
  if (!is_prime(p) || !is_prime(q))
    throw InvalidParameter("semidirect product needs primes, got (" + std::to_string(p) + "," +
                           std::to_string(q) + ")");
  if (p == q || (p - 1) % q != 0)
    throw InvalidParameter(std::to_string(q) + " does not divide " + std::to_string(p) + "-1");
  const std::size_t m = semidirect_twist(p, q);
  std::vector<std::size_t> twist(q);  // twist[j] = m^j mod p
  for (std::size_t j = 0; j < q; ++j) twist[j] = pow_mod(m, j, p);
  // a^j b^k = b^{k m^j} a^j, so b^i a^j * b^k a^l = b^{i + k m^j} a^{j+l}.
  // Pairs are (j, i) so that index = j*p + i.
  auto mul = [p, q, twist](std::size_t j, std::size_t i, std::size_t l, std::size_t k) {
    return std::pair{(j + l) % q, (i + k * twist[j]) % p};
  };
  auto label = [](std::size_t j, std::size_t i) {
    std::string out = power_label("b", i) + power_label("a", j);
    return out.empty() ? std::string("e") : out;
  };
  return build_pair_group(q, p, mul, label);
}

FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw InvalidParameter("cyclic group needs n >= 1");
  auto mul = [n](std::size_t, std::size_t i, std::size_t, std::size_t j) {
    return std::pair{std::size_t{0}, (i + j) % n};
  };
  auto label = [](std::size_t, std::size_t i) { return i == 0 ? std::string("e") : power_label("a", i); };
  return build_pair_group(1, n, mul, label);
}

std::size_t element_order(const FiniteGroup& g, std::size_t x) {
  if (x >= g.order()) throw InvalidParameter("element index " + std::to_string(x) + " out of range");
  std::size_t t = 1;
  for (std::size_t y = x; y != g.identity(); y = g.multiply(y, x)) ++t;
  return t;
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) out[x] = element_order(g, x);
  return out;
}

Partition conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> assigned(n);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t y = g.conjugate(h, x);
      if (!assigned[y]) {
        assigned[y] = 1;
        orbit.push_back(y);
      }
    }
    blocks.push_back(std::move(orbit));
  }
  return Partition(n, std::move(blocks));
}

std::vector<std::size_t> center(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) central = g.commute(z, x);
    if (central) out.push_back(z);
  }
  return out;
}

bool is_abelian(const FiniteGroup& g) { return center(g).size() == g.order(); }

}  // namespace supergraph
