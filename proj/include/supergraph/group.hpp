#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace supergraph {

class Partition;

// Element index into a FiniteGroup's canonical enumeration.
struct ElementId {
  std::size_t index = 0;
  friend bool operator==(ElementId, ElementId) = default;
};

// Finite group backed by a full Cayley table. Immutable once built; every
// constructor path goes through the same validation.
class FiniteGroup {
 public:
  // Validates associativity, identity and the Latin-square property.
  // Associativity is checked exhaustively up to order 256 and on
  // 10 * order^2 seeded random triples above that.
  static FiniteGroup from_cayley_table(std::vector<std::vector<std::size_t>> table,
                                       std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t conjugate(std::size_t g, std::size_t x) const {
    return multiply(multiply(g, x), inverse(g));
  }
  bool commute(std::size_t a, std::size_t b) const { return multiply(a, b) == multiply(b, a); }

  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;

  // Row-major copy of the table, order() rows of order() entries.
  std::vector<std::vector<std::size_t>> table() const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

// Named families. Enumerations:
//   dihedral(n):               e, a, ..., a^{n-1}, b, ba, ..., ba^{n-1}
//   generalized_quaternion(n): e, a, ..., a^{2n-1}, b, ba, ..., ba^{2n-1}
//   semidirect_pq(p, q):       b^i a^j at index j*p + i
FiniteGroup dihedral(std::size_t n);
FiniteGroup generalized_quaternion(std::size_t n);
FiniteGroup semidirect_pq(std::size_t p, std::size_t q);
FiniteGroup cyclic(std::size_t n);

// Smallest m > 1 with m^q = 1 (mod p); throws InvalidParameter if none.
std::size_t semidirect_twist(std::size_t p, std::size_t q);
bool is_prime(std::size_t n);

std::size_t element_order(const FiniteGroup& g, std::size_t x);
std::vector<std::size_t> element_orders(const FiniteGroup& g);
Partition conjugacy_classes(const FiniteGroup& g);
std::vector<std::size_t> center(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

}  // namespace supergraph
