#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "supergraph/polynomial.hpp"

namespace supergraph {

// (r + sign * sqrt(d)) / 2
struct Surd {
  std::int64_t r = 0;
  std::int64_t d = 0;
  int sign = 1;

  double to_double() const;
  bool operator==(const Surd&) const = default;
};

using EigenValue = std::variant<double, std::int64_t, Surd>;

double numeric(const EigenValue& v);
std::string to_string(const EigenValue& v);

struct SpectrumEntry {
  EigenValue value;
  std::size_t multiplicity = 0;

  double numeric() const { return supergraph::numeric(value); }
};

// Multiset of eigenvalues as (value, multiplicity), strictly increasing.
class Spectrum {
 public:
  Spectrum() = default;
  // Sorts, then merges entries whose values agree within `merge_tol`
  // (exact entries are kept in preference to floating ones). Zero
  // multiplicities are dropped.
  explicit Spectrum(std::vector<SpectrumEntry> entries, double merge_tol = 1e-12);

  // Groups sorted floating values: consecutive values within `tol` share an
  // entry whose value is their mean.
  static Spectrum group(std::vector<double> values, double tol);
  static Spectrum integers(const std::vector<std::pair<std::int64_t, std::size_t>>& values);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t dimension() const;
  // All eigenvalues, ascending, repeated by multiplicity.
  std::vector<double> expanded() const;
  bool all_integer() const;
  // prod (x - value)^multiplicity; throws InvalidParameter unless all_integer().
  PolynomialZ integer_char_poly() const;
  // "0, 1, 3, 4 (x2), 6"
  std::string to_string() const;

  bool operator==(const Spectrum& other) const;

 private:
  std::vector<SpectrumEntry> entries_;
};

// Pairs the two multisets in sorted order and accepts iff every pair is
// within `tol`. Throws SizeMismatch when dimensions differ.
bool multiset_match(const Spectrum& a, const Spectrum& b, double tol);

// Replaces numeric entries within `tol` of an integer by that integer.
Spectrum snap_to_integers(const Spectrum& spectrum, double tol);

}  // namespace supergraph
