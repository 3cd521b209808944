#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "supergraph/matrix.hpp"

namespace supergraph {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial with arbitrary-precision integer coefficients,
// ascending by degree. Trailing zeros are stripped; the zero polynomial has
// no coefficients.
class PolynomialZ {
 public:
  PolynomialZ() = default;
  explicit PolynomialZ(std::vector<BigInt> coeffs);
  PolynomialZ(std::initializer_list<std::int64_t> coeffs);

  static PolynomialZ constant(BigInt c);
  static PolynomialZ x();
  // (x - root)^multiplicity
  static PolynomialZ linear_power(const BigInt& root, std::size_t multiplicity);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  BigInt evaluate(const BigInt& at) const;
  // p(num / 2^shift) * 2^(shift * degree), exact.
  BigInt evaluate_dyadic(const BigInt& num, unsigned shift) const;
  long double evaluate(long double at) const;

  PolynomialZ& operator+=(const PolynomialZ& o);
  PolynomialZ& operator-=(const PolynomialZ& o);
  PolynomialZ& operator*=(const PolynomialZ& o);
  friend PolynomialZ operator+(PolynomialZ a, const PolynomialZ& b) { return a += b; }
  friend PolynomialZ operator-(PolynomialZ a, const PolynomialZ& b) { return a -= b; }
  friend PolynomialZ operator*(PolynomialZ a, const PolynomialZ& b) { return a *= b; }
  friend PolynomialZ operator*(PolynomialZ a, const BigInt& c);
  PolynomialZ pow(std::size_t e) const;
  PolynomialZ derivative() const;

  bool operator==(const PolynomialZ& o) const { return coeffs_ == o.coeffs_; }

  // e.g. "x^3 - 3x^2 - 3x + 7"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Monic characteristic polynomial det(xI - M) computed exactly with the
// Faddeev-LeVerrier recursion: every division there is exact over Z.
PolynomialZ char_poly_integer(const IntMatrix& m);

}  // namespace supergraph
