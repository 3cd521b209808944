#include "supergraph/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "supergraph/error.hpp"

namespace supergraph {

PolynomialZ::PolynomialZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolynomialZ::PolynomialZ(std::initializer_list<std::int64_t> coeffs) {
  for (auto c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void PolynomialZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolynomialZ PolynomialZ::constant(BigInt c) { return PolynomialZ(std::vector<BigInt>{std::move(c)}); }

PolynomialZ PolynomialZ::x() { return PolynomialZ{0, 1}; }

PolynomialZ PolynomialZ::linear_power(const BigInt& root, std::size_t multiplicity) {
  return PolynomialZ(std::vector<BigInt>{-root, BigInt(1)}).pow(multiplicity);
}

BigInt PolynomialZ::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

BigInt PolynomialZ::evaluate_dyadic(const BigInt& num, unsigned shift) const {
  // Horner on the homogenised form sum c_i num^i (2^shift)^(d-i).
  BigInt acc = 0;
  BigInt scale_power = 1;
  const BigInt scale = BigInt(1) << shift;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * scale_power;
    scale_power *= scale;
  }
  return acc;
}

long double PolynomialZ::evaluate(long double at) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->convert_to<long double>();
  return acc;
}

PolynomialZ& PolynomialZ::operator+=(const PolynomialZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolynomialZ& PolynomialZ::operator-=(const PolynomialZ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolynomialZ& PolynomialZ::operator*=(const PolynomialZ& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolynomialZ operator*(PolynomialZ a, const BigInt& c) {
  for (auto& v : a.coeffs_) v *= c;
  a.trim();
  return a;
}

PolynomialZ PolynomialZ::pow(std::size_t e) const {
  PolynomialZ result = constant(1);
  PolynomialZ base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

PolynomialZ PolynomialZ::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long long>(i));
  return PolynomialZ(std::move(out));
}

std::string PolynomialZ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

PolynomialZ char_poly_integer(const IntMatrix& m) {
  const std::size_t n = m.size();
  SquareMatrix<BigInt> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);

  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  SquareMatrix<BigInt> mk(n);
  SquareMatrix<BigInt> amk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      for (std::size_t i = 0; i < n; ++i) mk(i, i) = 1;
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mk(i, j) = amk(i, j);
      for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (a(i, l) != 0) s += a(i, l) * mk(l, j);
        }
        amk(i, j) = std::move(s);
      }
      trace += amk(i, i);
    }
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return PolynomialZ(std::move(c));
}

}  // namespace supergraph
