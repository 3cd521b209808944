#include "supergraph/roots.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "supergraph/error.hpp"

namespace supergraph {

using Rational = boost::multiprecision::cpp_rational;

int sign_at(const PolynomialZ& p, std::int64_t x) {
  const BigInt v = p.evaluate(BigInt(x));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

namespace {

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

double dyadic_to_double(const BigInt& num, unsigned shift) {
  return std::ldexp(num.convert_to<double>(), -static_cast<int>(shift));
}

}  // namespace

std::vector<double> real_root_isolate(const PolynomialZ& p, const std::vector<IntegerBracket>& brackets,
                                      double tol) {
  std::vector<double> out;
  for (const auto& b : brackets) {
    const int slo = sign_at(p, b.lo);
    const int shi = sign_at(p, b.hi);
    if (slo == 0) {
      out.push_back(static_cast<double>(b.lo));
      continue;
    }
    if (shi == 0) {
      out.push_back(static_cast<double>(b.hi));
      continue;
    }
    if (slo == shi)
      throw NoSignChange("no sign change on [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]", b.lo, b.hi);
    // Interval [lo, hi] / 2^shift with integer lo, hi.
    BigInt lo = b.lo;
    BigInt hi = b.hi;
    unsigned shift = 0;
    bool exact = false;
    while (std::ldexp((hi - lo).convert_to<double>(), -static_cast<int>(shift)) >= tol) {
      lo <<= 1;
      hi <<= 1;
      ++shift;
      const BigInt mid = (lo + hi) / 2;
      const int sm = sign_of(p.evaluate_dyadic(mid, shift));
      if (sm == 0) {
        lo = hi = mid;
        exact = true;
        break;
      }
      if (sm == slo)
        lo = mid;
      else
        hi = mid;
    }
    out.push_back(exact ? dyadic_to_double(lo, shift) : dyadic_to_double(lo + hi, shift + 1));
  }
  return out;
}

namespace {

using RatPoly = std::vector<Rational>;  // ascending

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b over Q.
std::pair<RatPoly, RatPoly> divide(RatPoly a, const RatPoly& b) {
  RatPoly quotient(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    quotient[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quotient);
  return {quotient, a};
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int rsign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::size_t variations(const std::vector<RatPoly>& chain, const Rational& x) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = rsign(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<double> real_roots(const PolynomialZ& p, double tol) {
  if (p.is_zero()) throw InvalidParameter("the zero polynomial has no isolated roots");
  if (p.degree() == 0) return {};

  RatPoly f;
  for (const auto& c : p.coeffs()) f.emplace_back(c);
  auto sturm_chain = [](const RatPoly& g) {
    RatPoly dg;
    for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * static_cast<long long>(i));
    std::vector<RatPoly> chain{g, dg};
    while (chain.back().size() > 1) {
      RatPoly r = remainder(chain[chain.size() - 2], chain.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      chain.push_back(std::move(r));
    }
    return chain;
  };
  std::vector<RatPoly> chain = sturm_chain(f);
  if (chain.back().size() > 1) {
    // Repeated roots: continue with the squarefree part f / gcd(f, f').
    f = divide(f, chain.back()).first;
    chain = sturm_chain(f);
  }

  // Cauchy bound on root magnitudes.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    Rational q = f[i] / f.back();
    if (q < 0) q = -q;
    if (q > bound) bound = q;
  }
  bound += 1;

  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const std::size_t count = variations(chain, a) - variations(chain, b);  // roots in (a, b]
    if (count == 0) continue;
    if (count == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    const Rational mid = (a + b) / 2;
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }

  std::vector<double> out;
  for (auto [a, b] : isolated) {
    if (eval(f, b) == 0) {
      out.push_back(b.convert_to<double>());
      continue;
    }
    // Exactly one root in the open interval now; bisect on sign.
    const int sb = rsign(eval(f, b));
    while ((b - a).convert_to<double>() >= tol) {
      const Rational mid = (a + b) / 2;
      const int sm = rsign(eval(f, mid));
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sb)
        b = mid;
      else
        a = mid;
    }
    out.push_back(((a + b) / 2).convert_to<double>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace supergraph
