#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "supergraph/polynomial.hpp"

namespace supergraph {

struct IntegerBracket {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// Sign of p at an integer point: -1, 0 or +1, exact.
int sign_at(const PolynomialZ& p, std::int64_t x);

// One root per bracket by exact dyadic bisection until the enclosing
// interval is narrower than `tol`. Throws NoSignChange for a bracket whose
// endpoint values share a strict sign.
std::vector<double> real_root_isolate(const PolynomialZ& p, const std::vector<IntegerBracket>& brackets,
                                      double tol = 1e-10);

// All distinct real roots of a nonzero polynomial, ascending, by Sturm
// sequence isolation followed by bisection to `tol`.
std::vector<double> real_roots(const PolynomialZ& p, double tol = 1e-12);

}  // namespace supergraph
