#pragma once

#include <string_view>

#include "polyflat/poly.hpp"
#include "polyflat/rational.hpp"

namespace polyflat {

/// Galois group of X^4 + A X^2 + B over Q, or Reducible when it factors.
enum class GaloisClass { Reducible, V4, C4, D4 };

std::string_view to_string(GaloisClass g);

/// Classifies X^4 + A X^2 + B.
///
/// Reducible when X^4 + AX^2 + B splits as a product of rational quadratics
/// (A^2 - 4B a square, or B = v^2 with 2v - A a square). Otherwise the
/// irreducible case is decided by square tests: V4 if B is a square, C4 if
/// B(A^2 - 4B) is, D4 otherwise.
GaloisClass biquadratic_galois_class(const Rational& a, const Rational& b);

/// X^4 + A X^2 + B as a polynomial.
Poly biquadratic(const Rational& a, const Rational& b);

}  // namespace polyflat
