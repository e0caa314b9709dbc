#include "polyflat/biquadratic.hpp"

namespace polyflat {

std::string_view to_string(GaloisClass g) {
  switch (g) {
    case GaloisClass::Reducible: return "Reducible";
    case GaloisClass::V4: return "V4";
    case GaloisClass::C4: return "C4";
    case GaloisClass::D4: return "D4";
  }
  return "?";
}

namespace {

// Factorization as (X^2 + uX + v)(X^2 - uX + v) with u != 0 forces
// v^2 = B and u^2 = 2v - A.
bool splits_into_conjugate_quadratics(const Rational& a, const Rational& b) {
  auto root = is_square_rational(b);
  if (!root) return false;
  for (const Rational& v : {*root, -*root}) {
    Rational u2 = Rational(2) * v - a;
    if (!u2.is_zero() && is_square_rational(u2)) return true;
  }
  return false;
}

}  // namespace

GaloisClass biquadratic_galois_class(const Rational& a, const Rational& b) {
  const Rational disc = a * a - Rational(4) * b;
  // Rational roots of Y^2 + AY + B give (X^2 - y1)(X^2 - y2); this also
  // covers every rational root of the quartic.
  if (is_square_rational(disc)) return GaloisClass::Reducible;
  if (splits_into_conjugate_quadratics(a, b)) return GaloisClass::Reducible;
  if (is_square_rational(b)) return GaloisClass::V4;
  if (is_square_rational(b * disc)) return GaloisClass::C4;
  return GaloisClass::D4;
}

Poly biquadratic(const Rational& a, const Rational& b) { return Poly{b, 0, a, 0, 1}; }

}  // namespace polyflat
