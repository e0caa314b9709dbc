#include "polyflat/numeric.hpp"

#include <boost/math/constants/constants.hpp>

namespace polyflat::numeric {

HighPrecision to_high(const Rational& q) {
  return HighPrecision(q.num().get_str()) / HighPrecision(q.den().get_str());
}

HighPrecision pi() { return boost::math::constants::pi<HighPrecision>(); }

HighPrecision evaluate(const Poly& f, const HighPrecision& at) {
  HighPrecision acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * at + to_high(*it);
  return acc;
}

Complex evaluate(const CycloElt& u) {
  const HighPrecision theta = 2 * pi() / u.index();
  const HighPrecision c = cos(theta);
  const HighPrecision s = sin(theta);
  Complex acc{0, 0};
  // Horner in the complex plane: acc = acc * zeta + coeff.
  const auto& coeffs = u.rep().coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    HighPrecision re = acc.re * c - acc.im * s + to_high(*it);
    HighPrecision im = acc.re * s + acc.im * c;
    acc = {re, im};
  }
  return acc;
}

HighPrecision distance(const Complex& a, const Complex& b) {
  HighPrecision dr = a.re - b.re;
  HighPrecision di = a.im - b.im;
  return sqrt(dr * dr + di * di);
}

}  // namespace polyflat::numeric
