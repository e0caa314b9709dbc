#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "polyflat/cyclotomic.hpp"
#include "polyflat/poly.hpp"
#include "polyflat/rational.hpp"

/// High-precision evaluation used as a guard rail against the exact
/// routines. Nothing in the library decides anything from these values.
namespace polyflat::numeric {

using HighPrecision = boost::multiprecision::cpp_bin_float_100;

struct Complex {
  HighPrecision re;
  HighPrecision im;
};

HighPrecision to_high(const Rational& q);

HighPrecision pi();

HighPrecision evaluate(const Poly& f, const HighPrecision& at);

/// Value of u under x -> exp(2 pi i / index).
Complex evaluate(const CycloElt& u);

/// |a - b| for complex values.
HighPrecision distance(const Complex& a, const Complex& b);

}  // namespace polyflat::numeric
