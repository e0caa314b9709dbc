#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyflat/rational.hpp"

namespace polyflat {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
///
/// Trailing zero coefficients are never stored; the zero polynomial has an
/// empty coefficient vector and no degree.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  static Poly x() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i; zero past the degree.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_monic() const { return !is_zero() && leading() == Rational(1); }
  Poly monic() const;

  Rational eval(const Rational& at) const;
  Poly derivative() const;
  /// f(x) -> f(x^k).
  Poly inflate(std::size_t k) const;

  std::string str(char var = 'x') const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

/// Returns (q, r) with f = q*g + r and deg r < deg g. Throws std::domain_error for g = 0.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);

/// Monic gcd. Throws std::domain_error when both inputs are zero.
Poly gcd(const Poly& f, const Poly& g);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*f + t*g = gcd
};

ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

}  // namespace polyflat
