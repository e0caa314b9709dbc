#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "polyflat/poly.hpp"
#include "polyflat/rational.hpp"

namespace polyflat {

unsigned long euler_phi(unsigned long m);
unsigned long gcd_u(unsigned long a, unsigned long b);
unsigned long lcm_u(unsigned long a, unsigned long b);

/// The m-th cyclotomic polynomial, by dividing x^m - 1 by Phi_d for every
/// proper divisor d of m.
Poly cyclotomic_poly(unsigned m);

class CyclotomicField;

/// Element of Q(zeta_m) = Q[x]/Phi_m(x), stored as its residue of degree < phi(m).
///
/// The class of x embeds as zeta_m = exp(2 pi i / m). Arithmetic requires
/// equal indices; equality lifts both operands to the lcm of their indices.
class CycloElt {
 public:
  /// Reduces `rep` modulo Phi_index.
  CycloElt(unsigned index, const Poly& rep);

  static CycloElt rational(unsigned index, const Rational& value);
  /// zeta_index^power; negative powers allowed.
  static CycloElt root_power(unsigned index, long power);

  unsigned index() const { return index_; }
  const Poly& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  std::optional<Rational> as_rational() const;

  CycloElt inverse() const;

  CycloElt& operator+=(const CycloElt& rhs);
  CycloElt& operator-=(const CycloElt& rhs);
  CycloElt& operator*=(const CycloElt& rhs);
  CycloElt& operator*=(const Rational& rhs);

  friend CycloElt operator+(CycloElt lhs, const CycloElt& rhs) { return lhs += rhs; }
  friend CycloElt operator-(CycloElt lhs, const CycloElt& rhs) { return lhs -= rhs; }
  friend CycloElt operator*(CycloElt lhs, const CycloElt& rhs) { return lhs *= rhs; }
  friend CycloElt operator*(CycloElt lhs, const Rational& rhs) { return lhs *= rhs; }
  friend CycloElt operator*(const Rational& lhs, CycloElt rhs) { return rhs *= lhs; }
  friend CycloElt operator/(const CycloElt& lhs, const CycloElt& rhs) { return lhs * rhs.inverse(); }
  CycloElt operator-() const;

  friend bool operator==(const CycloElt& lhs, const CycloElt& rhs);

 private:
  struct Reduced {};
  CycloElt(unsigned index, Poly rep, Reduced);
  friend class CyclotomicField;

  unsigned index_ = 1;
  Poly rep_;
};

std::ostream& operator<<(std::ostream& os, const CycloElt& u);

/// Subgroup of (Z/m)^*, elements kept sorted.
class UnitSubgroup {
 public:
  /// Throws std::invalid_argument unless `elements` is a subgroup of (Z/m)^*.
  UnitSubgroup(unsigned modulus, std::vector<unsigned> elements);

  static UnitSubgroup full(unsigned modulus);

  unsigned modulus() const { return modulus_; }
  const std::vector<unsigned>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(unsigned a) const;
  bool is_subset_of(const UnitSubgroup& other) const;

  friend bool operator==(const UnitSubgroup&, const UnitSubgroup&) = default;

 private:
  unsigned modulus_;
  std::vector<unsigned> elements_;
};

/// Residues in [1, m) coprime to m, ascending (for m = 1 the single class 0).
std::vector<unsigned> unit_residues(unsigned m);

/// Embeds u into Q(zeta_M) via x -> x^(M/m). Throws unless index(u) divides M.
CycloElt lift(const CycloElt& u, unsigned target_index);

/// The automorphism zeta -> zeta^a. Throws unless gcd(a, m) = 1.
CycloElt galois_apply(unsigned a, const CycloElt& u);

/// True iff galois_apply(a, u) == u, stopping at the first differing coefficient.
bool galois_fixes(unsigned a, const CycloElt& u);

/// cot(pi/n) in index 4n, as w^n (w^4 + 1) / (w^4 - 1) with w = zeta_{4n}.
CycloElt cot_pi_over(unsigned n);

/// cos(2 pi k / m) = (zeta_m^k + zeta_m^-k) / 2 in index m.
CycloElt cos_2pi_over(unsigned m, long k);

/// sin(2 pi k / m) = (zeta_m^k - zeta_m^-k) / 2i in index lcm(m, 4).
CycloElt sin_2pi_over(unsigned m, long k);

UnitSubgroup stabilizer(const CycloElt& u);

/// Degree of Q(u) over Q: phi(m) / |stabilizer(u)|.
std::size_t algebraic_degree(const CycloElt& u);

/// Product of (X - sigma_a(u)) over coset representatives a of the stabilizer.
/// Throws std::logic_error if a coefficient fails to be rational.
Poly min_poly(const CycloElt& u);

/// Whether u lies in Q(v): stabilizer(v) must fix u.
bool field_membership(const CycloElt& u, const CycloElt& v);

/// Lifts both operands to the lcm of their indices.
std::pair<CycloElt, CycloElt> common_index(const CycloElt& u, const CycloElt& v);

}  // namespace polyflat
