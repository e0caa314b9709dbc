#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyflat/certificate.hpp"
#include "polyflat/cyclotomic.hpp"
#include "polyflat/parallel.hpp"
#include "polyflat/poly.hpp"

/// Flatness of Q(cot(pi/n)) and the supporting field-theoretic checks.
///
/// A real field is flat when every subfield has a Galois group in which each
/// element has order 1 or 2. Q(cot(pi/n)) sits inside the abelian field
/// Q(zeta_4n), so all of its subfields are Galois and its Galois group is
/// the quotient (Z/4n)^* / H with H the stabilizer of cot(pi/n). Every
/// quotient of a group of exponent 2 again has exponent 2, so the field is
/// flat exactly when a^2 lies in H for every unit a.
namespace polyflat {

struct FlatReport {
  unsigned n = 0;
  std::size_t degree = 0;
  /// One entry per coset of (Z/4n)^* / H, ascending.
  std::vector<unsigned> quotient_orders;
  bool is_flat = false;
  bool is_cyclic = false;

  friend bool operator==(const FlatReport&, const FlatReport&) = default;
};

nlohmann::json to_json(const FlatReport& r);

/// Orders of the cosets aH in (Z/m)^* / H, ascending.
std::vector<unsigned> quotient_structure(const UnitSubgroup& h);

/// Throws std::invalid_argument for n < 3.
FlatReport is_flat_cot_field(unsigned n);

/// Reports for every n in [lo, hi], sorted by n. Throws unless 3 <= lo <= hi.
std::vector<FlatReport> classify_range(unsigned lo, unsigned hi, unsigned workers = 0,
                                       const ProgressFn& progress = {});

/// Checks a^2 = p(b^2 + c^2) and that X^4 - 2aX^2 + (a^2 - p b^2) has cyclic
/// Galois group C4, recording 2pbc as the square root of B(A^2 - 4B).
Certificate lemma_quartic_check(long p, const Rational& a, const Rational& b, const Rational& c);

/// P(t)/Q(t) with gcd(P, Q) = 1 and Q monic.
class RatFunc {
 public:
  RatFunc(Poly numerator, Poly denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  /// Value at `t`, or nullopt when the denominator vanishes there.
  std::optional<CycloElt> eval(const CycloElt& t) const;
  std::optional<Rational> eval(const Rational& t) const;

  std::string str() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  Poly num_;
  Poly den_;
};

/// C_k with cot(kx) = C_k(cot x), from C_1 = t and
/// C_{m+1} = (C_m t - 1) / (C_m + t).
RatFunc cot_multiple_rf(unsigned k);

/// C_{n/d}(cot(pi/n)) == cot(pi/d), plus membership of cot(pi/d) and
/// cos(2pi/d) = (t^2 - 1)/(t^2 + 1) in Q(cot(pi/n)).
Certificate verify_prop1(unsigned n, unsigned d);

/// Q(cot(pi/n)) for n in {5, 16}: degree 4, cyclic, and the quartic-lemma data.
Certificate prop3_check(unsigned n);

/// Degree and cyclicity of Q(cos(2pi/q)) for q = 9 or a prime q >= 7.
Certificate prop4_check(unsigned q);

struct DegreeCheck {
  std::size_t degree = 0;
  bool power_of_two = false;
};

DegreeCheck remark_degree_check(unsigned n);

bool is_prime(unsigned long p);

}  // namespace polyflat
