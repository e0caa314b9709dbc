#include "polyflat/flatness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polyflat/biquadratic.hpp"

namespace polyflat {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

nlohmann::json to_json(const FlatReport& r) {
  return {{"n", r.n},
          {"degree", r.degree},
          {"quotient_orders", r.quotient_orders},
          {"is_flat", r.is_flat},
          {"is_cyclic", r.is_cyclic}};
}

std::vector<unsigned> quotient_structure(const UnitSubgroup& h) {
  const unsigned m = h.modulus();
  std::vector<bool> covered(m, false);
  std::vector<unsigned> orders;
  for (unsigned a : unit_residues(m)) {
    if (covered[a]) continue;
    for (unsigned s : h.elements()) covered[(static_cast<unsigned long>(a) * s) % m] = true;
    unsigned order = 1;
    unsigned long power = a % m;
    while (!h.contains(static_cast<unsigned>(power))) {
      power = (power * a) % m;
      ++order;
    }
    orders.push_back(order);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

FlatReport is_flat_cot_field(unsigned n) {
  if (n < 3) throw std::invalid_argument("is_flat_cot_field needs n >= 3");
  const CycloElt cot = cot_pi_over(n);
  const UnitSubgroup h = stabilizer(cot);
  const unsigned m = h.modulus();

  FlatReport report;
  report.n = n;
  report.degree = euler_phi(m) / h.size();
  report.quotient_orders = quotient_structure(h);
  report.is_flat = true;
  for (unsigned a : unit_residues(m)) {
    if (!h.contains(static_cast<unsigned>((static_cast<unsigned long>(a) * a) % m))) {
      report.is_flat = false;
      break;
    }
  }
  report.is_cyclic = std::find(report.quotient_orders.begin(), report.quotient_orders.end(), report.degree) !=
                     report.quotient_orders.end();
  return report;
}

std::vector<FlatReport> classify_range(unsigned lo, unsigned hi, unsigned workers, const ProgressFn& progress) {
  if (lo < 3 || lo > hi) throw std::invalid_argument("classify_range needs 3 <= lo <= hi");
  return parallel_map(
      hi - lo + 1, workers, [lo](std::size_t i) { return is_flat_cot_field(lo + static_cast<unsigned>(i)); },
      progress);
}

Certificate lemma_quartic_check(long p, const Rational& a, const Rational& b, const Rational& c) {
  const nlohmann::json inputs = {{"p", p}, {"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
  const std::string claim = "lemma.quartic";
  if (p < 2 || !is_prime(static_cast<unsigned long>(p))) {
    return Certificate::failure(claim, inputs, "not_prime", "p = " + std::to_string(p) + " is not prime");
  }
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) {
    return Certificate::failure(claim, inputs, "nonpositive_input", "a, b, c must be positive");
  }
  const Rational pr(p);
  if (a * a != pr * (b * b + c * c)) {
    return Certificate::failure(claim, inputs, "hypothesis_failed", "a^2 != p(b^2 + c^2)");
  }
  // theta = sqrt(a + b sqrt p) has conjugates +-sqrt(a +- b sqrt p), so the
  // constant term is the product (a + b sqrt p)(a - b sqrt p) = a^2 - p b^2.
  const Rational coeff_a = Rational(-2) * a;
  const Rational coeff_b = a * a - pr * b * b;
  const GaloisClass cls = biquadratic_galois_class(coeff_a, coeff_b);
  const Rational witness = Rational(2) * pr * b * c;
  const Rational resolvent = coeff_b * (coeff_a * coeff_a - Rational(4) * coeff_b);
  const bool witness_ok = witness * witness == resolvent;

  Certificate cert;
  cert.claim = claim;
  cert.inputs = inputs;
  cert.verdict = (cls == GaloisClass::C4 && witness_ok) ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"quartic", to_json(biquadratic(coeff_a, coeff_b))},
                  {"A", to_json(coeff_a)},
                  {"B", to_json(coeff_b)},
                  {"galois_class", std::string(to_string(cls))},
                  {"resolvent_square", to_json(resolvent)},
                  {"square_witness", to_json(witness)},
                  {"square_witness_checked", witness_ok}};
  return cert;
}

// --- RatFunc ------------------------------------------------------------------

RatFunc::RatFunc(Poly numerator, Poly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  Poly g = gcd(num_, den_);
  num_ = divrem(num_, g).first;
  den_ = divrem(den_, g).first;
  const Rational lead = den_.leading().inverse();
  num_ *= lead;
  den_ *= lead;
}

namespace {
template <class T>
T horner(const Poly& f, const T& t, const T& zero) {
  T acc = zero;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= t;
    acc += T(zero) + *it;
  }
  return acc;
}

CycloElt horner_cyclo(const Poly& f, const CycloElt& t) {
  CycloElt acc = CycloElt::rational(t.index(), 0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc *= t;
    acc += CycloElt::rational(t.index(), *it);
  }
  return acc;
}
}  // namespace

std::optional<CycloElt> RatFunc::eval(const CycloElt& t) const {
  CycloElt d = horner_cyclo(den_, t);
  if (d.is_zero()) return std::nullopt;
  return horner_cyclo(num_, t) * d.inverse();
}

std::optional<Rational> RatFunc::eval(const Rational& t) const {
  Rational d = horner(den_, t, Rational(0));
  if (d.is_zero()) return std::nullopt;
  return horner(num_, t, Rational(0)) / d;
}

std::string RatFunc::str() const { return "(" + num_.str('t') + ")/(" + den_.str('t') + ")"; }

RatFunc cot_multiple_rf(unsigned k) {
  if (k < 1) throw std::invalid_argument("cot_multiple_rf needs k >= 1");
  const Poly t = Poly::x();
  RatFunc c(t, Poly::constant(1));
  for (unsigned m = 1; m < k; ++m) {
    // (P/Q * t - 1) / (P/Q + t) = (P t - Q) / (P + t Q)
    const Poly& p = c.numerator();
    const Poly& q = c.denominator();
    c = RatFunc(p * t - q, p + t * q);
  }
  return c;
}

Certificate verify_prop1(unsigned n, unsigned d) {
  const nlohmann::json inputs = {{"n", n}, {"d", d}};
  const std::string claim = "prop1.subfields";
  if (n < 3 || d < 2) return Certificate::failure(claim, inputs, "bad_argument", "need n >= 3 and d >= 2");
  if (n % d != 0) {
    return Certificate::failure(claim, inputs, "not_divisor", std::to_string(d) + " does not divide " + std::to_string(n));
  }
  const unsigned k = n / d;
  const unsigned index = 4 * n;
  const CycloElt cot_n = cot_pi_over(n);
  const RatFunc ck = cot_multiple_rf(k);
  const auto value = ck.eval(cot_n);
  if (!value) {
    return Certificate::failure(claim, inputs, "pole", "C_" + std::to_string(k) + " has a pole at cot(pi/n)");
  }
  const CycloElt cot_d = lift(cot_pi_over(d), index);
  const bool recurrence_ok = *value == cot_d;
  const bool cot_member = field_membership(cot_d, cot_n);

  const CycloElt one = CycloElt::rational(index, 1);
  const CycloElt t2 = cot_d * cot_d;
  const CycloElt cos_from_cot = (t2 - one) * (t2 + one).inverse();
  const CycloElt cos_d = lift(cos_2pi_over(d, 1), index);
  const bool cos_identity_ok = cos_from_cot == cos_d;
  const bool cos_member = field_membership(cos_d, cot_n);

  Certificate cert;
  cert.claim = claim;
  cert.inputs = inputs;
  cert.verdict = (recurrence_ok && cot_member && cos_identity_ok && cos_member) ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"k", k},
                  {"cot_multiple", ck.str()},
                  {"cot_recurrence_matches", recurrence_ok},
                  {"cot_d_in_field", cot_member},
                  {"cos_identity_matches", cos_identity_ok},
                  {"cos_d_in_field", cos_member},
                  {"cot_d", to_json(cot_d)}};
  return cert;
}

Certificate prop3_check(unsigned n) {
  const nlohmann::json inputs = {{"n", n}};
  const std::string claim = "prop3.cyclic_quartic";
  long p = 0;
  Rational a, b, c;
  CycloElt theta = CycloElt::rational(1, 0);
  CycloElt sqrt_p = CycloElt::rational(1, 0);
  const CycloElt cot = (n == 5 || n == 16) ? cot_pi_over(n) : CycloElt::rational(1, 0);
  if (n == 5) {
    // 5 cot(pi/5) = sqrt(25 + 10 sqrt 5), sqrt 5 = 1 + 4 cos(2pi/5)
    p = 5, a = 25, b = 10, c = 5;
    sqrt_p = lift(cos_2pi_over(5, 1) * Rational(4) + CycloElt::rational(5, 1), cot.index());
    theta = cot * Rational(5);
  } else if (n == 16) {
    // cot(pi/16) = 1 + sqrt 2 + sqrt(4 + 2 sqrt 2), sqrt 2 = 2 cos(2pi/8)
    p = 2, a = 4, b = 2, c = 2;
    sqrt_p = lift(cos_2pi_over(8, 1) * Rational(2), cot.index());
    theta = cot - CycloElt::rational(cot.index(), 1) - sqrt_p;
  } else {
    return Certificate::failure(claim, inputs, "unsupported_n", "prop3 covers n = 5 and n = 16 only");
  }
  const CycloElt radicand = CycloElt::rational(cot.index(), a) + sqrt_p * b;
  const bool square_ok = theta * theta == radicand;
  const bool sqrt_ok = sqrt_p * sqrt_p == CycloElt::rational(cot.index(), p);
  const Poly theta_poly = min_poly(theta);
  const Poly expected = biquadratic(Rational(-2) * a, a * a - Rational(p) * b * b);
  const bool same_field = field_membership(theta, cot) && field_membership(cot, theta);
  const FlatReport report = is_flat_cot_field(n);
  const Certificate lemma = lemma_quartic_check(p, a, b, c);

  const bool ok = square_ok && sqrt_ok && theta_poly == expected && same_field && report.degree == 4 &&
                  report.is_cyclic && lemma.verdict == Verdict::verified;
  Certificate cert;
  cert.claim = claim;
  cert.inputs = inputs;
  cert.verdict = ok ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"theta", to_json(theta)},
                  {"theta_squared_matches", square_ok},
                  {"theta_min_poly", to_json(theta_poly)},
                  {"cot_min_poly", to_json(min_poly(cot))},
                  {"same_field", same_field},
                  {"field", to_json(report)},
                  {"lemma", to_json(lemma)}};
  return cert;
}

Certificate prop4_check(unsigned q) {
  const nlohmann::json inputs = {{"q", q}};
  const std::string claim = "prop4.cos_cyclic";
  if (!(q == 9 || (q >= 7 && is_prime(q)))) {
    return Certificate::failure(claim, inputs, "unsupported_q", "q must be 9 or a prime >= 7");
  }
  const CycloElt cos_q = cos_2pi_over(q, 1);
  const UnitSubgroup h = stabilizer(cos_q);
  const std::size_t degree = euler_phi(q) / h.size();
  const std::size_t expected = q == 9 ? 3 : (q - 1) / 2;
  const std::vector<unsigned> orders = quotient_structure(h);
  const bool cyclic = std::find(orders.begin(), orders.end(), degree) != orders.end();

  Certificate cert;
  cert.claim = claim;
  cert.inputs = inputs;
  cert.verdict = (degree == expected && cyclic) ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"degree", degree},
                  {"expected_degree", expected},
                  {"quotient_orders", orders},
                  {"is_cyclic", cyclic},
                  {"min_poly", to_json(min_poly(cos_q))}};
  return cert;
}

DegreeCheck remark_degree_check(unsigned n) {
  if (n < 3) throw std::invalid_argument("remark_degree_check needs n >= 3");
  const std::size_t degree = algebraic_degree(cot_pi_over(n));
  return {degree, (degree & (degree - 1)) == 0};
}

}  // namespace polyflat
