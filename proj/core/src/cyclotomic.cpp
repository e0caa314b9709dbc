#include "polyflat/cyclotomic.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polyflat {

unsigned long gcd_u(unsigned long a, unsigned long b) { return std::gcd(a, b); }

unsigned long lcm_u(unsigned long a, unsigned long b) { return std::lcm(a, b); }

unsigned long euler_phi(unsigned long m) {
  if (m == 0) throw std::invalid_argument("euler_phi(0)");
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::mutex g_phi_mutex;
std::map<unsigned, Poly> g_phi_cache;

// Coefficient vector over a common denominator.
struct IntRep {
  std::vector<BigInt> num;
  BigInt den{1};
};

IntRep to_int_rep(const Poly& p, std::size_t length) {
  IntRep out;
  out.num.assign(length, BigInt(0));
  for (const auto& c : p.coeffs()) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.den().get_mpz_t());
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeff(i);
    if (c.is_zero()) continue;
    out.num[i] = c.num() * (out.den / c.den());
  }
  return out;
}

unsigned mod_exponent(long power, unsigned m) {
  long r = power % static_cast<long>(m);
  if (r < 0) r += m;
  return static_cast<unsigned>(r);
}

}  // namespace

Poly cyclotomic_poly(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic_poly(0)");
  {
    std::lock_guard lock(g_phi_mutex);
    if (auto it = g_phi_cache.find(m); it != g_phi_cache.end()) return it->second;
  }
  Poly result;
  if (m == 1) {
    result = Poly{-1, 1};
  } else {
    result = Poly::monomial(1, m) - Poly::constant(1);
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto [q, r] = divrem(result, cyclotomic_poly(d));
      if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
      result = std::move(q);
    }
  }
  std::lock_guard lock(g_phi_mutex);
  g_phi_cache.emplace(m, result);
  return result;
}

/// Per-index reduction data: tail_[j - phi] holds x^j mod Phi_m for phi <= j < m.
/// Phi_m divides x^m - 1, so every exponent can first be taken mod m.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned m);

  static std::shared_ptr<const CyclotomicField> get(unsigned m);

  unsigned m() const { return m_; }
  unsigned phi() const { return phi_; }
  const Poly& modulus() const { return modulus_; }

  /// Coefficient i of x^j mod Phi_m, for j < m.
  const BigInt& power_coeff(unsigned j, unsigned i) const { return tail_[j - phi_][i]; }

  /// Folds a length-m buffer of integer coefficients (exponents mod m) into
  /// the residue basis and divides by `den`.
  CycloElt fold(const std::vector<BigInt>& cyclic, const BigInt& den) const;

  CycloElt reduce(const Poly& p) const;

 private:
  unsigned m_;
  unsigned phi_;
  Poly modulus_;
  std::vector<std::vector<BigInt>> tail_;
};

CyclotomicField::CyclotomicField(unsigned m)
    : m_(m), phi_(static_cast<unsigned>(euler_phi(m))), modulus_(cyclotomic_poly(m)) {
  std::vector<BigInt> low(phi_);
  for (unsigned i = 0; i < phi_; ++i) low[i] = modulus_.coeff(i).num();
  tail_.reserve(m_ - phi_);
  if (m_ == phi_) return;
  std::vector<BigInt> row(phi_);
  for (unsigned i = 0; i < phi_; ++i) row[i] = -low[i];
  tail_.push_back(row);
  for (unsigned j = phi_ + 1; j < m_; ++j) {
    const BigInt top = row[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    if (top != 0) {
      for (unsigned i = 0; i < phi_; ++i) row[i] -= top * low[i];
    }
    tail_.push_back(row);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned m) {
  static std::mutex mutex;
  static std::list<std::shared_ptr<const CyclotomicField>> recent;
  constexpr std::size_t kCapacity = 32;
  {
    std::lock_guard lock(mutex);
    for (auto it = recent.begin(); it != recent.end(); ++it) {
      if ((*it)->m() == m) {
        auto hit = *it;
        recent.erase(it);
        recent.push_front(hit);
        return hit;
      }
    }
  }
  auto built = std::make_shared<const CyclotomicField>(m);
  std::lock_guard lock(mutex);
  recent.push_front(built);
  if (recent.size() > kCapacity) recent.pop_back();
  return built;
}

CycloElt CyclotomicField::fold(const std::vector<BigInt>& cyclic, const BigInt& den) const {
  std::vector<BigInt> acc(cyclic.begin(), cyclic.begin() + phi_);
  for (unsigned j = phi_; j < m_; ++j) {
    if (cyclic[j] == 0) continue;
    const auto& row = tail_[j - phi_];
    for (unsigned i = 0; i < phi_; ++i) {
      if (row[i] != 0) acc[i] += cyclic[j] * row[i];
    }
  }
  std::vector<Rational> coeffs(phi_);
  for (unsigned i = 0; i < phi_; ++i) {
    if (acc[i] != 0) coeffs[i] = Rational(acc[i], den);
  }
  return CycloElt(m_, Poly(std::move(coeffs)), CycloElt::Reduced{});
}

CycloElt CyclotomicField::reduce(const Poly& p) const {
  IntRep rep = to_int_rep(p, p.size());
  std::vector<BigInt> cyclic(m_);
  for (std::size_t k = 0; k < rep.num.size(); ++k) cyclic[k % m_] += rep.num[k];
  return fold(cyclic, rep.den);
}

// --- CycloElt ---------------------------------------------------------------

CycloElt::CycloElt(unsigned index, Poly rep, Reduced) : index_(index), rep_(std::move(rep)) {}

CycloElt::CycloElt(unsigned index, const Poly& rep) : index_(index) {
  if (index == 0) throw std::invalid_argument("cyclotomic index must be positive");
  if (rep.size() <= euler_phi(index)) {
    rep_ = rep;
  } else {
    rep_ = CyclotomicField::get(index)->reduce(rep).rep_;
  }
}

CycloElt CycloElt::rational(unsigned index, const Rational& value) {
  return CycloElt(index, Poly::constant(value));
}

CycloElt CycloElt::root_power(unsigned index, long power) {
  if (index == 0) throw std::invalid_argument("cyclotomic index must be positive");
  return CycloElt(index, Poly::monomial(1, mod_exponent(power, index)));
}

std::optional<Rational> CycloElt::as_rational() const {
  if (rep_.size() > 1) return std::nullopt;
  return rep_.coeff(0);
}

CycloElt CycloElt::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  auto field = CyclotomicField::get(index_);
  ExtendedGcd eg = extended_gcd(rep_, field->modulus());
  if (eg.gcd != Poly::constant(1)) throw std::logic_error("cyclotomic modulus is not coprime to element");
  return CycloElt(index_, eg.s);
}

namespace {
void require_same_index(const CycloElt& a, const CycloElt& b) {
  if (a.index() != b.index()) {
    throw std::invalid_argument("cyclotomic index mismatch: " + std::to_string(a.index()) + " vs " +
                                std::to_string(b.index()));
  }
}
}  // namespace

CycloElt& CycloElt::operator+=(const CycloElt& rhs) {
  require_same_index(*this, rhs);
  rep_ += rhs.rep_;
  return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& rhs) {
  require_same_index(*this, rhs);
  rep_ -= rhs.rep_;
  return *this;
}

CycloElt& CycloElt::operator*=(const CycloElt& rhs) {
  require_same_index(*this, rhs);
  if (is_zero() || rhs.is_zero()) {
    rep_ = Poly{};
    return *this;
  }
  if (auto q = rhs.as_rational()) return *this *= *q;
  if (auto q = as_rational()) {
    Rational s = *q;
    *this = rhs;
    return *this *= s;
  }
  auto field = CyclotomicField::get(index_);
  const unsigned m = field->m();
  IntRep a = to_int_rep(rep_, rep_.size());
  IntRep b = to_int_rep(rhs.rep_, rhs.rep_.size());
  std::vector<BigInt> cyclic(m);
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    if (a.num[i] == 0) continue;
    for (std::size_t j = 0; j < b.num.size(); ++j) {
      if (b.num[j] == 0) continue;
      mpz_addmul(cyclic[(i + j) % m].get_mpz_t(), a.num[i].get_mpz_t(), b.num[j].get_mpz_t());
    }
  }
  *this = field->fold(cyclic, a.den * b.den);
  return *this;
}

CycloElt& CycloElt::operator*=(const Rational& rhs) {
  rep_ *= rhs;
  return *this;
}

CycloElt CycloElt::operator-() const { return CycloElt(index_, -rep_, Reduced{}); }

bool operator==(const CycloElt& lhs, const CycloElt& rhs) {
  if (lhs.index_ == rhs.index_) return lhs.rep_ == rhs.rep_;
  auto [a, b] = common_index(lhs, rhs);
  return a.rep_ == b.rep_;
}

std::ostream& operator<<(std::ostream& os, const CycloElt& u) {
  return os << '[' << u.rep().str('z') << " mod Phi_" << u.index() << ']';
}

// --- UnitSubgroup -----------------------------------------------------------

std::vector<unsigned> unit_residues(unsigned m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  if (m == 1) return {0};
  std::vector<unsigned> out;
  for (unsigned a = 1; a < m; ++a) {
    if (std::gcd(a, m) == 1) out.push_back(a);
  }
  return out;
}

UnitSubgroup::UnitSubgroup(unsigned modulus, std::vector<unsigned> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  for (auto& a : elements_) a %= modulus;
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const unsigned one = 1 % modulus;
  if (!contains(one)) throw std::invalid_argument("subgroup must contain 1");
  for (unsigned a : elements_) {
    if (std::gcd(a, modulus) != 1 && modulus != 1) throw std::invalid_argument("subgroup element not a unit");
    for (unsigned b : elements_) {
      if (!contains(static_cast<unsigned>((static_cast<unsigned long>(a) * b) % modulus))) {
        throw std::invalid_argument("subgroup not closed under multiplication");
      }
    }
  }
  // A finite subset closed under multiplication in a finite group is closed under inverses.
}

UnitSubgroup UnitSubgroup::full(unsigned modulus) { return UnitSubgroup(modulus, unit_residues(modulus)); }

bool UnitSubgroup::contains(unsigned a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a % modulus_);
}

bool UnitSubgroup::is_subset_of(const UnitSubgroup& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("subgroups of different moduli");
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

// --- Galois action ----------------------------------------------------------

CycloElt lift(const CycloElt& u, unsigned target_index) {
  const unsigned m = u.index();
  if (target_index == 0 || target_index % m != 0) {
    throw std::invalid_argument("lift: index " + std::to_string(m) + " does not divide " +
                                std::to_string(target_index));
  }
  if (target_index == m) return u;
  if (auto q = u.as_rational()) return CycloElt::rational(target_index, *q);
  return CycloElt(target_index, u.rep().inflate(target_index / m));
}

std::pair<CycloElt, CycloElt> common_index(const CycloElt& u, const CycloElt& v) {
  const auto l = static_cast<unsigned>(lcm_u(u.index(), v.index()));
  return {lift(u, l), lift(v, l)};
}

namespace {
void require_unit(unsigned a, unsigned m) {
  if (m > 1 && std::gcd(a % m, m) != 1) {
    throw std::invalid_argument("galois_apply: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
  }
}
}  // namespace

CycloElt galois_apply(unsigned a, const CycloElt& u) {
  const unsigned m = u.index();
  require_unit(a, m);
  if (u.as_rational()) return u;
  auto field = CyclotomicField::get(m);
  IntRep rep = to_int_rep(u.rep(), u.rep().size());
  std::vector<BigInt> cyclic(m);
  for (std::size_t k = 0; k < rep.num.size(); ++k) {
    if (rep.num[k] == 0) continue;
    cyclic[(static_cast<unsigned long>(a) * k) % m] += rep.num[k];
  }
  return field->fold(cyclic, rep.den);
}

bool galois_fixes(unsigned a, const CycloElt& u) {
  const unsigned m = u.index();
  require_unit(a, m);
  if (u.as_rational()) return true;
  auto field = CyclotomicField::get(m);
  const unsigned phi = field->phi();
  IntRep rep = to_int_rep(u.rep(), phi);
  std::vector<std::pair<unsigned, std::size_t>> image;  // (exponent a*k mod m, k)
  for (std::size_t k = 0; k < phi; ++k) {
    if (rep.num[k] != 0) image.emplace_back((static_cast<unsigned long>(a) * k) % m, k);
  }
  BigInt acc;
  for (unsigned i = 0; i < phi; ++i) {
    acc = 0;
    for (const auto& [j, k] : image) {
      if (j < phi) {
        if (j == i) acc += rep.num[k];
      } else {
        const BigInt& t = field->power_coeff(j, i);
        if (t != 0) mpz_addmul(acc.get_mpz_t(), rep.num[k].get_mpz_t(), t.get_mpz_t());
      }
    }
    if (acc != rep.num[i]) return false;
  }
  return true;
}

// --- Special values ---------------------------------------------------------

CycloElt cot_pi_over(unsigned n) {
  if (n < 2) throw std::invalid_argument("cot(pi/n) needs n >= 2");
  const unsigned m = 4 * n;
  const CycloElt one = CycloElt::rational(m, 1);
  const CycloElt w4 = CycloElt::root_power(m, 4);
  const CycloElt numerator = CycloElt::root_power(m, n) * (w4 + one);
  if (numerator.is_zero()) return numerator;
  return numerator * (w4 - one).inverse();
}

CycloElt cos_2pi_over(unsigned m, long k) {
  if (m == 0) throw std::invalid_argument("cos(2 pi k/m) needs m >= 1");
  CycloElt sum = CycloElt::root_power(m, k) + CycloElt::root_power(m, -k);
  return sum * Rational(1, 2);
}

CycloElt sin_2pi_over(unsigned m, long k) {
  if (m == 0) throw std::invalid_argument("sin(2 pi k/m) needs m >= 1");
  const auto index = static_cast<unsigned>(lcm_u(m, 4));
  const long scale = static_cast<long>(index / m);
  // (z^k - z^-k) / (2i) = i (z^-k - z^k) / 2
  CycloElt diff = CycloElt::root_power(index, -k * scale) - CycloElt::root_power(index, k * scale);
  return CycloElt::root_power(index, index / 4) * diff * Rational(1, 2);
}

UnitSubgroup stabilizer(const CycloElt& u) {
  const unsigned m = u.index();
  std::vector<unsigned> fixing;
  for (unsigned a : unit_residues(m)) {
    if (galois_fixes(a, u)) fixing.push_back(a);
  }
  return UnitSubgroup(m, std::move(fixing));
}

std::size_t algebraic_degree(const CycloElt& u) { return euler_phi(u.index()) / stabilizer(u).size(); }

Poly min_poly(const CycloElt& u) {
  const unsigned m = u.index();
  const UnitSubgroup h = stabilizer(u);
  std::vector<unsigned> reps;
  std::vector<bool> covered(m, false);
  for (unsigned a : unit_residues(m)) {
    if (covered[a]) continue;
    reps.push_back(a);
    for (unsigned s : h.elements()) covered[(static_cast<unsigned long>(a) * s) % m] = true;
  }
  // Coefficients of the product in X, lowest degree first.
  std::vector<CycloElt> prod{CycloElt::rational(m, 1)};
  for (unsigned a : reps) {
    const CycloElt root = galois_apply(a, u);
    std::vector<CycloElt> next(prod.size() + 1, CycloElt::rational(m, 0));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] += prod[i];
      next[i] -= root * prod[i];
    }
    prod = std::move(next);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(prod.size());
  for (const auto& c : prod) {
    auto q = c.as_rational();
    if (!q) throw std::logic_error("min_poly: coefficient is not rational");
    coeffs.push_back(*q);
  }
  return Poly(std::move(coeffs));
}

bool field_membership(const CycloElt& u, const CycloElt& v) {
  auto [lu, lv] = common_index(u, v);
  const UnitSubgroup h = stabilizer(lv);
  for (unsigned a : h.elements()) {
    if (!galois_fixes(a, lu)) return false;
  }
  return true;
}

}  // namespace polyflat
