#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "polyflat/certificate.hpp"
#include "polyflat/parallel.hpp"
#include "polyflat/poly.hpp"
#include "polyflat/rational.hpp"

namespace polyflat {

/// Largest s with s^2 | n, paired with the squarefree kernel: n = f^2 * s.
struct SquarefreeSplit {
  std::uint64_t square_root_part = 1;
  std::uint64_t kernel = 1;
};

/// Trial division. Throws std::invalid_argument for n == 0.
SquarefreeSplit squarefree_split(std::uint64_t n);

/// Prime divisors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Finite sum of c_s * sqrt(s) over squarefree s >= 1 (s = 1 is the rational part).
///
/// Terms are sorted by key and never hold a zero coefficient, so equality is
/// structural. That equality is sound because square roots of distinct
/// squarefree integers are linearly independent over Q.
class MultiQuadElt {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  MultiQuadElt() = default;
  MultiQuadElt(const Rational& q);  // NOLINT(google-explicit-constructor)

  /// sqrt(r) as q * sqrt(s): sqrt(u/v) = sqrt(u v) / v, then square factors
  /// of u v are pulled out. Throws std::domain_error for r < 0.
  static MultiQuadElt from_sqrt(const Rational& r);

  /// c * sqrt(key); `key` must be squarefree.
  static MultiQuadElt term(std::uint64_t key, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> as_rational() const;
  /// Coefficient of sqrt(key), zero when absent.
  Rational coeff(std::uint64_t key) const;

  MultiQuadElt& operator+=(const MultiQuadElt& rhs);
  MultiQuadElt& operator-=(const MultiQuadElt& rhs);
  MultiQuadElt& operator*=(const MultiQuadElt& rhs);

  friend MultiQuadElt operator+(MultiQuadElt lhs, const MultiQuadElt& rhs) { return lhs += rhs; }
  friend MultiQuadElt operator-(MultiQuadElt lhs, const MultiQuadElt& rhs) { return lhs -= rhs; }
  friend MultiQuadElt operator*(const MultiQuadElt& lhs, const MultiQuadElt& rhs);
  MultiQuadElt operator-() const;

  friend bool operator==(const MultiQuadElt&, const MultiQuadElt&) = default;

  std::string str() const;

 private:
  explicit MultiQuadElt(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiQuadElt& u);

inline MultiQuadElt mq_from_sqrt(const Rational& r) { return MultiQuadElt::from_sqrt(r); }

/// The automorphism sqrt(p) -> -sqrt(p) for p in `flipped_primes`: negates
/// every term whose key has an odd number of flipped prime factors.
MultiQuadElt mq_sign_flip(const std::set<std::uint64_t>& flipped_primes, const MultiQuadElt& u);

/// Horner evaluation of f at u.
MultiQuadElt mq_eval_poly(const Poly& f, const MultiQuadElt& u);

struct SignedRoot {
  int sign = 1;  // +1 or -1
  Rational radicand;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

struct SearchReport {
  Poly target_min_poly;
  unsigned term_count = 0;
  unsigned bound = 0;
  std::optional<std::vector<SignedRoot>> witness;
  bool exhausted = false;
  std::uint64_t candidates_tested = 0;
};

nlohmann::json to_json(const SearchReport& r);

/// Radicands u/v with 0 <= u <= bound, 1 <= v <= bound, in enumeration
/// order: by squarefree kernel of sqrt(r), then by its rational coefficient.
std::vector<Rational> search_radicands(unsigned bound);

/// Sum of sign_i * sqrt(r_i).
MultiQuadElt signed_root_sum(const std::vector<SignedRoot>& terms);

/// Looks for target(+sqrt(r_1) +- ... +- sqrt(r_k)) = 0 over multisets of k
/// radicands from search_radicands(bound), the first sign fixed positive
/// (negating every sign gives a conjugate root of the same polynomial).
/// Multisets run in lexicographic index order and signs in binary order;
/// the first witness in that order is reported.
SearchReport refute_or_find_sum(const Poly& target, unsigned k, unsigned bound, unsigned workers = 0,
                                const ProgressFn& progress = {});

/// sqrt(r_1) + ... + sqrt(r_n) generates a field whose automorphisms are the
/// prime sign flips; checks each is an involution and a homomorphism on it.
Certificate prop2_check(const std::vector<Rational>& radicands);

}  // namespace polyflat
