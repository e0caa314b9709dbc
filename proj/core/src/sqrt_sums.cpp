#include "polyflat/sqrt_sums.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polyflat {

SquarefreeSplit squarefree_split(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("squarefree_split(0)");
  SquarefreeSplit out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) out.square_root_part *= p;
    if (e % 2 == 1) out.kernel *= p;
  }
  out.kernel *= n;
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

std::vector<MultiQuadElt::Term> normalized(std::map<std::uint64_t, Rational>&& acc) {
  std::vector<MultiQuadElt::Term> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (!c.is_zero()) out.emplace_back(key, std::move(c));
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("squarefree key overflow");
  return out;
}

}  // namespace

MultiQuadElt::MultiQuadElt(const Rational& q) {
  if (!q.is_zero()) terms_.emplace_back(1, q);
}

MultiQuadElt MultiQuadElt::from_sqrt(const Rational& r) {
  if (r.sign() < 0) throw std::domain_error("square root of negative rational " + r.str());
  if (r.is_zero()) return {};
  const BigInt product = r.num() * r.den();
  if (!product.fits_ulong_p()) throw std::overflow_error("radicand too large: " + r.str());
  const SquarefreeSplit split = squarefree_split(product.get_ui());
  return term(split.kernel, Rational(BigInt(split.square_root_part), r.den()));
}

MultiQuadElt MultiQuadElt::term(std::uint64_t key, const Rational& c) {
  if (key == 0 || squarefree_split(key).square_root_part != 1) {
    throw std::invalid_argument("key " + std::to_string(key) + " is not squarefree");
  }
  if (c.is_zero()) return {};
  return MultiQuadElt(std::vector<Term>{{key, c}});
}

std::optional<Rational> MultiQuadElt::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first == 1) return terms_[0].second;
  return std::nullopt;
}

Rational MultiQuadElt::coeff(std::uint64_t key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return Rational(0);
}

MultiQuadElt& MultiQuadElt::operator+=(const MultiQuadElt& rhs) {
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (!sum.is_zero()) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiQuadElt& MultiQuadElt::operator-=(const MultiQuadElt& rhs) { return *this += -rhs; }

MultiQuadElt operator*(const MultiQuadElt& lhs, const MultiQuadElt& rhs) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [s, c] : lhs.terms_) {
    for (const auto& [t, d] : rhs.terms_) {
      // sqrt(s) sqrt(t) = g sqrt((s/g)(t/g)) with g = gcd(s, t)
      const std::uint64_t g = std::gcd(s, t);
      acc[checked_mul(s / g, t / g)] += c * d * Rational(g);
    }
  }
  return MultiQuadElt(normalized(std::move(acc)));
}

MultiQuadElt& MultiQuadElt::operator*=(const MultiQuadElt& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiQuadElt MultiQuadElt::operator-() const {
  MultiQuadElt out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

std::string MultiQuadElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << '-';
    first = false;
    const Rational mag = c.abs();
    if (key == 1) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      os << "sqrt(" << key << ')';
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiQuadElt& u) { return os << u.str(); }

MultiQuadElt mq_sign_flip(const std::set<std::uint64_t>& flipped_primes, const MultiQuadElt& u) {
  MultiQuadElt out;
  for (const auto& [key, c] : u.terms()) {
    std::size_t hits = 0;
    for (std::uint64_t p : flipped_primes) {
      if (key % p == 0) ++hits;
    }
    out += MultiQuadElt::term(key, hits % 2 == 1 ? -c : c);
  }
  return out;
}

MultiQuadElt mq_eval_poly(const Poly& f, const MultiQuadElt& u) {
  MultiQuadElt acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * u;
    acc += MultiQuadElt(*it);
  }
  return acc;
}

nlohmann::json to_json(const SearchReport& r) {
  nlohmann::json witness = nullptr;
  if (r.witness) {
    witness = nlohmann::json::array();
    for (const auto& t : *r.witness) witness.push_back({{"sign", t.sign}, {"r", to_json(t.radicand)}});
  }
  return {{"target_min_poly", to_json(r.target_min_poly)},
          {"term_count", r.term_count},
          {"bound", r.bound},
          {"witness", witness},
          {"exhausted", r.exhausted},
          {"candidates_tested", r.candidates_tested}};
}

std::vector<Rational> search_radicands(unsigned bound) {
  std::vector<Rational> values;
  for (unsigned v = 1; v <= bound; ++v) {
    for (unsigned u = 0; u <= bound; ++u) {
      if (std::gcd(u, v) == 1 || u == 0) values.emplace_back(BigInt(u), BigInt(v));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  auto canonical_key = [](const Rational& r) {
    const MultiQuadElt root = MultiQuadElt::from_sqrt(r);
    if (root.is_zero()) return std::make_pair(std::uint64_t{0}, Rational(0));
    return root.terms().front();
  };
  std::stable_sort(values.begin(), values.end(),
                   [&](const Rational& a, const Rational& b) { return canonical_key(a) < canonical_key(b); });
  return values;
}

MultiQuadElt signed_root_sum(const std::vector<SignedRoot>& terms) {
  MultiQuadElt sum;
  for (const auto& t : terms) {
    MultiQuadElt root = MultiQuadElt::from_sqrt(t.radicand);
    if (t.sign < 0) sum -= root;
    else sum += root;
  }
  return sum;
}

namespace {

struct PartitionResult {
  std::optional<std::vector<SignedRoot>> witness;
  std::uint64_t tested = 0;
};

}  // namespace

SearchReport refute_or_find_sum(const Poly& target, unsigned k, unsigned bound, unsigned workers,
                                const ProgressFn& progress) {
  if (k < 1 || bound < 1) throw std::invalid_argument("refute_or_find_sum needs k >= 1 and bound >= 1");
  if (!target.is_monic()) throw std::invalid_argument("target must be a monic polynomial");
  if (k > 24) throw std::invalid_argument("term count too large for sign enumeration");

  const std::vector<Rational> radicands = search_radicands(bound);
  std::vector<MultiQuadElt> roots;
  roots.reserve(radicands.size());
  for (const auto& r : radicands) roots.push_back(MultiQuadElt::from_sqrt(r));
  const std::size_t count = radicands.size();
  const std::uint64_t sign_patterns = std::uint64_t{1} << (k - 1);
  std::atomic<std::size_t> best_partition{count};

  auto run_partition = [&](std::size_t first) {
    PartitionResult result;
    std::vector<std::size_t> idx(k, first);
    for (;;) {
      if (first > best_partition.load()) return result;
      for (std::uint64_t mask = 0; mask < sign_patterns; ++mask) {
        // Position j >= 1 is negative when bit (k - 1 - j) of mask is set.
        MultiQuadElt sum = roots[idx[0]];
        for (unsigned j = 1; j < k; ++j) {
          if ((mask >> (k - 1 - j)) & 1U) sum -= roots[idx[j]];
          else sum += roots[idx[j]];
        }
        ++result.tested;
        if (mq_eval_poly(target, sum).is_zero()) {
          std::vector<SignedRoot> w;
          for (unsigned j = 0; j < k; ++j) {
            const bool negative = j > 0 && ((mask >> (k - 1 - j)) & 1U);
            w.push_back({negative ? -1 : 1, radicands[idx[j]]});
          }
          result.witness = std::move(w);
          std::size_t current = best_partition.load();
          while (first < current && !best_partition.compare_exchange_weak(current, first)) {
          }
          return result;
        }
      }
      // Next nondecreasing tuple with idx[0] fixed.
      int pos = static_cast<int>(k) - 1;
      while (pos >= 1 && idx[pos] + 1 >= count) --pos;
      if (pos < 1) return result;
      ++idx[pos];
      for (unsigned j = pos + 1; j < k; ++j) idx[j] = idx[pos];
    }
  };

  const std::vector<PartitionResult> partials = parallel_map(count, workers, run_partition, progress);

  SearchReport report;
  report.target_min_poly = target;
  report.term_count = k;
  report.bound = bound;
  for (const auto& part : partials) {
    report.candidates_tested += part.tested;
    if (part.witness) {
      report.witness = part.witness;
      break;
    }
  }
  report.exhausted = !report.witness.has_value();
  return report;
}

Certificate prop2_check(const std::vector<Rational>& radicands) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& r : radicands) inputs.push_back(to_json(r));
  const std::string claim = "prop2.flat_sqrt_sum";
  const nlohmann::json wrapped = {{"radicands", inputs}};
  if (radicands.empty()) return Certificate::failure(claim, wrapped, "bad_argument", "no radicands given");
  for (const auto& r : radicands) {
    if (r.sign() < 0) return Certificate::failure(claim, wrapped, "negative_radicand", r.str() + " is negative");
  }
  MultiQuadElt x;
  for (const auto& r : radicands) x += MultiQuadElt::from_sqrt(r);
  std::set<std::uint64_t> prime_set;
  for (const auto& [key, c] : x.terms()) {
    for (auto p : prime_factors(key)) prime_set.insert(p);
  }
  const std::vector<std::uint64_t> primes(prime_set.begin(), prime_set.end());
  if (primes.size() > 16) return Certificate::failure(claim, wrapped, "too_many_primes", "at most 16 primes supported");

  const MultiQuadElt x2 = x * x;
  bool involutions = true;
  bool homomorphism = true;
  std::vector<MultiQuadElt> conjugates;
  const std::uint64_t subsets = std::uint64_t{1} << primes.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::set<std::uint64_t> flipped;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((mask >> i) & 1U) flipped.insert(primes[i]);
    }
    const MultiQuadElt y = mq_sign_flip(flipped, x);
    involutions = involutions && mq_sign_flip(flipped, y) == x;
    homomorphism = homomorphism && mq_sign_flip(flipped, x2) == y * y;
    if (std::find(conjugates.begin(), conjugates.end(), y) == conjugates.end()) conjugates.push_back(y);
  }
  const std::size_t degree = conjugates.size();
  const bool power_of_two = (degree & (degree - 1)) == 0;

  Certificate cert;
  cert.claim = claim;
  cert.inputs = wrapped;
  cert.verdict = (involutions && homomorphism && power_of_two) ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"element", x.str()},
                  {"primes", primes},
                  {"automorphisms", subsets},
                  {"involutions", involutions},
                  {"homomorphism", homomorphism},
                  {"conjugate_count", degree},
                  {"degree_is_power_of_two", power_of_two}};
  return cert;
}

}  // namespace polyflat
