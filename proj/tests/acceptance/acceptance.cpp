// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "polyflat/biquadratic.hpp"
#include "polyflat/commands.hpp"
#include "polyflat/flatness.hpp"
#include "polyflat/geometry.hpp"
#include "polyflat/numeric.hpp"
#include "polyflat/sqrt_sums.hpp"

using namespace polyflat;
using polyflat::numeric::HighPrecision;
using polyflat::testing::Gen;
using polyflat::testing::kPropertyCases;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

// 1. flat set up to 200
void flat_set(Outcome& o) {
  const auto certs = cmd_classify(200);
  const auto& summary = certs.back();
  o.require(summary.verdict == Verdict::verified, "summary not verified");
  o.require(summary.payload["flat_set"] == std::vector<unsigned>{3, 4, 6, 8, 12, 24},
            "flat set " + summary.payload["flat_set"].dump());
  o.require(certs.size() == 199, "expected one report per n");
}

// 2. pentagon cotangent
void pentagon(Outcome& o) {
  o.require(min_poly(cot_pi_over(5)) == Poly{q(1, 5), 0, -2, 0, 1}, "min_poly(cot pi/5)");
  const FlatReport r = is_flat_cot_field(5);
  o.require(r.degree == 4 && r.is_cyclic && !r.is_flat, "field structure of n=5");
  o.require(r.quotient_orders == std::vector<unsigned>{1, 2, 4, 4}, "quotient orders of n=5");
}

// 3. cot(pi/16) and sqrt(4 + 2 sqrt 2)
void sixteen(Outcome& o) {
  const CycloElt cot = cot_pi_over(16);
  const CycloElt sqrt2 = lift(cos_2pi_over(8, 1) * Rational(2), cot.index());
  const CycloElt theta = cot - CycloElt::rational(cot.index(), 1) - sqrt2;
  o.require(theta * theta == CycloElt::rational(cot.index(), 4) + sqrt2 * Rational(2), "theta^2 = 4 + 2 sqrt 2");
  const auto z = numeric::evaluate(theta);
  o.require(abs(z.re - sqrt(4 + 2 * sqrt(HighPrecision(2)))) < HighPrecision("1e-40"), "theta is the positive root");
  o.require(field_membership(theta, cot), "theta in Q(cot pi/16)");
  o.require(field_membership(cot, theta), "cot pi/16 in Q(theta)");
  const FlatReport r = is_flat_cot_field(16);
  o.require(r.degree == 4 && r.is_cyclic, "degree 4 cyclic");
  o.require(prop3_check(16).verdict == Verdict::verified, "prop3_check(16)");
  o.require(prop3_check(5).verdict == Verdict::verified, "prop3_check(5)");
}

// 4. cos(2 pi / q)
void cosines(Outcome& o) {
  const std::array<std::pair<unsigned, std::size_t>, 4> cases{{{7, 3}, {11, 5}, {13, 6}, {9, 3}}};
  for (const auto& [qv, deg] : cases) {
    const Certificate c = prop4_check(qv);
    o.require(c.verdict == Verdict::verified, "prop4 q=" + std::to_string(qv));
    o.require(c.payload["degree"] == deg && c.payload["is_cyclic"] == true, "degree/cyclic q=" + std::to_string(qv));
  }
}

// 5. quartic lemma and classifier
void lemma(Outcome& o) {
  struct Case { long p, a, b, c, w; };
  for (const Case k : {Case{5, 25, 10, 5, 500}, Case{2, 4, 2, 2, 16}}) {
    const Certificate c = lemma_quartic_check(k.p, q(k.a), q(k.b), q(k.c));
    o.require(c.verdict == Verdict::verified && c.payload["galois_class"] == "C4", "lemma p=" + std::to_string(k.p));
    const Rational w = rational_from_json(c.payload["square_witness"]);
    o.require(w == q(k.w) && w * w == rational_from_json(c.payload["resolvent_square"]), "square witness");
  }
  o.require(biquadratic_galois_class(q(0), q(1)) == GaloisClass::V4, "X^4+1 is V4");
  o.require(biquadratic_galois_class(q(0), q(-2)) == GaloisClass::D4, "X^4-2 is D4");
}

// 6. subfields for every divisor pair
void subfields(Outcome& o) {
  int pairs = 0;
  for (unsigned n = 3; n <= 60; ++n) {
    for (unsigned d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      const Certificate c = verify_prop1(n, d);
      o.require(c.verdict == Verdict::verified && c.payload["cos_identity_matches"] == true &&
                    c.payload["cos_d_in_field"] == true,
                "prop1 n=" + std::to_string(n) + " d=" + std::to_string(d));
      ++pairs;
    }
  }
  o.require(pairs > 100, "too few pairs");
}

// 7. area formula and area identity
void areas(Outcome& o) {
  for (unsigned n = 3; n <= 50; ++n) {
    o.require(polygon_area_formula_check(n).verdict == Verdict::verified, "area formula n=" + std::to_string(n));
  }
  for (unsigned n = 3; n <= 24; ++n) {
    const Certificate c = cmd_verify("area-identity", {std::to_string(n)});
    o.require(c.verdict == Verdict::verified && c.payload["passed"] == 20, "area identity n=" + std::to_string(n));
  }
}

// 8. square-root sums
void refutation(Outcome& o) {
  const Certificate pent = cmd_refute(5, 3, 6);
  o.require(pent.verdict == Verdict::exhausted_no_witness, "n=5 should exhaust");
  o.require(pent.payload["search"]["exhausted"] == true, "n=5 search exhausted flag");
  o.require(pent.payload["structural_obstruction"]["applies"] == true, "n=5 obstruction");
  const Certificate hex = cmd_refute(6, 1, 27);
  o.require(hex.verdict == Verdict::witness_found &&
                rational_from_json(hex.payload["search"]["witness"][0]["r"]) == q(27, 4),
            "n=6 witness 27/4");
  const Certificate tri = cmd_refute(3, 1, 16);
  o.require(tri.verdict == Verdict::witness_found &&
                rational_from_json(tri.payload["search"]["witness"][0]["r"]) == q(3, 16),
            "n=3 witness 3/16");
}

// 9. rational-distance points
void points(Outcome& o) {
  const auto hex = search_rational_points(6, 2);
  const RationalPointCandidate centroid{{q(0), q(0)}, std::vector<Rational>(6, q(1))};
  o.require(std::find(hex.begin(), hex.end(), centroid) != hex.end(), "hexagon centroid");
  const auto tri = search_rational_points(3, 2);
  const std::vector<RationalPointCandidate> vertices = {{{q(0), q(0)}, {q(0), q(1), q(1)}},
                                                        {{q(1), q(0)}, {q(1), q(0), q(1)}},
                                                        {{q(1, 2), q(1, 2)}, {q(1), q(1), q(0)}}};
  for (const auto& v : vertices) {
    o.require(std::find(tri.begin(), tri.end(), v) != tri.end(), "triangle vertex " + v.parameters[0].str());
  }
  o.require(search_rational_points(4, 8).empty(), "square bound 8 should be empty");
  for (unsigned n : {3u, 6u}) {
    for (const auto& c : search_rational_points(n, 2)) {
      const auto d2 = search_squared_distances(n, c.parameters);
      for (std::size_t i = 0; i < d2.size(); ++i) o.require(c.distances[i] * c.distances[i] == d2[i], "re-certify");
    }
  }
}

// 10. property suites
void properties(Outcome& o) {
  Gen g(1000);
  constexpr unsigned indices[] = {5, 7, 8, 9, 12, 15, 16, 20, 24};
  const HighPrecision tol("1e-40");
  for (int i = 0; i < kPropertyCases; ++i) {
    // core_algebra ring axioms
    const Poly f = g.poly(), h = g.poly(), k = g.poly();
    o.require((f + h) + k == f + (h + k) && f * h == h * f && f * (h + k) == f * h + f * k, "poly ring axioms");
    const Poly d = g.nonzero_poly(3);
    const auto [qt, r] = divrem(f, d);
    o.require(qt * d + r == f, "divrem reconstruction");

    // cyclotomic ring axioms, galois homomorphism and multiplicativity
    const unsigned m = indices[g.integer(0, std::size(indices) - 1)];
    const CycloElt a = g.cyclo(m), b = g.cyclo(m), c = g.cyclo(m);
    o.require((a + b) + c == a + (b + c) && a * b == b * a && a * (b + c) == a * b + a * c &&
                  (a * b) * c == a * (b * c),
              "cyclotomic ring axioms");
    const unsigned s = g.unit(m), t = g.unit(m);
    o.require(galois_apply(s, a * b) == galois_apply(s, a) * galois_apply(s, b) &&
                  galois_apply(s, a + b) == galois_apply(s, a) + galois_apply(s, b),
              "galois homomorphism");
    o.require(galois_apply(s, galois_apply(t, a)) == galois_apply((s * t) % m, a), "galois multiplicativity");

    // stabilizer-degree product law on constructed values
    const CycloElt u = (i % 2 == 0) ? cot_pi_over(static_cast<unsigned>(g.integer(3, 40)))
                                    : cos_2pi_over(static_cast<unsigned>(g.integer(3, 60)), g.integer(1, 60));
    o.require(*min_poly(u).degree() * stabilizer(u).size() == euler_phi(u.index()), "deg * |H| = phi");
    o.require(galois_apply(u.index() - 1, u) == u, "constructed values are real");

    // 50-digit numeric guards on the constructions
    const auto n = static_cast<unsigned>(g.integer(3, 60));
    const HighPrecision x = numeric::pi() / n;
    o.require(abs(numeric::evaluate(cot_pi_over(n)).re - cos(x) / sin(x)) < tol, "cot numeric guard");
    const auto mm = static_cast<unsigned>(g.integer(1, 60));
    const long kk = g.integer(-60, 60);
    const HighPrecision y = 2 * numeric::pi() * kk / mm;
    o.require(abs(numeric::evaluate(cos_2pi_over(mm, kk)).re - cos(y)) < tol, "cos numeric guard");
    o.require(abs(numeric::evaluate(sin_2pi_over(mm, kk)).re - sin(y)) < tol, "sin numeric guard");
    o.require(numeric::distance(numeric::evaluate(lift(a, m * 2)), numeric::evaluate(a)) < tol, "lift numeric guard");

    // sqrt_sums ring axioms, sign-flip involution and homomorphism
    const MultiQuadElt p = g.multiquad(), w = g.multiquad(), z = g.multiquad();
    o.require((p + w) + z == p + (w + z) && p * w == w * p && p * (w + z) == p * w + p * z, "multiquad ring axioms");
    std::set<std::uint64_t> flip;
    for (std::uint64_t pr : {2, 3, 5, 7}) {
      if (g.coin()) flip.insert(pr);
    }
    o.require(mq_sign_flip(flip, mq_sign_flip(flip, p)) == p, "sign flip involution");
    o.require(mq_sign_flip(flip, p * w) == mq_sign_flip(flip, p) * mq_sign_flip(flip, w), "sign flip homomorphism");

    // Heron symmetry and 16 area^2 identity
    std::array<Rational, 3> sides{g.nonnegative_rational(30), g.nonnegative_rational(30), g.nonnegative_rational(30)};
    std::sort(sides.begin(), sides.end());
    if (sides[0] + sides[1] < sides[2]) sides[2] = sides[0] + sides[1];
    const Rational area2 = heron_area_squared(sides[0], sides[1], sides[2]);
    do {
      const Rational a2 = sides[0] * sides[0], b2 = sides[1] * sides[1], c2 = sides[2] * sides[2];
      o.require(heron_area_squared(sides[0], sides[1], sides[2]) == area2, "heron symmetry");
      o.require(Rational(16) * area2 == Rational(4) * a2 * b2 - pow(a2 + b2 - c2, 2), "16 area^2 identity");
    } while (std::next_permutation(sides.begin(), sides.end()));
  }
}

// 11. degree parity fixtures
void degrees(Outcome& o) {
  for (unsigned n : {7u, 9u, 11u, 13u, 14u, 18u, 19u, 21u}) {
    o.require(!remark_degree_check(n).power_of_two, "expected odd factor for n=" + std::to_string(n));
  }
  for (unsigned n : {3u, 4u, 5u, 6u, 8u, 12u, 15u}) {
    o.require(remark_degree_check(n).power_of_two, "expected power of two for n=" + std::to_string(n));
  }
  o.require(remark_degree_check(15).degree == 8, "degree of Q(cot pi/15)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "classify --max-n 200 gives flat set {3,4,6,8,12,24}", 120, flat_set},
      {2, "min_poly(cot pi/5) = x^4 - 2x^2 + 1/5, cyclic of order 4", 1, pentagon},
      {3, "Q(cot pi/16) = Q(sqrt(4 + 2 sqrt 2)), degree 4, cyclic", 5, sixteen},
      {4, "Q(cos 2pi/q): degrees 3,5,6,3 and cyclic for q = 7,11,13,9", 5, cosines},
      {5, "quartic lemma C4 with witness 2pbc; X^4+1 is V4, X^4-2 is D4", 1, lemma},
      {6, "cot and cos subfields for every d | n, 3 <= n <= 60", 120, subfields},
      {7, "area formula n <= 50, area identity n <= 24 at 20 seeded points", 180, areas},
      {8, "refute n=5 exhausts with obstruction; witnesses 27/4 and 3/16", 120, refutation},
      {9, "rational-distance search: hexagon centroid, triangle vertices, no square hits", 120, points},
      {10, "property suites, 500 seeded cases each", 600, properties},
      {11, "degree power-of-two fixtures", 5, degrees},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.ok = false;
      if (outcome.detail.empty()) outcome.detail = "over time budget";
    }
    std::printf("%s [%2d] %s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                outcome.ok ? "" : ": ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
