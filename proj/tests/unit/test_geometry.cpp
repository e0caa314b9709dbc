#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "polyflat/geometry.hpp"
#include "polyflat/numeric.hpp"

using namespace polyflat;
using polyflat::numeric::HighPrecision;
using polyflat::testing::Gen;
using polyflat::testing::kPropertyCases;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("unit_polygon construction") {
  for (unsigned n = 3; n <= 16; ++n) {
    const UnitPolygon p = unit_polygon(n);
    REQUIRE(p.vertices.size() == n);
    const CycloElt one = CycloElt::rational(4 * n, 1);
    for (unsigned k = 0; k < n; ++k) {
      CHECK(squared_distance(p.vertices[k], p.vertices[(k + 1) % n]) == one);
      CHECK(p.vertices[k].is_real());
    }
    // numeric guard: circumradius 1 / (2 sin(pi/n))
    const HighPrecision r = 1 / (2 * sin(numeric::pi() / n));
    CHECK(abs(numeric::evaluate(p.circumradius).re - r) < HighPrecision("1e-40"));
    CHECK(p.vertices[0].y.is_zero());
  }
  CHECK(unit_polygon(6).circumradius == CycloElt::rational(24, 1));
  CHECK(unit_polygon(4).circumradius * unit_polygon(4).circumradius == CycloElt::rational(16, q(1, 2)));
  CHECK_THROWS_AS(unit_polygon(2), std::invalid_argument);
}

TEST_CASE("signed_area examples") {
  const ExactPoint o = ExactPoint::rational(1, 0, 0);
  const ExactPoint a = ExactPoint::rational(1, 1, 0);
  const ExactPoint b = ExactPoint::rational(1, 0, 1);
  CHECK(signed_area(o, a, b) == CycloElt::rational(1, q(1, 2)));
  CHECK(signed_area(o, b, a) == CycloElt::rational(1, q(-1, 2)));
  CHECK(signed_area(o, a, ExactPoint::rational(1, 3, 0)).is_zero());
  CHECK_THROWS_AS(ExactPoint(CycloElt::rational(4, 1), CycloElt::rational(8, 1)), std::invalid_argument);
}

TEST_CASE("area_identity_check examples") {
  const Certificate sq = area_identity_check(unit_polygon(4), ExactPoint::rational(16, 0, 0));
  CHECK(sq.verdict == Verdict::verified);
  CHECK(cyclo_from_json(sq.payload["polygon_area"]) == CycloElt::rational(16, 1));

  const UnitPolygon hex = unit_polygon(6);
  const Certificate at_vertex = area_identity_check(hex, hex.vertices[2]);
  CHECK(at_vertex.verdict == Verdict::verified);
  CHECK(at_vertex.payload["degenerate_terms"] == 2);

  const Certificate outside = area_identity_check(unit_polygon(5), ExactPoint::rational(1, 2, 0));
  CHECK(outside.verdict == Verdict::verified);
  bool negative = false;
  for (const auto& t : outside.payload["term_approximations"]) negative = negative || t.get<std::string>()[0] == '-';
  CHECK(negative);
}

TEST_CASE("area_identity_check for seeded points, 3 <= n <= 12") {
  Gen g(40);
  for (unsigned n = 3; n <= 12; ++n) {
    const UnitPolygon p = unit_polygon(n);
    for (int i = 0; i < 5; ++i) {
      const ExactPoint pt = ExactPoint::rational(1, g.rational(12), g.rational(12));
      CHECK_MESSAGE(area_identity_check(p, pt).verdict == Verdict::verified, "n=", n);
    }
  }
}

TEST_CASE("polygon_area_formula_check examples") {
  const Certificate c4 = polygon_area_formula_check(4);
  CHECK(c4.verdict == Verdict::verified);
  CHECK(poly_from_json(c4.payload["min_poly"]) == Poly{-1, 1});
  CHECK(poly_from_json(polygon_area_formula_check(6).payload["min_poly"]) == Poly{q(-27, 4), 0, 1});
  CHECK(poly_from_json(polygon_area_formula_check(3).payload["min_poly"]) == Poly{q(-3, 16), 0, 1});
  CHECK(poly_from_json(polygon_area_formula_check(5).payload["min_poly"]) ==
        Poly{q(125, 256), 0, q(-25, 8), 0, 1});
  for (unsigned n = 3; n <= 20; ++n) CHECK(polygon_area_formula_check(n).verdict == Verdict::verified);
  CHECK(polygon_area_formula_check(2).reason() == "bad_argument");
}

TEST_CASE("heron examples") {
  CHECK(heron_area_squared(3, 4, 5) == q(36));
  CHECK(heron_area_squared(1, 2, 3) == q(0));
  CHECK(heron_area_squared(1, 1, 1) == q(3, 16));
  CHECK_THROWS_AS(heron_area_squared(1, 1, 3), std::domain_error);
  CHECK_THROWS_AS(heron_area_squared(-1, 1, 1), std::domain_error);
}

TEST_CASE("property: heron symmetry and the 16 area^2 identity") {
  Gen g(41);
  int valid = 0;
  while (valid < kPropertyCases) {
    std::array<Rational, 3> s{g.nonnegative_rational(30), g.nonnegative_rational(30), g.nonnegative_rational(30)};
    std::sort(s.begin(), s.end());
    if (s[0] + s[1] < s[2]) continue;
    const Rational h = heron_area_squared(s[0], s[1], s[2]);
    CHECK(h.sign() >= 0);
    do {
      CHECK(heron_area_squared(s[0], s[1], s[2]) == h);
      const Rational a2 = s[0] * s[0], b2 = s[1] * s[1], c2 = s[2] * s[2];
      CHECK(Rational(16) * h == Rational(4) * a2 * b2 - pow(a2 + b2 - c2, 2));
    } while (std::next_permutation(s.begin(), s.end()));
    ++valid;
  }
}

TEST_CASE("search_rational_points examples") {
  const auto hex = search_rational_points(6, 2);
  const RationalPointCandidate centroid{{q(0), q(0)}, std::vector<Rational>(6, q(1))};
  CHECK(std::find(hex.begin(), hex.end(), centroid) != hex.end());

  const auto tri = search_rational_points(3, 2);
  const RationalPointCandidate vertex{{q(0), q(0)}, {q(0), q(1), q(1)}};
  CHECK(std::find(tri.begin(), tri.end(), vertex) != tri.end());
  const RationalPointCandidate other{{q(1), q(0)}, {q(1), q(0), q(1)}};
  CHECK(std::find(tri.begin(), tri.end(), other) != tri.end());
  const RationalPointCandidate top{{q(1, 2), q(1, 2)}, {q(1), q(1), q(0)}};
  CHECK(std::find(tri.begin(), tri.end(), top) != tri.end());

  CHECK(search_rational_points(4, 8).empty());
  CHECK_THROWS_AS(search_rational_points(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(search_rational_points(4, 0), std::invalid_argument);
}

TEST_CASE("search candidates re-certify and are sorted, unique and worker-independent") {
  for (unsigned n : {3u, 6u}) {
    const auto a = search_rational_points(n, 4, 1);
    const auto b = search_rational_points(n, 4, 3);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const auto& x, const auto& y) { return x.parameters < y.parameters; }));
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].parameters != a[i].parameters);
    for (const auto& c : a) {
      const auto d2 = search_squared_distances(n, c.parameters);
      REQUIRE(d2.size() == c.distances.size());
      for (std::size_t i = 0; i < d2.size(); ++i) {
        CHECK(c.distances[i].sign() >= 0);
        CHECK(c.distances[i] * c.distances[i] == d2[i]);
      }
    }
  }
}

TEST_CASE("search vertices are unit polygons") {
  // n = 3, 6 vertices are (x, t) meaning (x, t sqrt 3): side^2 = dx^2 + 3 dt^2.
  for (unsigned n : {3u, 4u, 6u}) {
    const auto v = search_vertices(n);
    const Rational w = n == 4 ? Rational(1) : Rational(3);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& [x0, y0] = v[i];
      const auto& [x1, y1] = v[(i + 1) % v.size()];
      CHECK((x1 - x0) * (x1 - x0) + w * (y1 - y0) * (y1 - y0) == Rational(1));
    }
  }
}

TEST_CASE("candidate CSV and JSON") {
  std::ostringstream os;
  write_candidates_csv(os, 6, {{{q(0), q(0)}, std::vector<Rational>(6, q(1))}});
  CHECK(os.str() == "parameters,distances,n\n0;0,1;1;1;1;1;1,6\n");
  const nlohmann::json j = to_json(RationalPointCandidate{{q(1, 2), q(0)}, {q(1, 2)}});
  CHECK(j["parameters"][0]["num"] == "1");
  CHECK(j["parameters"][0]["den"] == "2");
}

}  // TEST_SUITE
