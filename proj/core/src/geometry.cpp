#include "polyflat/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "polyflat/numeric.hpp"

namespace polyflat {

ExactPoint::ExactPoint(CycloElt x_coord, CycloElt y_coord) : x(std::move(x_coord)), y(std::move(y_coord)) {
  if (x.index() != y.index()) throw std::invalid_argument("point coordinates must share an index");
}

ExactPoint ExactPoint::rational(unsigned index, const Rational& x, const Rational& y) {
  return {CycloElt::rational(index, x), CycloElt::rational(index, y)};
}

bool ExactPoint::is_real() const {
  const unsigned conj = index() - 1;
  return galois_fixes(conj, x) && galois_fixes(conj, y);
}

ExactPoint ExactPoint::lifted(unsigned index) const { return {lift(x, index), lift(y, index)}; }

CycloElt squared_distance(const ExactPoint& p, const ExactPoint& q) {
  const CycloElt dx = q.x - p.x;
  const CycloElt dy = q.y - p.y;
  return dx * dx + dy * dy;
}

CycloElt signed_area(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r) {
  const CycloElt cross = (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
  return cross * Rational(1, 2);
}

UnitPolygon unit_polygon(unsigned n) {
  if (n < 3) throw std::invalid_argument("unit_polygon needs n >= 3");
  const unsigned index = 4 * n;
  // R = 1 / (2 sin(pi/n)), sin(pi/n) = sin(2 pi / 2n)
  const CycloElt sin_half = lift(sin_2pi_over(2 * n, 1), index);
  const CycloElt radius = (sin_half * Rational(2)).inverse();

  UnitPolygon polygon;
  polygon.n = n;
  polygon.circumradius = radius;
  polygon.vertices.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    CycloElt c = lift(cos_2pi_over(n, k), index);
    CycloElt s = lift(sin_2pi_over(n, k), index);
    polygon.vertices.emplace_back(radius * c, radius * s);
  }
  const CycloElt one = CycloElt::rational(index, 1);
  for (unsigned k = 0; k < n; ++k) {
    if (squared_distance(polygon.vertices[k], polygon.vertices[(k + 1) % n]) != one) {
      throw std::logic_error("unit polygon side is not exactly 1");
    }
  }
  return polygon;
}

namespace {

CycloElt polygon_area(const UnitPolygon& polygon) {
  const unsigned index = polygon.vertices.front().index();
  const ExactPoint origin = ExactPoint::rational(index, 0, 0);
  CycloElt area = CycloElt::rational(index, 0);
  for (unsigned i = 0; i < polygon.n; ++i) {
    area += signed_area(origin, polygon.vertices[i], polygon.vertices[(i + 1) % polygon.n]);
  }
  return area;
}

std::string approx(const CycloElt& u) {
  return numeric::evaluate(u).re.str(20, std::ios_base::fmtflags(0));
}

constexpr std::size_t kMinPolyDegreeLimit = 12;

}  // namespace

Certificate area_identity_check(const UnitPolygon& polygon, const ExactPoint& p) {
  const unsigned poly_index = polygon.vertices.front().index();
  const auto index = static_cast<unsigned>(lcm_u(poly_index, p.index()));
  const ExactPoint point = p.lifted(index);

  CycloElt sum = CycloElt::rational(index, 0);
  nlohmann::json terms = nlohmann::json::array();
  std::size_t degenerate = 0;
  for (unsigned i = 0; i < polygon.n; ++i) {
    const CycloElt t = signed_area(point, polygon.vertices[i].lifted(index),
                                   polygon.vertices[(i + 1) % polygon.n].lifted(index));
    if (t.is_zero()) ++degenerate;
    terms.push_back(approx(t));
    sum += t;
  }
  const CycloElt expected = lift(cot_pi_over(polygon.n) * Rational(polygon.n, 4), index);
  const CycloElt from_vertices = lift(polygon_area(polygon), index);
  const bool ok = sum == expected && from_vertices == expected;

  Certificate cert;
  cert.claim = "thm1.area_identity";
  cert.inputs = {{"n", polygon.n}, {"point", {{"x", to_json(p.x)}, {"y", to_json(p.y)}}}};
  cert.verdict = ok ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"signed_area_sum", to_json(sum)},
                  {"polygon_area", to_json(expected)},
                  {"degenerate_terms", degenerate},
                  {"term_approximations", terms}};
  return cert;
}

Certificate polygon_area_formula_check(unsigned n) {
  const nlohmann::json inputs = {{"n", n}};
  const std::string claim = "thm1.area_formula";
  if (n < 3) return Certificate::failure(claim, inputs, "bad_argument", "need n >= 3");
  const UnitPolygon polygon = unit_polygon(n);
  const CycloElt area = polygon_area(polygon);
  const CycloElt formula = cot_pi_over(n) * Rational(n, 4);
  const bool ok = area == formula;

  Certificate cert;
  cert.claim = claim;
  cert.inputs = inputs;
  cert.verdict = ok ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"area", to_json(area)}, {"formula", to_json(formula)}, {"approximation", approx(area)}};
  const std::size_t degree = algebraic_degree(area);
  cert.payload["degree"] = degree;
  cert.payload["min_poly"] = degree <= kMinPolyDegreeLimit ? to_json(min_poly(area)) : nlohmann::json(nullptr);
  return cert;
}

Rational heron_area_squared(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() < 0 || b.sign() < 0 || c.sign() < 0) throw std::domain_error("negative side length");
  const Rational s = (a + b + c) / Rational(2);
  const Rational product = s * (s - a) * (s - b) * (s - c);
  if (product.sign() < 0) throw std::domain_error("sides violate the triangle inequality");
  return product;
}

// --- Rational-distance search ---------------------------------------------------

std::vector<Rational> bounded_rationals(unsigned bound, bool nonnegative) {
  std::vector<Rational> out;
  for (unsigned v = 1; v <= bound; ++v) {
    for (unsigned u = 0; u <= bound; ++u) {
      out.emplace_back(BigInt(u), BigInt(v));
      if (!nonnegative && u != 0) out.emplace_back(-BigInt(u), BigInt(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Rational, Rational>> search_vertices(unsigned n) {
  const Rational h(1, 2);
  switch (n) {
    case 3: return {{0, 0}, {1, 0}, {h, h}};
    case 4: return {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    case 6: return {{1, 0}, {h, h}, {-h, h}, {-1, 0}, {-h, -h}, {h, -h}};
    default: throw std::invalid_argument("rational-distance search supports n in {3, 4, 6}");
  }
}

std::vector<Rational> search_squared_distances(unsigned n, const std::vector<Rational>& parameters) {
  if (parameters.size() != 2) throw std::invalid_argument("expected two parameters");
  // For n = 3, 6 the second coordinate is scaled by sqrt 3, so dy^2 gains a factor 3.
  const Rational y_weight = n == 4 ? Rational(1) : Rational(3);
  std::vector<Rational> out;
  for (const auto& [vx, vy] : search_vertices(n)) {
    const Rational dx = parameters[0] - vx;
    const Rational dy = parameters[1] - vy;
    out.push_back(dx * dx + y_weight * dy * dy);
  }
  return out;
}

namespace {

std::optional<RationalPointCandidate> certify(unsigned n, std::vector<Rational> parameters) {
  RationalPointCandidate c;
  for (const auto& d2 : search_squared_distances(n, parameters)) {
    auto d = is_square_rational(d2);
    if (!d) return std::nullopt;
    c.distances.push_back(*d);
  }
  c.parameters = std::move(parameters);
  return c;
}

}  // namespace

std::vector<RationalPointCandidate> search_rational_points(unsigned n, unsigned bound, unsigned workers,
                                                           const ProgressFn& progress) {
  if (n != 3 && n != 4 && n != 6) throw std::invalid_argument("rational-distance search supports n in {3, 4, 6}");
  if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
  const std::vector<Rational> values = bounded_rationals(bound, n == 4);

  auto scan = [&](std::size_t i) {
    std::vector<RationalPointCandidate> hits;
    const Rational& first = values[i];
    for (const Rational& second : values) {
      if (n != 4) {
        if (auto c = certify(n, {first, second})) hits.push_back(std::move(*c));
        continue;
      }
      // first = distance to (0,0), second = distance to (1,0)
      const Rational r1sq = first * first;
      const Rational x = (r1sq - second * second + Rational(1)) / Rational(2);
      auto y = is_square_rational(r1sq - x * x);
      if (!y) continue;
      std::vector<Rational> ys{*y};
      if (!y->is_zero()) ys.push_back(-*y);
      for (const Rational& yv : ys) {
        if (auto c = certify(n, {x, yv})) hits.push_back(std::move(*c));
      }
    }
    return hits;
  };

  std::vector<RationalPointCandidate> all;
  for (auto& part : parallel_map(values.size(), workers, scan, progress)) {
    for (auto& c : part) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(),
            [](const RationalPointCandidate& a, const RationalPointCandidate& b) { return a.parameters < b.parameters; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

nlohmann::json to_json(const RationalPointCandidate& c) {
  nlohmann::json params = nlohmann::json::array();
  nlohmann::json dists = nlohmann::json::array();
  for (const auto& q : c.parameters) params.push_back(to_json(q));
  for (const auto& q : c.distances) dists.push_back(to_json(q));
  return {{"parameters", params}, {"distances", dists}};
}

void write_candidates_csv(std::ostream& os, unsigned n, const std::vector<RationalPointCandidate>& candidates) {
  auto join = [](const std::vector<Rational>& qs) {
    std::string out;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (i != 0) out += ';';
      out += qs[i].str();
    }
    return out;
  };
  os << "parameters,distances,n\n";
  for (const auto& c : candidates) os << join(c.parameters) << ',' << join(c.distances) << ',' << n << '\n';
}

}  // namespace polyflat
