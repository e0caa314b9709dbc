#pragma once

#include <iosfwd>
#include <vector>

#include "polyflat/certificate.hpp"
#include "polyflat/cyclotomic.hpp"
#include "polyflat/parallel.hpp"
#include "polyflat/rational.hpp"

namespace polyflat {

/// Point with real coordinates in a shared cyclotomic field.
struct ExactPoint {
  CycloElt x;
  CycloElt y;

  /// Throws std::invalid_argument if the coordinates have different indices.
  ExactPoint(CycloElt x_coord, CycloElt y_coord);
  static ExactPoint rational(unsigned index, const Rational& x, const Rational& y);

  unsigned index() const { return x.index(); }
  /// Both coordinates fixed by complex conjugation (a = m - 1).
  bool is_real() const;
  ExactPoint lifted(unsigned index) const;

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

/// Regular n-gon with unit side, centred at the origin with a vertex at angle 0,
/// counterclockwise, coordinates in index 4n.
struct UnitPolygon {
  unsigned n = 0;
  std::vector<ExactPoint> vertices;
  CycloElt circumradius = CycloElt::rational(1, 0);
};

/// Throws std::invalid_argument for n < 3, std::logic_error if a side is not exactly 1.
UnitPolygon unit_polygon(unsigned n);

CycloElt squared_distance(const ExactPoint& p, const ExactPoint& q);

/// ((q - p) x (r - p)) / 2: positive for counterclockwise p, q, r.
CycloElt signed_area(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r);

/// Sum over i of signed_area(p, A_i, A_{i+1}) against area(P_n) computed
/// from the origin; the shoelace identity makes them equal for every p.
Certificate area_identity_check(const UnitPolygon& polygon, const ExactPoint& p);

/// area(P_n) from the vertices equals (n/4) cot(pi/n).
Certificate polygon_area_formula_check(unsigned n);

/// s(s - a)(s - b)(s - c). Throws std::domain_error when negative (triangle inequality fails).
Rational heron_area_squared(const Rational& a, const Rational& b, const Rational& c);

/// A certified point at rational distance from every vertex.
struct RationalPointCandidate {
  /// n = 4: (x, y). n = 3, 6: (x, t) for the point (x, t sqrt 3).
  std::vector<Rational> parameters;
  /// Distance to each vertex, in vertex order.
  std::vector<Rational> distances;

  friend bool operator==(const RationalPointCandidate&, const RationalPointCandidate&) = default;
};

/// Vertex coordinates used by the search, as (x, y) for n = 4 and as
/// (x, t) meaning (x, t sqrt 3) for n = 3, 6.
std::vector<std::pair<Rational, Rational>> search_vertices(unsigned n);

/// Exact squared distances from the parametrized point to each search vertex.
std::vector<Rational> search_squared_distances(unsigned n, const std::vector<Rational>& parameters);

/// Rationals u/v with |u| <= bound and 1 <= v <= bound (nonnegative only when
/// `nonnegative`), ascending.
std::vector<Rational> bounded_rationals(unsigned bound, bool nonnegative);

/// Exhaustive bounded search for rational-distance points of the unit n-gon,
/// n in {3, 4, 6}. Results are certified and sorted by parameters.
///
/// n = 4: corners (0,0), (1,0), (1,1), (0,1); distances r1, r2 >= 0 to the
///   first two corners are enumerated, x = (r1^2 - r2^2 + 1)/2, and
///   y = +-sqrt(r1^2 - x^2) must be rational.
/// n = 3: vertices (0,0), (1,0), (1/2, sqrt3/2); points (x, t sqrt 3).
/// n = 6: vertices (+-1, 0), (+-1/2, +-sqrt3/2); points (x, t sqrt 3).
///
/// For n = 3, 6 the difference of squared distances to two vertices is
/// linear in (x, y), so a rational-distance point has x rational and y in
/// Q sqrt 3; the (x, t sqrt 3) family therefore loses nothing.
std::vector<RationalPointCandidate> search_rational_points(unsigned n, unsigned bound, unsigned workers = 0,
                                                           const ProgressFn& progress = {});

nlohmann::json to_json(const RationalPointCandidate& c);

/// Header "parameters,distances,n"; rationals within a field joined by ';'.
void write_candidates_csv(std::ostream& os, unsigned n, const std::vector<RationalPointCandidate>& candidates);

}  // namespace polyflat
