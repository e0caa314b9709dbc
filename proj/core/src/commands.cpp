#include "polyflat/commands.hpp"

#include <fstream>
#include <random>
#include <set>
#include <stdexcept>

#include "polyflat/flatness.hpp"
#include "polyflat/geometry.hpp"
#include "polyflat/sqrt_sums.hpp"

namespace polyflat {

namespace {

const std::set<std::string> kUsageReasons = {"unknown_claim", "malformed_args", "bad_argument",
                                             "unsupported_n", "unsupported_q",  "not_divisor",
                                             "not_prime",     "hypothesis_failed", "nonpositive_input",
                                             "negative_radicand", "triangle_inequality", "too_many_primes"};

unsigned parse_unsigned(const std::string& text) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw ClaimError("malformed_args", "expected a nonnegative integer, got '" + text + "'");
  }
  if (used != text.size() || text.front() == '-' || v > 1'000'000UL) {
    throw ClaimError("malformed_args", "expected a nonnegative integer, got '" + text + "'");
  }
  return static_cast<unsigned>(v);
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw ClaimError("malformed_args", e.what());
  }
}

void require_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (args.size() < lo || args.size() > hi) throw ClaimError("malformed_args", "usage: verify " + usage);
}

nlohmann::json args_json(const std::vector<std::string>& args) { return {{"args", args}}; }

// Rational points with numerators in [-range, range] and denominators in [1, range].
std::vector<std::pair<Rational, Rational>> seeded_points(unsigned n, std::size_t count) {
  std::mt19937_64 rng(0x5eed0000ULL + n);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rational x(BigInt(num(rng)), BigInt(den(rng)));
    Rational y(BigInt(num(rng)), BigInt(den(rng)));
    out.emplace_back(x, y);
  }
  return out;
}

Certificate verify_area_identity(unsigned n, const std::vector<std::pair<Rational, Rational>>& points) {
  const UnitPolygon polygon = unit_polygon(n);
  const unsigned index = 4 * n;
  nlohmann::json results = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& [x, y] : points) {
    const Certificate c = area_identity_check(polygon, ExactPoint::rational(index, x, y));
    if (c.verdict == Verdict::verified) ++passed;
    results.push_back({{"x", to_json(x)},
                       {"y", to_json(y)},
                       {"verdict", to_string(c.verdict)},
                       {"degenerate_terms", c.payload["degenerate_terms"]}});
  }
  Certificate cert;
  cert.claim = "thm1.area_identity";
  cert.inputs = {{"n", n}, {"points", points.size()}};
  cert.verdict = passed == points.size() ? Verdict::verified : Verdict::refuted;
  cert.payload = {{"passed", passed}, {"points", results},
                  {"polygon_area", to_json(cot_pi_over(n) * Rational(n, 4))}};
  return cert;
}

Certificate dispatch_verify(const std::string& claim, const std::vector<std::string>& args) {
  if (claim == "prop1") {
    require_args(args, 2, 2, "prop1 N D");
    return verify_prop1(parse_unsigned(args[0]), parse_unsigned(args[1]));
  }
  if (claim == "prop2") {
    require_args(args, 1, 64, "prop2 R1 [R2 ...]");
    std::vector<Rational> rs;
    for (const auto& a : args) rs.push_back(parse_rational(a));
    return prop2_check(rs);
  }
  if (claim == "prop3") {
    require_args(args, 1, 1, "prop3 N   (N = 5 or 16)");
    return prop3_check(parse_unsigned(args[0]));
  }
  if (claim == "prop4") {
    require_args(args, 1, 1, "prop4 Q");
    return prop4_check(parse_unsigned(args[0]));
  }
  if (claim == "lemma") {
    require_args(args, 4, 4, "lemma P A B C");
    return lemma_quartic_check(static_cast<long>(parse_unsigned(args[0])), parse_rational(args[1]),
                               parse_rational(args[2]), parse_rational(args[3]));
  }
  if (claim == "area-formula") {
    require_args(args, 1, 1, "area-formula N");
    return polygon_area_formula_check(parse_unsigned(args[0]));
  }
  if (claim == "area-identity") {
    if (args.size() != 1 && args.size() != 3) throw ClaimError("malformed_args", "usage: verify area-identity N [X Y]");
    const unsigned n = parse_unsigned(args[0]);
    if (n < 3) throw ClaimError("bad_argument", "need n >= 3");
    if (args.size() == 3) return verify_area_identity(n, {{parse_rational(args[1]), parse_rational(args[2])}});
    return verify_area_identity(n, seeded_points(n, 20));
  }
  if (claim == "heron") {
    require_args(args, 3, 3, "heron A B C");
    const Rational a = parse_rational(args[0]);
    const Rational b = parse_rational(args[1]);
    const Rational c = parse_rational(args[2]);
    Rational area2;
    try {
      area2 = heron_area_squared(a, b, c);
    } catch (const std::domain_error& e) {
      throw ClaimError("triangle_inequality", e.what());
    }
    const MultiQuadElt area = MultiQuadElt::from_sqrt(area2);
    Certificate cert;
    cert.claim = "thm1.heron";
    cert.inputs = {{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
    cert.verdict = Verdict::verified;
    cert.payload = {{"area_squared", to_json(area2)},
                    {"area", area.str()},
                    {"area_is_rational", area.as_rational().has_value()}};
    return cert;
  }
  if (claim == "remark") {
    require_args(args, 1, 1, "remark N");
    const unsigned n = parse_unsigned(args[0]);
    if (n < 3) throw ClaimError("bad_argument", "need n >= 3");
    const DegreeCheck check = remark_degree_check(n);
    const unsigned long phi = euler_phi(n);
    const bool constructible = (phi & (phi - 1)) == 0;
    Certificate cert;
    cert.claim = "remark.degree";
    cert.inputs = {{"n", n}};
    // Non-constructible n must give a degree with an odd factor.
    cert.verdict = (constructible || !check.power_of_two) ? Verdict::verified : Verdict::refuted;
    cert.payload = {{"degree", check.degree},
                    {"power_of_two", check.power_of_two},
                    {"constructible", constructible}};
    return cert;
  }
  throw ClaimError("unknown_claim", "unknown claim '" + claim + "'");
}

}  // namespace

int exit_code(const Certificate& c) {
  switch (c.verdict) {
    case Verdict::verified:
    case Verdict::witness_found: return 0;
    case Verdict::refuted:
    case Verdict::exhausted_no_witness: return 1;
    case Verdict::error: return kUsageReasons.contains(c.reason()) ? 2 : 3;
  }
  return 3;
}

std::vector<unsigned> known_flat_set(unsigned max_n) {
  std::vector<unsigned> out;
  for (unsigned n : {3U, 4U, 6U, 8U, 12U, 24U}) {
    if (n <= max_n) out.push_back(n);
  }
  return out;
}

std::vector<Certificate> cmd_classify(unsigned max_n, const CommandOptions& opts) {
  if (max_n < 3) {
    return {Certificate::failure("prop5.classify", {{"max_n", max_n}}, "bad_argument", "--max-n must be >= 3")};
  }
  const std::vector<FlatReport> reports = classify_range(3, max_n, opts.workers, opts.progress);
  std::vector<Certificate> out;
  out.reserve(reports.size() + 1);
  std::vector<unsigned> flat;
  for (const auto& r : reports) {
    Certificate c;
    c.claim = "prop5.flat_report";
    c.inputs = {{"n", r.n}};
    c.verdict = Verdict::verified;
    c.payload = to_json(r);
    out.push_back(std::move(c));
    if (r.is_flat) flat.push_back(r.n);
  }
  const std::vector<unsigned> expected = known_flat_set(max_n);
  Certificate summary;
  summary.claim = "prop5.classify";
  summary.inputs = {{"max_n", max_n}};
  summary.verdict = flat == expected ? Verdict::verified : Verdict::refuted;
  summary.payload = {{"flat_set", flat}, {"expected_flat_set", expected}, {"count", reports.size()}};
  out.push_back(std::move(summary));
  return out;
}

Certificate cmd_verify(const std::string& claim, const std::vector<std::string>& args, const CommandOptions&) {
  try {
    return dispatch_verify(claim, args);
  } catch (const ClaimError& e) {
    nlohmann::json inputs = args_json(args);
    inputs["claim"] = claim;
    return Certificate::failure(claim, inputs, e.reason(), e.what());
  } catch (const std::invalid_argument& e) {
    nlohmann::json inputs = args_json(args);
    inputs["claim"] = claim;
    return Certificate::failure(claim, inputs, "bad_argument", e.what());
  } catch (const std::exception& e) {
    nlohmann::json inputs = args_json(args);
    inputs["claim"] = claim;
    return Certificate::failure(claim, inputs, "internal", e.what());
  }
}

Certificate cmd_refute(unsigned n, unsigned terms, unsigned bound, const CommandOptions& opts) {
  const nlohmann::json inputs = {{"n", n}, {"terms", terms}, {"bound", bound}};
  const std::string claim = "thm1.refute";
  if (n < 3 || terms < 1 || bound < 1) {
    return Certificate::failure(claim, inputs, "bad_argument", "need n >= 3, terms >= 1, bound >= 1");
  }
  const CycloElt area = cot_pi_over(n) * Rational(n, 4);
  const Poly target = min_poly(area);
  const SearchReport report = refute_or_find_sum(target, terms, bound, opts.workers, opts.progress);
  const FlatReport field = is_flat_cot_field(n);
  const bool obstruction = !field.is_flat;
  if (obstruction && report.witness) {
    return Certificate::failure(claim, inputs, "internal", "witness found for a non-flat field");
  }

  Certificate cert;
  cert.claim = claim;
  cert.inputs = inputs;
  cert.verdict = report.witness ? Verdict::witness_found : Verdict::exhausted_no_witness;
  cert.payload = {
      {"search", to_json(report)},
      {"structural_obstruction",
       {{"applies", obstruction},
        {"field", to_json(field)},
        {"reason", obstruction ? "Q(cot(pi/n)) is not flat; a sum of square roots generates a flat field, "
                                 "so no identity exists for any bound"
                               : "Q(cot(pi/n)) is flat; the obstruction does not apply"}}}};
  return cert;
}

Certificate cmd_search(unsigned n, unsigned bound, const std::optional<std::string>& csv_path,
                       const CommandOptions& opts) {
  nlohmann::json inputs = {{"n", n}, {"bound", bound}};
  const std::string claim = "p1.search";
  if (n != 3 && n != 4 && n != 6) {
    const bool open = n == 8 || n == 12 || n == 24;
    const std::string message =
        n < 3 ? "need n >= 3"
        : open ? "n = " + std::to_string(n) + " is open; no rational-parameter family is implemented"
               : "impossible: the area (n/4)cot(pi/n) generates the non-flat field Q(cot(pi/" + std::to_string(n) + "))";
    return Certificate::failure(claim, inputs, "unsupported_n", message);
  }
  if (bound < 1) return Certificate::failure(claim, inputs, "bad_argument", "--bound must be >= 1");
  const auto hits = search_rational_points(n, bound, opts.workers, opts.progress);
  if (csv_path) {
    std::ofstream out(*csv_path);
    if (!out) return Certificate::failure(claim, inputs, "io_error", "cannot write " + *csv_path);
    write_candidates_csv(out, n, hits);
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& h : hits) list.push_back(to_json(h));
  Certificate cert;
  cert.claim = claim;
  cert.inputs = inputs;
  cert.verdict = hits.empty() ? Verdict::exhausted_no_witness : Verdict::witness_found;
  cert.payload = {{"hit_count", hits.size()},
                  {"candidates", list},
                  {"parametrization", n == 4 ? "(x, y)" : "(x, t) -> (x, t*sqrt(3))"}};
  return cert;
}

}  // namespace polyflat
