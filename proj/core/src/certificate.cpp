#include "polyflat/certificate.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace polyflat {

namespace {
constexpr std::array<std::pair<Verdict, std::string_view>, 5> kVerdicts{{
    {Verdict::verified, "verified"},
    {Verdict::refuted, "refuted"},
    {Verdict::witness_found, "witness_found"},
    {Verdict::exhausted_no_witness, "exhausted_no_witness"},
    {Verdict::error, "error"},
}};
}  // namespace

std::string_view to_string(Verdict v) {
  for (const auto& [verdict, name] : kVerdicts) {
    if (verdict == v) return name;
  }
  return "error";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (const auto& [verdict, name] : kVerdicts) {
    if (name == text) return verdict;
  }
  return std::nullopt;
}

Certificate Certificate::failure(std::string claim, nlohmann::json inputs, std::string_view reason,
                                 std::string_view message) {
  Certificate c;
  c.claim = std::move(claim);
  c.inputs = std::move(inputs);
  c.verdict = Verdict::error;
  c.payload = {{"reason", std::string(reason)}, {"message", std::string(message)}};
  return c;
}

std::string Certificate::reason() const {
  if (payload.is_object() && payload.contains("reason") && payload["reason"].is_string()) {
    return payload["reason"].get<std::string>();
  }
  return {};
}

nlohmann::json to_json(const Certificate& c) {
  return {
      {"schema", std::string(kSchema)}, {"claim", c.claim},     {"inputs", c.inputs},
      {"verdict", to_string(c.verdict)}, {"payload", c.payload}, {"version", c.version},
  };
}

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchema) {
    throw std::invalid_argument("not a polyflat certificate");
  }
  Certificate c;
  c.claim = j.at("claim").get<std::string>();
  c.inputs = j.at("inputs");
  auto verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!verdict) throw std::invalid_argument("unknown verdict");
  c.verdict = *verdict;
  c.payload = j.at("payload");
  c.version = j.at("version").get<std::string>();
  return c;
}

nlohmann::json to_json(const Rational& q) { return {{"num", q.num().get_str()}, {"den", q.den().get_str()}}; }

Rational rational_from_json(const nlohmann::json& j) {
  BigInt num;
  BigInt den;
  if (num.set_str(j.at("num").get<std::string>(), 10) != 0 || den.set_str(j.at("den").get<std::string>(), 10) != 0) {
    throw std::invalid_argument("malformed rational in JSON");
  }
  Rational q(num, den);
  if (q.num() != num || q.den() != den) throw std::invalid_argument("rational in JSON is not in lowest terms");
  return q;
}

nlohmann::json to_json(const Poly& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return {{"coefficients", coeffs}, {"text", f.str()}};
}

Poly poly_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

nlohmann::json to_json(const CycloElt& u) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : u.rep().coeffs()) coeffs.push_back(to_json(c));
  return {{"index", u.index()}, {"coefficients", coeffs}};
}

CycloElt cyclo_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_json(c));
  return CycloElt(j.at("index").get<unsigned>(), Poly(std::move(coeffs)));
}

}  // namespace polyflat
