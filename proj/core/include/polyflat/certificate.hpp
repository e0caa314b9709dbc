#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "polyflat/cyclotomic.hpp"
#include "polyflat/poly.hpp"
#include "polyflat/rational.hpp"

namespace polyflat {

inline constexpr std::string_view kVersion = "polyflat 1.0.0";
inline constexpr std::string_view kSchema = "polyflat.certificate/1";

enum class Verdict { verified, refuted, witness_found, exhausted_no_witness, error };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Machine-readable record of one checked claim.
///
/// Error certificates carry payload {"reason": <code>, "message": <text>}.
struct Certificate {
  std::string claim;
  nlohmann::json inputs = nlohmann::json::object();
  Verdict verdict = Verdict::error;
  nlohmann::json payload = nlohmann::json::object();
  std::string version{kVersion};

  static Certificate failure(std::string claim, nlohmann::json inputs, std::string_view reason,
                             std::string_view message);

  bool ok() const { return verdict == Verdict::verified || verdict == Verdict::witness_found; }
  std::string reason() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

nlohmann::json to_json(const Certificate& c);
/// Throws std::invalid_argument on schema mismatch.
Certificate certificate_from_json(const nlohmann::json& j);

// Rationals are {"num": "<decimal>", "den": "<decimal>"} so no integer width is implied.
nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

/// {"coefficients": [...rationals, lowest degree first], "text": "..."}
nlohmann::json to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j);

/// {"index": m, "coefficients": [...]}
nlohmann::json to_json(const CycloElt& u);
CycloElt cyclo_from_json(const nlohmann::json& j);

/// Error carrying a machine-readable reason code, converted to an error certificate by callers.
class ClaimError : public std::runtime_error {
 public:
  ClaimError(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

}  // namespace polyflat
