#pragma once

#include <string>

#include <json.hpp>

namespace fqcoh {

enum class Status { pass, fail, mismatch, skipped };

inline const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

/**
 * Outcome of a proposition, axiom or basis-theorem check.
 *
 * A fail always carries a counterexample in `details` (a cochain with a point
 * where its coboundary is nonzero, a violating tuple, or a dimension pair).
 */
struct VerificationReport {
  std::string subject;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  Status status = Status::pass;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::string field;
  std::string omega;
  std::string beta;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["parameters"] = parameters;
    j["status"] = status_name(status);
    j["environment"] = {{"field", field}, {"omega", omega}, {"beta", beta}};
    j["details"] = details;
    return j;
  }
};

}  // namespace fqcoh
