#pragma once

#include "itx/identities.hpp"

#include "json.hpp"
#include <string>

namespace itx::identities {

inline constexpr const char* kReportSchema = "itx.verification/1";

/// Full per-point data. Non-finite numbers are written as null.
nlohmann::json to_json(const VerificationReport& report);

/// Inverse of to_json; throws std::invalid_argument on a schema mismatch.
VerificationReport from_json(const nlohmann::json& j);

/// One row per point: id,point,lhs,rhs,rel_residual,pass
std::string to_csv(const VerificationReport& report);

/// Human-readable table, 12 significant digits.
std::string to_text(const VerificationReport& report);

}  // namespace itx::identities
