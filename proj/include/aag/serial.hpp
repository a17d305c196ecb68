#pragma once

#include <json.hpp>

#include "aag/platform.hpp"

namespace aag {

/// Rationals travel as plain JSON integers when they fit, "p/q" strings
/// otherwise; vectors as arrays of those. Shared by the fixture and
/// transcript formats. Parse failures raise FixtureError.
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& q);
VecQ vector_from_json(const nlohmann::json& j, Index expected_len, const char* what);
nlohmann::json vector_to_json(const VecQ& v);

}  // namespace aag
