#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "repstab/symfunc.hpp"

namespace repstab {

/// Schur expansion text such as "3*s[4,1] + s[3,2] - 1/2*s[]"; "0" for zero.
/// Power-basis input is converted to Schur first.
std::string to_text(const SymmetricFunction& f);

/// Inverse of to_text. Accepts s[...] and p[...] terms; the result is in the
/// basis of the first term (Schur when zero).
SymmetricFunction parse_text(std::string_view text);

/// {"[4,1]": "3/1", ...} over the Schur expansion.
nlohmann::json to_json(const SymmetricFunction& f);
SymmetricFunction from_json(const nlohmann::json& j);

}  // namespace repstab
