#pragma once

#include <string>

#include "json.hpp"

#include "g2char/charring.hpp"
#include "g2char/multiplicity.hpp"
#include "g2char/verify.hpp"

namespace g2char {

inline constexpr const char* kVersion = "0.1.0";

// Character JSON document:
//   {"basis":"ind"|"irr", "window":N|null,
//    "terms":[{"a":..,"b":..,"coeff":..},...], "meta":{"command":..,"version":..}}
// Terms are sorted lexicographically by (a,b) and the field order is fixed,
// so the output is byte-stable for identical inputs.
nlohmann::ordered_json character_document(const VirtualCharacter& vc,
                                          const std::string& command);

// "a,b,coeff" rows in the same order.
std::string character_csv(const VirtualCharacter& vc);

nlohmann::ordered_json weight_system_document(const RootSystem& rs, const WeightSystem& ws,
                                              const std::string& command);
std::string weight_system_csv(const WeightSystem& ws);

nlohmann::ordered_json report_document(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

}  // namespace g2char
