#pragma once

#include <string>

#include "json.hpp"
#include "metanil/criterion.hpp"

namespace metanil {

/// JSON forms of the report types ("schema": 1 at the document level).
/// Durations are milliseconds; when `include_timing` is false the field
/// is emitted as 0 so canonical-mode reports are byte-identical across
/// runs and worker counts.
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json condition_to_json(const ConditionReport& r, bool include_timing);
nlohmann::json theorem_to_json(const TheoremVerdict& v);
nlohmann::json corollary_to_json(const CorollaryVerdict& v);

std::string witness_text(const Witness& w);

}  // namespace metanil
