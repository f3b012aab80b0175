#pragma once

#include <span>
#include <string>

#include "spectough/families.hpp"
#include "spectough/invariants.hpp"
#include "spectough/verify.hpp"

namespace spectough {

// JSON views of the reports. Rationals are strings ("p/q" or "inf"),
// undefined values are null and vertex sets are sorted index arrays.
// Output is indented with two spaces and ends in a newline.

std::string to_json(const InvariantReport& report);
std::string to_json(const Verdict& verdict);
/// {"verdicts": [...], "respected": all respected}
std::string to_json(std::span<const Verdict> verdicts);
/// runtime_seconds is written only when include_runtime is set, so that the
/// default output is byte-stable.
std::string to_json(const SearchReport& report, bool include_runtime = false);

}  // namespace spectough
