#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace gridcarbon
{

using Timestamp = std::chrono::sys_seconds;

// Accepts "YYYY-MM-DDTHH:00:00Z" (canonical) and the "YYYY-MM-DD HH:00:00"
// variant used by some exports. Only whole hours are accepted.
Timestamp parse_hour_timestamp(std::string_view text);

// Always emits the canonical UTC form.
std::string format_timestamp(Timestamp ts);

} // namespace gridcarbon
