#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridcarbon::cli
{

// Exit codes: 0 success, 1 validation/usage error, 2 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Environment variable naming a default CEF override table.
inline constexpr char const* kCefTableEnv = "GRIDCARBON_CEF_TABLE";

// args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace gridcarbon::cli
