#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ttt::cli {

/// Exit codes: 0 on completion (a rejection is a result, not a failure),
/// 1 for data or I/O errors, 2 for usage errors.
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttt::cli
