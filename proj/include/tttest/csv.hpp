#pragma once

#include "tttest/sample.hpp"

#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

namespace ttt::csv {

// One numeric column (independent scheme) or two columns x,y (matched pairs).
// A non-numeric first line is treated as a header; blank lines are skipped.

[[nodiscard]] std::vector<double> read_column(std::istream& in);
[[nodiscard]] std::vector<std::pair<double, double>> read_pairs(std::istream& in);

[[nodiscard]] Sample read_sample(const std::filesystem::path& path);
[[nodiscard]] PairedSample read_paired_sample(const std::filesystem::path& path);

}  // namespace ttt::csv
