#include "tttest/csv.hpp"

#include "tttest/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>

namespace ttt::csv {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view field) {
    field = trim(field);
    if (field.empty()) return std::nullopt;
    if (field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

// Calls on_row(fields, line_number) for each data row.
template <typename OnRow>
void for_each_row(std::istream& in, std::size_t expected_columns, OnRow on_row) {
    std::string line;
    std::size_t line_number = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_number;
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto fields = split(body);
        std::vector<double> numbers;
        bool numeric = fields.size() == expected_columns;
        for (const auto f : fields) {
            const auto v = parse_number(f);
            if (!v) {
                numeric = false;
                break;
            }
            numbers.push_back(*v);
        }
        if (!numeric) {
            if (first_content_line) {
                first_content_line = false;
                continue;  // header
            }
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_number) + ": expected " +
                            std::to_string(expected_columns) + " numeric column(s), got '" +
                            std::string(body) + "'");
        }
        first_content_line = false;
        on_row(numbers);
    }
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return in;
}

}  // namespace

std::vector<double> read_column(std::istream& in) {
    std::vector<double> out;
    for_each_row(in, 1, [&](const std::vector<double>& row) { out.push_back(row[0]); });
    return out;
}

std::vector<std::pair<double, double>> read_pairs(std::istream& in) {
    std::vector<std::pair<double, double>> out;
    for_each_row(in, 2, [&](const std::vector<double>& row) { out.emplace_back(row[0], row[1]); });
    return out;
}

Sample read_sample(const std::filesystem::path& path) {
    auto in = open(path);
    return Sample::ingest(read_column(in));
}

PairedSample read_paired_sample(const std::filesystem::path& path) {
    auto in = open(path);
    const auto pairs = read_pairs(in);
    return PairedSample::ingest(pairs);
}

}  // namespace ttt::csv
