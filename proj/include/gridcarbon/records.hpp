#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gridcarbon
{

enum class OutputFormat
{
    JsonRecords,
    Csv,
};

std::optional<OutputFormat> parse_output_format(std::string_view name);

using FieldValue
    = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

// Ordered key/value row. Reports are flat lists of these.
struct Record
{
    std::vector<std::pair<std::string, FieldValue>> fields;

    Record& add(std::string key, FieldValue value);
    Record& add(std::string key, char const* value);
    Record& add(std::string key, std::string value);
    Record& add(std::string key, double value);
    Record& add(std::string key, bool value);
    Record& add(std::string key, std::int64_t value);
    Record& add(std::string key, std::optional<double> value);
};

// Doubles are written with 6 significant digits so reruns are
// byte-identical. JSON records are one object per line; CSV uses the union
// of keys in first-seen order and leaves missing fields empty.
void write_records(
    std::span<Record const> records,
    OutputFormat format,
    std::ostream& out
);

std::string format_value(double value);

} // namespace gridcarbon
