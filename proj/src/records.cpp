#include "gridcarbon/records.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace gridcarbon
{

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "json-records" || name == "json")
    {
        return OutputFormat::JsonRecords;
    }
    if (name == "csv")
    {
        return OutputFormat::Csv;
    }
    return std::nullopt;
}

Record& Record::add(std::string key, FieldValue value)
{
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
}

Record& Record::add(std::string key, char const* value)
{
    return add(std::move(key), FieldValue{std::string(value)});
}

Record& Record::add(std::string key, std::string value)
{
    return add(std::move(key), FieldValue{std::move(value)});
}

Record& Record::add(std::string key, double value)
{
    return add(std::move(key), FieldValue{value});
}

Record& Record::add(std::string key, bool value)
{
    return add(std::move(key), FieldValue{value});
}

Record& Record::add(std::string key, std::int64_t value)
{
    return add(std::move(key), FieldValue{value});
}

Record& Record::add(std::string key, std::optional<double> value)
{
    return value ? add(std::move(key), FieldValue{*value})
                 : add(std::move(key), FieldValue{});
}

std::string format_value(double value)
{
    if (value == 0.0)
    {
        return "0"; // folds -0
    }
    return fmt::format("{:.6g}", value);
}

namespace
{

std::string as_json(FieldValue const& v)
{
    return std::visit(
        [](auto const& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>)
            {
                return "null";
            }
            else if constexpr (std::is_same_v<T, bool>)
            {
                return x ? "true" : "false";
            }
            else if constexpr (std::is_same_v<T, std::int64_t>)
            {
                return std::to_string(x);
            }
            else if constexpr (std::is_same_v<T, double>)
            {
                return std::isfinite(x) ? format_value(x) : "null";
            }
            else
            {
                return nlohmann::json(x).dump();
            }
        },
        v
    );
}

std::string csv_escape(std::string const& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
    {
        return s;
    }
    std::string out = "\"";
    for (char ch : s)
    {
        if (ch == '"')
        {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

std::string as_csv(FieldValue const& v)
{
    if (auto const* s = std::get_if<std::string>(&v))
    {
        return csv_escape(*s);
    }
    if (std::holds_alternative<std::monostate>(v))
    {
        return "";
    }
    if (auto const* d = std::get_if<double>(&v); d && !std::isfinite(*d))
    {
        return "";
    }
    return as_json(v);
}

} // namespace

void write_records(
    std::span<Record const> records,
    OutputFormat format,
    std::ostream& out
)
{
    if (format == OutputFormat::JsonRecords)
    {
        for (auto const& r : records)
        {
            out << '{';
            for (std::size_t i = 0; i < r.fields.size(); ++i)
            {
                if (i > 0)
                {
                    out << ',';
                }
                out << nlohmann::json(r.fields[i].first).dump() << ':'
                    << as_json(r.fields[i].second);
            }
            out << "}\n";
        }
        return;
    }

    std::vector<std::string> columns;
    for (auto const& r : records)
    {
        for (auto const& [key, value] : r.fields)
        {
            if (std::find(columns.begin(), columns.end(), key) == columns.end())
            {
                columns.push_back(key);
            }
        }
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
    {
        out << (i > 0 ? "," : "") << csv_escape(columns[i]);
    }
    out << '\n';
    for (auto const& r : records)
    {
        for (std::size_t i = 0; i < columns.size(); ++i)
        {
            if (i > 0)
            {
                out << ',';
            }
            auto it = std::find_if(
                r.fields.begin(),
                r.fields.end(),
                [&](auto const& f) { return f.first == columns[i]; }
            );
            if (it != r.fields.end())
            {
                out << as_csv(it->second);
            }
        }
        out << '\n';
    }
}

} // namespace gridcarbon
