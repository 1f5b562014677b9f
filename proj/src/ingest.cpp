#include "gridcarbon/ingest.hpp"

#include "gridcarbon/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace gridcarbon
{

namespace
{

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
    {
        return {};
    }
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Comma separated, with double-quoted fields and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        char const ch = line[i];
        if (quoted)
        {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"')
            {
                current += '"';
                ++i;
            }
            else if (ch == '"')
            {
                quoted = false;
            }
            else
            {
                current += ch;
            }
        }
        else if (ch == '"')
        {
            quoted = true;
        }
        else if (ch == ',')
        {
            fields.emplace_back(trim(current));
            current.clear();
        }
        else
        {
            current += ch;
        }
    }
    fields.emplace_back(trim(current));
    return fields;
}

std::optional<double> parse_number(std::string_view text)
{
    if (!text.empty() && text.front() == '+')
    {
        text.remove_prefix(1);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
    {
        return std::nullopt;
    }
    return value;
}

std::string format_number(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

[[noreturn]] void parse_error(
    std::string const& origin,
    std::size_t line,
    std::string const& column,
    std::string const& why
)
{
    std::string msg = origin + ": row " + std::to_string(line);
    if (!column.empty())
    {
        msg += ", column '" + column + "'";
    }
    throw Error(ErrorKind::ParseError, msg + ": " + why);
}

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no)
{
    while (std::getline(in, line))
    {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
        {
            line.erase(0, 3);
        }
        if (!trim(line).empty())
        {
            return true;
        }
    }
    return false;
}

std::optional<std::string>
resolve_source_column(std::string const& name, SourceRegistry const& sources)
{
    if (sources.contains(name))
    {
        return name;
    }
    if (auto cat = parse_category(name))
    {
        std::string canonical(to_string(*cat));
        if (sources.contains(canonical))
        {
            return canonical;
        }
    }
    return std::nullopt;
}

struct Row
{
    Timestamp ts;
    std::size_t line = 0;
    std::vector<double> values;
    std::optional<double> ci;
};

} // namespace

LoadedRegion read_region_csv(
    std::istream& in,
    std::string region,
    CsvSchemaOptions const& options,
    SourceRegistry const& sources,
    std::string const& origin
)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_content_line(in, line, line_no))
    {
        throw Error(ErrorKind::SchemaError, origin + ": missing header row");
    }
    auto const header = split_csv_line(line);

    std::optional<std::size_t> ts_col;
    std::optional<std::size_t> ci_col;
    std::vector<std::pair<std::size_t, std::string>> source_cols;
    std::set<std::string> seen_sources;
    LoadedRegion out;
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        auto const& name = header[i];
        if (name == options.timestamp_column)
        {
            ts_col = i;
        }
        else if (name == options.ci_column)
        {
            ci_col = i;
        }
        else if (auto id = resolve_source_column(name, sources))
        {
            if (!seen_sources.insert(*id).second)
            {
                throw Error(
                    ErrorKind::SchemaError,
                    origin + ": duplicate column for source '" + *id + "'"
                );
            }
            source_cols.emplace_back(i, *id);
        }
        else
        {
            out.summary.ignored_columns.push_back(name);
        }
    }
    if (!ts_col)
    {
        throw Error(
            ErrorKind::SchemaError,
            origin + ": missing timestamp column '" + options.timestamp_column
                + "'"
        );
    }
    if (source_cols.empty())
    {
        throw Error(
            ErrorKind::SchemaError,
            origin + ": no generation columns recognised"
        );
    }

    std::vector<Row> rows;
    while (next_content_line(in, line, line_no))
    {
        ++out.summary.rows_read;
        auto const fields = split_csv_line(line);
        if (fields.size() != header.size())
        {
            parse_error(
                origin,
                line_no,
                "",
                "expected " + std::to_string(header.size()) + " fields, found "
                    + std::to_string(fields.size())
            );
        }
        Row row;
        row.line = line_no;
        try
        {
            row.ts = parse_hour_timestamp(fields[*ts_col]);
        }
        catch (Error const& e)
        {
            parse_error(origin, line_no, header[*ts_col], e.what());
        }

        bool drop = false;
        std::size_t filled = 0;
        auto read_cell = [&](std::size_t col) -> double {
            auto const& cell = fields[col];
            if (cell.empty())
            {
                if (options.fill == FillPolicy::DropRow)
                {
                    drop = true;
                }
                else
                {
                    ++filled;
                }
                return 0.0;
            }
            auto const value = parse_number(cell);
            if (!value)
            {
                parse_error(origin, line_no, header[col], "'" + cell + "' is not a number");
            }
            if (*value < 0.0)
            {
                parse_error(origin, line_no, header[col], "negative value " + cell);
            }
            return *value;
        };
        for (auto const& [col, id] : source_cols)
        {
            row.values.push_back(read_cell(col));
        }
        if (ci_col)
        {
            row.ci = read_cell(*ci_col);
        }
        if (drop)
        {
            ++out.summary.rows_dropped;
            continue;
        }
        out.summary.cells_filled += filled;
        rows.push_back(std::move(row));
    }

    std::stable_sort(rows.begin(), rows.end(), [](Row const& a, Row const& b) {
        return a.ts < b.ts;
    });
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        if (rows[i].ts == rows[i - 1].ts)
        {
            parse_error(
                origin,
                rows[i].line,
                header[*ts_col],
                "duplicate timestamp " + format_timestamp(rows[i].ts)
            );
        }
    }

    std::vector<GridMix> steps;
    steps.reserve(rows.size());
    std::vector<double> ci;
    for (auto const& row : rows)
    {
        EnergyBySource generation;
        for (std::size_t k = 0; k < source_cols.size(); ++k)
        {
            generation[source_cols[k].second] = row.values[k];
        }
        steps.emplace_back(region, std::move(generation), row.ts);
        if (row.ci)
        {
            ci.push_back(*row.ci);
        }
    }

    auto& ds = out.dataset;
    ds.region = region;
    ds.series = MixTimeSeries(region, std::move(steps));
    for (auto const& [col, id] : source_cols)
    {
        ds.source_ids.push_back(id);
    }
    if (ci_col)
    {
        ds.published_ci = std::move(ci);
    }
    if (options.strict_spacing && !ds.series.is_uniform())
    {
        throw Error(
            ErrorKind::GapError,
            origin + ": timestamps are not evenly spaced"
        );
    }
    return out;
}

LoadedRegion load_region_csv(
    std::filesystem::path const& path,
    CsvSchemaOptions const& options,
    SourceRegistry const& sources
)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    }
    auto region = options.region.value_or(path.stem().string());
    return read_region_csv(in, std::move(region), options, sources, path.string());
}

void write_region_csv(
    RegionDataset const& dataset,
    std::ostream& out,
    std::string const& ci_column
)
{
    bool const with_ci = dataset.published_ci.has_value();
    if (with_ci && dataset.published_ci->size() != dataset.series.size())
    {
        throw Error(
            ErrorKind::InvalidMix,
            "published CI length does not match the series"
        );
    }
    out << "timestamp";
    for (auto const& id : dataset.source_ids)
    {
        out << ',' << id;
    }
    if (with_ci)
    {
        out << ',' << ci_column;
    }
    out << '\n';
    for (std::size_t i = 0; i < dataset.series.size(); ++i)
    {
        auto const& step = dataset.series[i];
        if (!step.timestamp())
        {
            throw Error(ErrorKind::InvalidMix, "CSV output needs timestamps");
        }
        out << format_timestamp(*step.timestamp());
        for (auto const& id : dataset.source_ids)
        {
            out << ',' << format_number(step.energy_mwh(id));
        }
        if (with_ci)
        {
            out << ',' << format_number((*dataset.published_ci)[i]);
        }
        out << '\n';
    }
}

std::vector<LoadedRegion> load_region_dir(
    std::filesystem::path const& dir,
    CsvSchemaOptions const& options,
    SourceRegistry const& sources
)
{
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
    {
        throw Error(ErrorKind::Io, "not a directory: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (auto const& entry : std::filesystem::directory_iterator(dir))
    {
        if (entry.is_regular_file() && entry.path().extension() == ".csv")
        {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<LoadedRegion> out;
    for (auto const& file : files)
    {
        CsvSchemaOptions per_file = options;
        per_file.region.reset();
        out.push_back(load_region_csv(file, per_file, sources));
    }
    return out;
}

std::map<std::string, double>
load_cef_table(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorKind::Io, "cannot open CEF table " + path.string());
    }
    nlohmann::json doc;
    try
    {
        in >> doc;
    }
    catch (nlohmann::json::exception const& e)
    {
        throw Error(
            ErrorKind::ParseError,
            path.string() + ": malformed JSON: " + e.what()
        );
    }
    if (!doc.is_object())
    {
        throw Error(ErrorKind::ParseError, path.string() + ": expected an object");
    }
    std::map<std::string, double> table;
    for (auto const& [key, value] : doc.items())
    {
        if (!value.is_number() || value.get<double>() < 0.0)
        {
            throw Error(
                ErrorKind::ParseError,
                path.string() + ": '" + key + "' must be a non-negative number"
            );
        }
        table[key] = value.get<double>();
    }
    return table;
}

CiSignal read_ci_signal(std::istream& in, std::string const& origin)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_content_line(in, line, line_no))
    {
        throw Error(ErrorKind::SchemaError, origin + ": missing header row");
    }
    auto const header = split_csv_line(line);
    std::optional<std::size_t> ts_col;
    std::optional<std::size_t> ci_col;
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        if (header[i] == "timestamp")
        {
            ts_col = i;
        }
        else if (header[i] == "ci_g_per_kwh" || header[i] == "carbon_intensity")
        {
            ci_col = i;
        }
    }
    if (!ts_col || !ci_col)
    {
        throw Error(
            ErrorKind::SchemaError,
            origin + ": expected columns 'timestamp' and 'ci_g_per_kwh'"
        );
    }
    CiSignal signal;
    while (next_content_line(in, line, line_no))
    {
        auto const fields = split_csv_line(line);
        if (fields.size() != header.size())
        {
            parse_error(origin, line_no, "", "wrong number of fields");
        }
        Timestamp ts;
        try
        {
            ts = parse_hour_timestamp(fields[*ts_col]);
        }
        catch (Error const& e)
        {
            parse_error(origin, line_no, "timestamp", e.what());
        }
        if (!signal.timestamps.empty() && ts <= signal.timestamps.back())
        {
            parse_error(origin, line_no, "timestamp", "timestamps must increase");
        }
        auto const value = parse_number(fields[*ci_col]);
        if (!value || *value < 0.0)
        {
            parse_error(
                origin,
                line_no,
                header[*ci_col],
                "expected a non-negative number"
            );
        }
        signal.timestamps.push_back(ts);
        signal.g_per_kwh.push_back(*value);
    }
    return signal;
}

CiSignal load_ci_signal(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    }
    return read_ci_signal(in, path.string());
}

} // namespace gridcarbon
