#pragma once

#include "gridcarbon/grid_model.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gridcarbon
{

struct RegionDataset
{
    std::string region;
    MixTimeSeries series;
    // Source columns in file order; each is a registered source id.
    std::vector<std::string> source_ids;
    // Published grid CI per step, when the file carries one.
    std::optional<std::vector<double>> published_ci;
};

enum class FillPolicy
{
    DropRow,
    ZeroFill,
};

struct CsvSchemaOptions
{
    // Defaults to the file stem.
    std::optional<std::string> region;
    std::string timestamp_column = "timestamp";
    std::string ci_column = "carbon_intensity";
    FillPolicy fill = FillPolicy::DropRow;
    // Reject timestamps that are not evenly spaced (GapError).
    bool strict_spacing = false;
};

struct LoadSummary
{
    std::size_t rows_read = 0;
    std::size_t rows_dropped = 0;
    std::size_t cells_filled = 0;
    std::vector<std::string> ignored_columns;
};

struct LoadedRegion
{
    RegionDataset dataset;
    LoadSummary summary;
};

// Header: a timestamp column, one column per source category, optionally a
// published CI column. Unknown columns are skipped and listed in the
// summary. Rows come back sorted by timestamp.
LoadedRegion load_region_csv(
    std::filesystem::path const& path,
    CsvSchemaOptions const& options = {},
    SourceRegistry const& sources = SourceRegistry::with_defaults()
);

LoadedRegion read_region_csv(
    std::istream& in,
    std::string region,
    CsvSchemaOptions const& options = {},
    SourceRegistry const& sources = SourceRegistry::with_defaults(),
    std::string const& origin = "<stream>"
);

// Writes the same layout back out; values use shortest round-trip form.
void write_region_csv(
    RegionDataset const& dataset,
    std::ostream& out,
    std::string const& ci_column = "carbon_intensity"
);

// Every *.csv in the directory, sorted by file name.
std::vector<LoadedRegion> load_region_dir(
    std::filesystem::path const& dir,
    CsvSchemaOptions const& options = {},
    SourceRegistry const& sources = SourceRegistry::with_defaults()
);

// JSON object of key -> g/kWh, keys being a source id or category name.
std::map<std::string, double>
load_cef_table(std::filesystem::path const& path);

// Two-column signal file: timestamp, ci_g_per_kwh.
struct CiSignal
{
    std::vector<Timestamp> timestamps;
    std::vector<double> g_per_kwh;
};

CiSignal load_ci_signal(std::filesystem::path const& path);
CiSignal read_ci_signal(std::istream& in, std::string const& origin);

} // namespace gridcarbon
