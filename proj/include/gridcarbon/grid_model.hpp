#pragma once

#include "gridcarbon/timestamp.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridcarbon
{

// Units used throughout: generation in MWh, consumer demand in kWh,
// carbon intensity and emission factors in g CO2-eq per kWh.
inline constexpr double kKwhPerMwh = 1000.0;

enum class SourceCategory
{
    Solar,
    Wind,
    Hydro,
    Nuclear,
    Coal,
    Gas,
    Oil,
    Biomass,
    Geothermal,
    Unknown,
    OtherRenewable,
    OtherFossil,
};

inline constexpr SourceCategory kAllCategories[] = {
    SourceCategory::Solar,      SourceCategory::Wind,
    SourceCategory::Hydro,      SourceCategory::Nuclear,
    SourceCategory::Coal,       SourceCategory::Gas,
    SourceCategory::Oil,        SourceCategory::Biomass,
    SourceCategory::Geothermal, SourceCategory::Unknown,
    SourceCategory::OtherRenewable, SourceCategory::OtherFossil,
};

std::string_view to_string(SourceCategory category);

// Accepts the canonical names ("other-renewable") and underscore spellings.
std::optional<SourceCategory> parse_category(std::string_view name);

struct CategoryDefaults
{
    double cef_g_per_kwh;
    bool carbon_free;
};

// Operational emission factors. Carbon-free categories are zero; coal follows
// the 1000 g/kWh toy grid. The fossil values are stand-ins and are meant to
// be overridden with a CEF table for real analyses.
CategoryDefaults default_for(SourceCategory category);

struct EnergySource
{
    std::string id;
    SourceCategory category = SourceCategory::Unknown;
    double cef_g_per_kwh = 0.0;
    bool carbon_free = false;
};

// Throws InvalidSource unless cef >= 0 and carbon_free implies cef == 0.
void validate_source(EnergySource const& source);

class SourceRegistry
{
public:
    SourceRegistry() = default;

    // One source per category, keyed by the category name.
    static SourceRegistry with_defaults();

    void add(EnergySource source);
    void add_or_replace(EnergySource source);

    bool contains(std::string_view id) const;
    EnergySource const* find(std::string_view id) const;
    EnergySource const& at(std::string_view id) const;

    // Keys name either a source id or a category; a category key updates
    // every source of that category. Throws InvalidSource for unknown keys
    // and for nonzero factors on carbon-free sources.
    void apply_cef_overrides(std::map<std::string, double> const& overrides);

    std::vector<EnergySource> const& sources() const { return sources_; }

private:
    std::vector<EnergySource> sources_;
};

// Keyed by source id; transparent so string_view lookups work.
using EnergyBySource = std::map<std::string, double, std::less<>>;

struct CarbonIntensity
{
    double g_per_kwh = 0.0;

    friend auto operator<=>(CarbonIntensity, CarbonIntensity) = default;
};

// Energy by source for one region and (optionally) one hour.
class GridMix
{
public:
    GridMix() = default;
    GridMix(
        std::string region,
        EnergyBySource generation_mwh,
        std::optional<Timestamp> timestamp = std::nullopt
    );

    std::string const& region() const { return region_; }
    std::optional<Timestamp> const& timestamp() const { return timestamp_; }
    EnergyBySource const& generation_mwh() const { return generation_; }

    double energy_mwh(std::string_view source_id) const;
    double total_energy_mwh() const;

    friend bool operator==(GridMix const&, GridMix const&) = default;

private:
    std::string region_;
    std::optional<Timestamp> timestamp_;
    EnergyBySource generation_;
};

// Ordered hourly mixes for a single region.
class MixTimeSeries
{
public:
    MixTimeSeries() = default;
    MixTimeSeries(std::string region, std::vector<GridMix> steps);

    std::string const& region() const { return region_; }
    std::vector<GridMix> const& steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    GridMix const& operator[](std::size_t i) const { return steps_[i]; }

    // True when every gap between consecutive timestamps is identical.
    // Series without timestamps are uniform by construction.
    bool is_uniform() const;

private:
    std::string region_;
    std::vector<GridMix> steps_;
};

// Throws UnknownSource if any generation key is not registered.
void check_registered(GridMix const& mix, SourceRegistry const& sources);

// Sum(E_i * CEF_i) / Sum(E_i). Throws EmptyMix when total energy is zero.
CarbonIntensity
compute_average_ci(GridMix const& mix, SourceRegistry const& sources);

// Sum(E_i * CEF_i) in grams, MWh converted to kWh.
double total_emissions_g(GridMix const& mix, SourceRegistry const& sources);

double carbon_free_energy_mwh(GridMix const& mix, SourceRegistry const& sources);

// Fraction in [0, 1] of total energy that is carbon free. Throws EmptyMix.
double carbon_free_share(GridMix const& mix, SourceRegistry const& sources);

} // namespace gridcarbon
