#pragma once

#include "gridcarbon/contracts.hpp"
#include "gridcarbon/grid_model.hpp"
#include "gridcarbon/ingest.hpp"

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gridcarbon
{

struct PenetrationStat
{
    std::string region;
    double total_generation_mwh = 0.0;
    double solar_wind_mwh = 0.0;
    double solar_wind_pct = 0.0;
};

enum class PenetrationMode
{
    // Total over total across the whole period.
    EnergyWeighted,
    // Mean of the per-hour percentages; hours with no generation are skipped.
    HourlyMean,
};

inline std::set<SourceCategory> const kSolarWind = {
    SourceCategory::Solar,
    SourceCategory::Wind,
};

PenetrationStat penetration(
    RegionDataset const& dataset,
    SourceRegistry const& sources,
    std::set<SourceCategory> const& categories = kSolarWind,
    PenetrationMode mode = PenetrationMode::EnergyWeighted
);

struct CdfPoint
{
    double value = 0.0;
    double cumulative = 0.0;
};

struct FleetPenetration
{
    std::vector<PenetrationStat> regions;
    // Empirical CDF of solar_wind_pct, one point per distinct value.
    std::vector<CdfPoint> cdf;
};

// Throws EmptyFleet for an empty list.
FleetPenetration penetration_fleet(
    std::span<RegionDataset const> datasets,
    SourceRegistry const& sources,
    std::set<SourceCategory> const& categories = kSolarWind,
    PenetrationMode mode = PenetrationMode::EnergyWeighted
);

std::vector<CdfPoint> empirical_cdf(std::vector<double> values);

enum class EmissionsBasis
{
    // Registry CEFs when every source is registered, otherwise published CI.
    Automatic,
    Registry,
    PublishedCi,
};

struct InflationResult
{
    std::string region;
    CarbonIntensity ci_loc;
    CarbonIntensity ci_res;
    double contracted_mwh = 0.0;
    double total_generation_mwh = 0.0;
    double increase_pct = 0.0;
};

// Period CI with and without the contracted share, both energy weighted
// (total grams over total energy). Throws EmptyResidual when any step is
// fully contracted.
InflationResult residual_inflation(
    RegionDataset const& dataset,
    CategoryFractions const& fractions,
    SourceRegistry const& sources,
    EmissionsBasis basis = EmissionsBasis::Automatic
);

} // namespace gridcarbon
