#pragma once

#include "gridcarbon/grid_model.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridcarbon
{

enum class ContractKind
{
    PhysicalOnsite,
    PhysicalOffsite,
    Financial,
    Rec,
};

std::string_view to_string(ContractKind kind);
std::optional<ContractKind> parse_contract_kind(std::string_view name);

inline bool is_physical(ContractKind kind)
{
    return kind == ContractKind::PhysicalOnsite
        || kind == ContractKind::PhysicalOffsite;
}

// A PPA or REC claim on carbon-free generation. Financial PPAs and RECs are
// treated identically for accounting; the kind is kept for reporting.
struct Contract
{
    std::string id;
    std::string buyer;
    ContractKind kind = ContractKind::PhysicalOffsite;
    std::string source_id;
    std::string source_region;
    // A single value applies to every step; longer vectors are per step.
    std::vector<double> energy_mwh;

    // Throws InvalidContract when step is past the end of a series.
    double energy_at(std::size_t step) const;
};

// Checks non-negative energy, a registered carbon-free source, and (when the
// buyer's region is known) that physical contracts stay within one region.
void validate_contract(
    Contract const& contract,
    SourceRegistry const& sources,
    std::optional<std::string_view> buyer_region = std::nullopt
);

struct ResidualMix
{
    GridMix mix;
    EnergyBySource removed_mwh;
    // Energy actually delivered to each contract after pro-rata clamping.
    std::map<std::string, double> delivered_mwh;
    bool over_contracted = false;
    std::vector<std::string> over_contracted_sources;

    double total_removed_mwh() const;
};

// Removes contracted energy sourced in mix.region() from the mix. Contracts
// sourced elsewhere are ignored. When the contracts on one source ask for
// more than it generated, the source is emptied, each contract receives a
// share proportional to its request, and over_contracted is set.
ResidualMix compute_residual_mix(
    GridMix const& mix,
    std::span<Contract const> contracts,
    SourceRegistry const& sources,
    std::size_t step = 0
);

// Sum(E_i * CEF_i) / (E - E_cf). Throws EmptyResidual if nothing remains.
CarbonIntensity compute_residual_ci(
    GridMix const& mix,
    std::span<Contract const> contracts,
    SourceRegistry const& sources,
    std::size_t step = 0
);

CarbonIntensity
residual_ci(ResidualMix const& residual, SourceRegistry const& sources);

// Buyer's delivered contracted energy at a step (MWh), summed over every
// region its contracts draw from. Throws InvalidContract if a source region
// has no mix.
double contracted_cfe_for_buyer(
    std::span<Contract const> contracts,
    std::string_view buyer,
    std::size_t step,
    std::map<std::string, GridMix, std::less<>> const& mixes_by_region,
    SourceRegistry const& sources
);

using CategoryFractions = std::map<SourceCategory, double>;

inline CategoryFractions solar_wind_fraction(double fraction)
{
    return {{SourceCategory::Solar, fraction}, {SourceCategory::Wind, fraction}};
}

// Synthesises one contract per matching source covering `fraction` of its
// generation in this mix. Fractions must lie in [0, 1] and may only name
// carbon-free categories.
std::vector<Contract> make_fraction_contracts(
    GridMix const& mix,
    CategoryFractions const& fractions,
    SourceRegistry const& sources,
    std::string_view buyer = "aggregate"
);

} // namespace gridcarbon
