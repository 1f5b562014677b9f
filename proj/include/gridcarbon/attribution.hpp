#pragma once

#include "gridcarbon/contracts.hpp"
#include "gridcarbon/grid_model.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridcarbon
{

enum class AccountingMethod
{
    LocationBased,
    MarketBased,
};

std::string_view to_string(AccountingMethod method);
std::optional<AccountingMethod> parse_method(std::string_view name);

struct Consumer
{
    std::string id;
    std::string region;
    double demand_kwh = 0.0;
    AccountingMethod method = AccountingMethod::LocationBased;
};

// One consumer's view under one accounting method.
struct MethodResult
{
    double cfe_kwh = 0.0;
    double fossil_kwh = 0.0;
    CarbonIntensity ci;
    double emissions_g = 0.0;
};

using MixesByRegion = std::map<std::string, GridMix, std::less<>>;

// Every consumer sees the full mix: CI_loc, and a carbon-free share equal to
// the mix's carbon-free fraction. Results align with `consumers`.
std::vector<MethodResult> attribute_location_based(
    GridMix const& mix,
    std::span<Consumer const> consumers,
    SourceRegistry const& sources
);

// (D - D_cf) * CI_res / D. Throws ZeroDemand for D == 0 and
// ClaimExceedsDemand for D_cf > D.
CarbonIntensity
compute_market_ci(double demand_kwh, double claim_kwh, CarbonIntensity ci_res);

struct MarketAttribution
{
    MethodResult result;
    double claimed_cfe_kwh = 0.0;
    // The buyer's contracts exceeded its demand; the claim was capped at D.
    bool over_claimed = false;
};

struct RegionResidual
{
    CarbonIntensity ci_loc;
    CarbonIntensity ci_res;
    double residual_cfe_share = 0.0;
    ResidualMix residual;
};

struct MarketBasedResult
{
    std::vector<MarketAttribution> consumers;
    std::map<std::string, RegionResidual, std::less<>> regions;
};

// Removes every contract from the region its source feeds (whoever the
// buyer is), then applies the market CI to each consumer using the residual
// of the consumer's own region.
MarketBasedResult attribute_market_based(
    MixesByRegion const& mixes,
    std::span<Contract const> contracts,
    std::span<Consumer const> consumers,
    SourceRegistry const& sources
);

// Contracted carbon-free energy (MWh) that is also still counted in the
// published mix of mix.region(). Zero when the public signal already
// excludes contracted energy or no location-based consumer is present.
double detect_double_counting(
    GridMix const& mix,
    std::span<Contract const> contracts,
    std::span<Consumer const> consumers,
    SourceRegistry const& sources,
    bool public_signal_adjusted
);

} // namespace gridcarbon
