#pragma once

#include "gridcarbon/attribution.hpp"
#include "gridcarbon/contracts.hpp"
#include "gridcarbon/grid_model.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridcarbon
{

// A declarative attribution case: one static mix per region, named
// consumers, and the contracts they hold.
struct Scenario
{
    std::string name;
    std::string description;
    SourceRegistry sources;
    MixesByRegion regions;
    // Informational; the named consumers are only a slice of grid demand.
    std::map<std::string, double, std::less<>> grid_demand_mwh;
    std::vector<Consumer> consumers;
    std::vector<Contract> contracts;
    // True when the published grid CI already excludes contracted energy.
    bool public_signal_adjusted = false;
};

// Parses the JSON scenario format (see docs/scenario-format.md). Every
// problem is reported as ScenarioInvalid with the offending field path.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario_file(std::filesystem::path const& path);

// Parties file for time-series attribution: {"consumers": [...],
// "contracts": [...]}; contract energy may be a number or a per-step array.
struct Parties
{
    std::vector<Consumer> consumers;
    std::vector<Contract> contracts;
};
Parties parse_parties(std::string_view json_text);

// A bare array of contracts, or an object with a "contracts" array.
std::vector<Contract> parse_contract_list(std::string_view json_text);

std::vector<std::string> builtin_scenario_names();
// Throws ScenarioInvalid for unknown names.
std::string_view builtin_scenario_json(std::string_view name);
Scenario builtin_scenario(std::string_view name);

struct ConsumerReport
{
    std::string id;
    std::string region;
    double demand_kwh = 0.0;
    AccountingMethod method = AccountingMethod::LocationBased;
    MethodResult location;
    MethodResult market;
    double claimed_cfe_kwh = 0.0;
    bool over_claimed = false;

    MethodResult const& reported() const
    {
        return method == AccountingMethod::MarketBased ? market : location;
    }
};

struct RegionReport
{
    std::string region;
    double generation_mwh = 0.0;
    std::optional<double> grid_demand_mwh;
    double cfe_share = 0.0;
    CarbonIntensity ci_loc;
    CarbonIntensity ci_res;
    double residual_cfe_share = 0.0;
    double contracted_mwh = 0.0;
    double double_counted_cfe_mwh = 0.0;
    bool over_contracted = false;
};

struct AttributionReport
{
    std::string scenario;
    bool public_signal_adjusted = false;
    std::vector<RegionReport> regions;
    std::vector<ConsumerReport> consumers;
    double double_counted_cfe_mwh = 0.0;

    ConsumerReport const& consumer(std::string_view id) const;
    RegionReport const& region(std::string_view id) const;
};

// Checks cross references (regions, buyers, sources) and value ranges.
void validate_scenario(Scenario const& scenario);

// Runs both accounting methods for every consumer. Over-claims are capped
// at demand and flagged rather than rejected.
AttributionReport run_scenario(Scenario const& scenario);

} // namespace gridcarbon
