#pragma once

#include "gridcarbon/contracts.hpp"
#include "gridcarbon/ingest.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace gridcarbon
{

// Constant-power deferrable load, e.g. a level-2 EV charge.
struct FlexibleLoad
{
    double energy_per_hour_kwh = 0.0;
    std::size_t duration_hours = 1;
    std::size_t earliest_start = 0;
    // Defaults to the last start that still fits in the signal.
    std::optional<std::size_t> latest_start;
    bool contiguous = true;
};

struct Schedule
{
    // Ascending hour indices into the signal.
    std::vector<std::size_t> hours;
    // Set for contiguous schedules.
    std::optional<std::size_t> start;
};

// Contiguous: start with the smallest summed CI. Otherwise the cheapest
// individual hours inside the window. Ties go to the earliest start/hour.
// Throws WindowTooShort when the load cannot fit.
Schedule best_window(std::span<double const> signal, FlexibleLoad const& load);

// Mirror of best_window picking the highest cost; ties go to the earliest.
Schedule worst_window(std::span<double const> signal, FlexibleLoad const& load);

struct ScheduleResult
{
    std::vector<std::size_t> hours;
    double energy_kwh = 0.0;
    double reported_emissions_g = 0.0;
    double actual_emissions_g = 0.0;
    double reported_ci_avg = 0.0;
    double actual_ci_avg = 0.0;
    double difference_g_per_kwh = 0.0;
    // Undefined when the reported average is zero.
    std::optional<double> discrepancy_pct;
};

ScheduleResult evaluate_schedule(
    std::span<std::size_t const> hours,
    FlexibleLoad const& load,
    std::span<double const> reported_signal,
    std::span<double const> actual_signal
);

struct WorstWindowPolicy
{
};
struct BestWindowPolicy
{
};
struct FixedStartPolicy
{
    std::size_t start = 0;
};

using ShiftPolicy
    = std::variant<WorstWindowPolicy, BestWindowPolicy, FixedStartPolicy>;

Schedule schedule_for(
    ShiftPolicy const& policy,
    std::span<double const> signal,
    FlexibleLoad const& load
);

// 100 * (E_from - E_to) / E_from for two hour sets priced on one signal.
// Throws ZeroBaseline when E_from is zero.
double savings_pct(
    std::span<std::size_t const> from_hours,
    std::span<std::size_t const> to_hours,
    std::span<double const> signal
);

// 100 * (E_from - E_to) / E_from with both schedules priced on `signal`.
// Throws ZeroBaseline when E_from is zero.
double shift_savings(
    std::span<double const> signal,
    ShiftPolicy const& from,
    ShiftPolicy const& to,
    FlexibleLoad const& load
);

// Per-step CI of the full mix.
std::vector<double>
total_signal(RegionDataset const& dataset, SourceRegistry const& sources);

// Per-step residual CI after contracting `fractions` of each category.
std::vector<double> residual_signal(
    RegionDataset const& dataset,
    CategoryFractions const& fractions,
    SourceRegistry const& sources
);

} // namespace gridcarbon
