#include "gridcarbon/scheduler.hpp"

#include "gridcarbon/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gridcarbon
{

namespace
{

struct Window
{
    std::size_t first_start;
    std::size_t last_start;
};

Window resolve_window(std::span<double const> signal, FlexibleLoad const& load)
{
    if (load.duration_hours == 0)
    {
        throw Error(ErrorKind::InvalidLoad, "load duration must be at least 1 hour");
    }
    if (!std::isfinite(load.energy_per_hour_kwh) || load.energy_per_hour_kwh < 0.0)
    {
        throw Error(ErrorKind::InvalidLoad, "load energy must be non-negative");
    }
    for (double v : signal)
    {
        if (!std::isfinite(v))
        {
            throw Error(ErrorKind::SignalMismatch, "signal contains a non-finite value");
        }
    }
    std::size_t const n = signal.size();
    std::size_t const d = load.duration_hours;
    if (n < d)
    {
        throw Error(
            ErrorKind::WindowTooShort,
            "signal has " + std::to_string(n) + " hours, load needs "
                + std::to_string(d)
        );
    }
    std::size_t const last = load.latest_start.value_or(n - d);
    if (last + d > n)
    {
        throw Error(ErrorKind::WindowTooShort, "latest start runs past the signal");
    }
    if (load.earliest_start > last)
    {
        throw Error(
            ErrorKind::WindowTooShort,
            "earliest start is after the latest start"
        );
    }
    return {load.earliest_start, last};
}

template <typename Better>
Schedule pick(std::span<double const> signal, FlexibleLoad const& load, Better better)
{
    auto const w = resolve_window(signal, load);
    std::size_t const d = load.duration_hours;
    Schedule out;
    if (load.contiguous)
    {
        std::size_t best_start = w.first_start;
        double best_cost = 0.0;
        for (std::size_t s = w.first_start; s <= w.last_start; ++s)
        {
            double cost = 0.0;
            for (std::size_t k = 0; k < d; ++k)
            {
                cost += signal[s + k];
            }
            if (s == w.first_start || better(cost, best_cost))
            {
                best_cost = cost;
                best_start = s;
            }
        }
        out.start = best_start;
        out.hours.resize(d);
        std::iota(out.hours.begin(), out.hours.end(), best_start);
        return out;
    }
    std::vector<std::size_t> candidates(w.last_start + d - w.first_start);
    std::iota(candidates.begin(), candidates.end(), w.first_start);
    std::stable_sort(
        candidates.begin(),
        candidates.end(),
        [&](std::size_t a, std::size_t b) { return better(signal[a], signal[b]); }
    );
    out.hours.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(d));
    std::sort(out.hours.begin(), out.hours.end());
    return out;
}

double priced(std::span<std::size_t const> hours, std::span<double const> signal, double energy)
{
    double grams = 0.0;
    for (auto h : hours)
    {
        grams += energy * signal[h];
    }
    return grams;
}

} // namespace

Schedule best_window(std::span<double const> signal, FlexibleLoad const& load)
{
    return pick(signal, load, [](double a, double b) { return a < b; });
}

Schedule worst_window(std::span<double const> signal, FlexibleLoad const& load)
{
    return pick(signal, load, [](double a, double b) { return a > b; });
}

ScheduleResult evaluate_schedule(
    std::span<std::size_t const> hours,
    FlexibleLoad const& load,
    std::span<double const> reported_signal,
    std::span<double const> actual_signal
)
{
    if (reported_signal.size() != actual_signal.size())
    {
        throw Error(
            ErrorKind::SignalMismatch,
            "reported and actual signals differ in length ("
                + std::to_string(reported_signal.size()) + " vs "
                + std::to_string(actual_signal.size()) + ")"
        );
    }
    if (hours.empty())
    {
        throw Error(ErrorKind::InvalidLoad, "schedule has no hours");
    }
    for (auto h : hours)
    {
        if (h >= reported_signal.size())
        {
            throw Error(
                ErrorKind::SignalMismatch,
                "hour " + std::to_string(h) + " is outside the signal"
            );
        }
    }
    if (!std::isfinite(load.energy_per_hour_kwh) || load.energy_per_hour_kwh < 0.0)
    {
        throw Error(ErrorKind::InvalidLoad, "load energy must be non-negative");
    }

    ScheduleResult r;
    r.hours.assign(hours.begin(), hours.end());
    double const e = load.energy_per_hour_kwh;
    r.energy_kwh = e * static_cast<double>(hours.size());
    r.reported_emissions_g = priced(hours, reported_signal, e);
    r.actual_emissions_g = priced(hours, actual_signal, e);
    // Constant draw, so the energy-weighted mean is the plain mean.
    double const n = static_cast<double>(hours.size());
    r.reported_ci_avg = priced(hours, reported_signal, 1.0) / n;
    r.actual_ci_avg = priced(hours, actual_signal, 1.0) / n;
    r.difference_g_per_kwh = r.actual_ci_avg - r.reported_ci_avg;
    if (r.reported_ci_avg > 0.0)
    {
        r.discrepancy_pct = 100.0 * r.difference_g_per_kwh / r.reported_ci_avg;
    }
    return r;
}

Schedule schedule_for(
    ShiftPolicy const& policy,
    std::span<double const> signal,
    FlexibleLoad const& load
)
{
    if (std::holds_alternative<BestWindowPolicy>(policy))
    {
        return best_window(signal, load);
    }
    if (std::holds_alternative<WorstWindowPolicy>(policy))
    {
        return worst_window(signal, load);
    }
    auto const start = std::get<FixedStartPolicy>(policy).start;
    if (load.duration_hours == 0)
    {
        throw Error(ErrorKind::InvalidLoad, "load duration must be at least 1 hour");
    }
    if (start + load.duration_hours > signal.size())
    {
        throw Error(
            ErrorKind::WindowTooShort,
            "fixed start " + std::to_string(start) + " runs past the signal"
        );
    }
    Schedule s;
    s.start = start;
    s.hours.resize(load.duration_hours);
    std::iota(s.hours.begin(), s.hours.end(), start);
    return s;
}

double shift_savings(
    std::span<double const> signal,
    ShiftPolicy const& from,
    ShiftPolicy const& to,
    FlexibleLoad const& load
)
{
    if (signal.empty())
    {
        throw Error(ErrorKind::WindowTooShort, "signal is empty");
    }
    auto const a = schedule_for(from, signal, load);
    auto const b = schedule_for(to, signal, load);
    if (load.energy_per_hour_kwh == 0.0)
    {
        throw Error(ErrorKind::ZeroBaseline, "load draws no energy");
    }
    return savings_pct(a.hours, b.hours, signal);
}

double savings_pct(
    std::span<std::size_t const> from_hours,
    std::span<std::size_t const> to_hours,
    std::span<double const> signal
)
{
    for (auto hours : {from_hours, to_hours})
    {
        for (auto h : hours)
        {
            if (h >= signal.size())
            {
                throw Error(
                    ErrorKind::SignalMismatch,
                    "hour " + std::to_string(h) + " is outside the signal"
                );
            }
        }
    }
    double const e_from = priced(from_hours, signal, 1.0);
    double const e_to = priced(to_hours, signal, 1.0);
    if (e_from == 0.0)
    {
        throw Error(ErrorKind::ZeroBaseline, "baseline schedule has zero emissions");
    }
    return 100.0 * (e_from - e_to) / e_from;
}

std::vector<double>
total_signal(RegionDataset const& dataset, SourceRegistry const& sources)
{
    std::vector<double> out;
    out.reserve(dataset.series.size());
    for (auto const& step : dataset.series.steps())
    {
        out.push_back(compute_average_ci(step, sources).g_per_kwh);
    }
    return out;
}

std::vector<double> residual_signal(
    RegionDataset const& dataset,
    CategoryFractions const& fractions,
    SourceRegistry const& sources
)
{
    std::vector<double> out;
    out.reserve(dataset.series.size());
    for (auto const& step : dataset.series.steps())
    {
        auto const contracts = make_fraction_contracts(step, fractions, sources);
        out.push_back(compute_residual_ci(step, contracts, sources).g_per_kwh);
    }
    return out;
}

} // namespace gridcarbon
