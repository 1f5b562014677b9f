#pragma once

// Brute-force reference implementations. They share no code with the
// library and work from first principles on plain containers.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace oracle
{

struct Src
{
    double mwh;
    double cef;
    bool cfe;
};

// g/kWh: grams over kWh, with MWh converted explicitly.
inline double average_ci(std::vector<Src> const& mix)
{
    double grams = 0.0;
    double kwh = 0.0;
    for (auto const& s : mix)
    {
        grams += s.mwh * 1000.0 * s.cef;
        kwh += s.mwh * 1000.0;
    }
    return grams / kwh;
}

inline double cfe_mwh(std::vector<Src> const& mix)
{
    double e = 0.0;
    for (auto const& s : mix)
    {
        e += s.cfe ? s.mwh : 0.0;
    }
    return e;
}

inline double total_mwh(std::vector<Src> const& mix)
{
    double e = 0.0;
    for (auto const& s : mix)
    {
        e += s.mwh;
    }
    return e;
}

// Residual CI when a fraction f of all carbon-free energy is contracted.
inline double residual_ci_closed_form(double ci_loc, double f)
{
    return ci_loc / (1.0 - f);
}

struct Window
{
    std::size_t start;
    double cost;
};

// Every start tried, each window summed left to right, first minimum kept.
inline Window brute_best_contiguous(
    std::vector<double> const& s,
    std::size_t d,
    std::size_t first,
    std::size_t last
)
{
    Window best{first, std::numeric_limits<double>::infinity()};
    for (std::size_t start = first; start <= last; ++start)
    {
        double cost = 0.0;
        for (std::size_t k = 0; k < d; ++k)
        {
            cost += s[start + k];
        }
        if (cost < best.cost)
        {
            best = {start, cost};
        }
    }
    return best;
}

// Exhaustive over all d-subsets of [first, end). Picks the minimum cost,
// then the lexicographically smallest index set.
inline std::vector<std::size_t> brute_best_subset(
    std::vector<double> const& s,
    std::size_t d,
    std::size_t first,
    std::size_t end
)
{
    std::size_t const n = end - first;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
    std::vector<std::size_t> best;
    double best_cost = std::numeric_limits<double>::infinity();
    do
    {
        std::vector<std::size_t> idx;
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (pick[i])
            {
                idx.push_back(first + i);
                cost += s[first + i];
            }
        }
        if (cost < best_cost || (cost == best_cost && idx < best))
        {
            best_cost = cost;
            best = idx;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

inline std::vector<std::pair<double, double>> cdf(std::vector<double> v)
{
    std::vector<std::pair<double, double>> out;
    for (double x : v)
    {
        auto const le = std::count_if(v.begin(), v.end(), [&](double y) { return y <= x; });
        std::pair<double, double> p{x, static_cast<double>(le) / static_cast<double>(v.size())};
        if (std::find(out.begin(), out.end(), p) == out.end())
        {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
