#pragma once

#include <string>
#include <vector>

#include "thermo/errors.hpp"

namespace thermo {

// Year length used for all per-year <-> per-second conversions: the Julian
// year, 365.25 d * 86400 s = 31,557,600 s. Fixed so that lambda values in
// mW/USD are reproducible bit-for-bit.
inline constexpr double kSecondsPerYear = 31557600.0;
// 1 EJ/yr expressed in Watts.
inline constexpr double kWattsPerEJPerYear = 1.0e18 / kSecondsPerYear;

enum class Unit {
    Watts,
    CurrencyPerYear, // 2005 MER USD / yr
    Currency,        // 2005 MER USD
    EnergyPerYear,   // EJ / yr
    Energy,          // EJ
    FractionPerYear, // 1 / yr
    Dimensionless,
    MassPerYear // mass or volume flux; only growth rates of these are used
};

const char* unit_tag(Unit u);
bool unit_from_tag(const std::string& tag, Unit& out);
bool is_flux_unit(Unit u);
// Unit of the time-accumulation of a flux (EJ/yr -> EJ, USD/yr -> USD, ...).
Unit integrated_unit(Unit flux);

// A contiguous annual time series: value i belongs to calendar year
// start_year + i. Immutable by convention once built (ops return new series).
struct AnnualSeries {
    int start_year = 0;
    std::vector<double> values;
    Unit unit = Unit::Dimensionless;
    std::string name;

    int size() const { return static_cast<int>(values.size()); }
    int end_year() const { return start_year + size() - 1; }
    bool contains(int year) const {
        return year >= start_year && year <= end_year();
    }
    double at(int year) const {
        if (!contains(year))
            throw Error(ErrorKind::Range,
                        name + ": year " + std::to_string(year) +
                            " outside span " + std::to_string(start_year) +
                            ".." + std::to_string(end_year()));
        return values[static_cast<size_t>(year - start_year)];
    }
    bool strictly_positive() const {
        for (double v : values)
            if (!(v > 0.0)) return false;
        return true;
    }
};

// Rates carry unit FractionPerYear; the alias marks intent in signatures.
using RateSeries = AnnualSeries;

// Trapezoidal running integral of a flux series. Output year k holds
// initial + integral of the flux from the series start through year k
// (so the first output value equals `initial`).
AnnualSeries integrate_cumulative(const AnnualSeries& series, double initial);

// Centered difference of ln(v): rate(y) = (ln v(y+1) - ln v(y-1)) / 2.
// Output is two years shorter (first and last year dropped). Exact for
// exponential growth.
RateSeries log_derivative(const AnnualSeries& series);

// Centered moving average with half-width window_years/2, window truncated
// symmetrically at the series edges. window_years = 10 gives the 11-point
// centered decadal mean; window_years = 1 (or 0) is the identity.
AnnualSeries running_decadal_mean(const AnnualSeries& series,
                                  int window_years = 10);

// Geometric-mean growth rate over [year_a, year_b]:
// (ln v(b) - ln v(a)) / (b - a). Equals the time average of the
// instantaneous log-derivative, so it telescopes exactly across
// subintervals.
double interval_average_rate(const AnnualSeries& series, int year_a,
                             int year_b);

// Arithmetic mean over the inclusive year window [year_a, year_b].
double mean_over(const AnnualSeries& series, int year_a, int year_b);

} // namespace thermo
