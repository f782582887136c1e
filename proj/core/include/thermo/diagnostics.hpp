#pragma once

#include "thermo/identity.hpp"
#include "thermo/series.hpp"

namespace thermo {

// The core diagnostic triple plus the energy-side alternates. All rate
// series are annual, centered-difference based where differencing is needed.
// Smoothed variants use the centered, edge-truncated decadal window.
struct GrowthDiagnostics {
    RateSeries eta;             // Y/C per year (no differencing)
    RateSeries innovation;      // d ln eta / dt
    RateSeries gwp_growth;      // d ln Y / dt
    RateSeries eta_from_energy; // d ln a / dt
    AnnualSeries efficiency;    // f = Y/a, USD per Joule (per year-Watt)
    AnnualSeries wealth;        // C, kept for interval-rate queries

    RateSeries eta_smoothed;
    RateSeries innovation_smoothed;
    RateSeries gwp_growth_smoothed;

    // max per-year |d ln Y/dt - eta - d ln eta/dt| over the common span:
    // the discretization residual of the growth decomposition identity
    double max_identity_residual = 0.0;
    // max |eta(y) - eta(start) - trapezoid integral of deta/dt| over the
    // span: the accumulation form of the same identity
    double max_accumulation_residual = 0.0;
};

// eta(y) = Y(y)/C(y), defined at every GWP year.
RateSeries rate_of_return(const AnnualSeries& gwp, double initial_wealth);

// Centered log-derivative of a positive rate series.
RateSeries innovation_rate(const RateSeries& eta);

// Full diagnostic record from the GWP pathway; energy series optional
// (empty series skips the energy-side alternates).
GrowthDiagnostics gwp_growth_decomposition(const AnnualSeries& gwp,
                                           double initial_wealth,
                                           const AnnualSeries* energy = nullptr,
                                           int smooth_window = 10);

// f = Y/a on the overlap of the two series.
AnnualSeries production_efficiency(const AnnualSeries& gwp,
                                   const AnnualSeries& energy);

} // namespace thermo
