#pragma once

#include "thermo/series.hpp"

namespace thermo {

// Result of the power-wealth proportionality check a = lambda * C.
// The test is descriptive: we report how constant the ratio is, we do not
// run a formal hypothesis test.
struct LambdaEstimate {
    double mean_lambda = 0.0;      // Watts per 2005 USD
    AnnualSeries per_year_lambda;  // a(y)/C(y) over the window
    double relative_sd = 0.0;      // SD / mean (population SD)
    double ci95_halfwidth = 0.0;   // 1.96 * SD / sqrt(n), in W/USD
    int n_years = 0;
};

// C(t) = initial_wealth + trapezoidal integral of Y. Strictly increasing for
// positive GWP.
AnnualSeries wealth_series(const AnnualSeries& gwp, double initial_wealth);

// Per-year lambda = a/C over [window_a, window_b] plus summary statistics.
LambdaEstimate estimate_lambda(const AnnualSeries& energy,
                               const AnnualSeries& wealth, int window_a,
                               int window_b);

// Y(y) = (1/lambda) * centered-difference da/dt. Output drops the first and
// last energy years; values may be negative if consumption shrinks.
AnnualSeries production_from_energy(const AnnualSeries& energy, double lambda);

} // namespace thermo
