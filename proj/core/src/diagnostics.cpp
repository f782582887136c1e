#include "thermo/diagnostics.hpp"

#include <cmath>

namespace thermo {

RateSeries rate_of_return(const AnnualSeries& gwp, double initial_wealth) {
    const AnnualSeries c = wealth_series(gwp, initial_wealth);
    RateSeries eta;
    eta.start_year = gwp.start_year;
    eta.unit = Unit::FractionPerYear;
    eta.name = "eta";
    eta.values.resize(gwp.values.size());
    for (size_t i = 0; i < gwp.values.size(); ++i) {
        if (!(c.values[i] > 0.0))
            throw Error(ErrorKind::Domain, "wealth must stay positive");
        eta.values[i] = gwp.values[i] / c.values[i];
    }
    return eta;
}

RateSeries innovation_rate(const RateSeries& eta) {
    RateSeries r = log_derivative(eta);
    r.name = "innovation";
    return r;
}

GrowthDiagnostics gwp_growth_decomposition(const AnnualSeries& gwp,
                                           double initial_wealth,
                                           const AnnualSeries* energy,
                                           int smooth_window) {
    GrowthDiagnostics d;
    d.wealth = wealth_series(gwp, initial_wealth);
    d.eta = rate_of_return(gwp, initial_wealth);
    d.innovation = innovation_rate(d.eta);
    d.gwp_growth = log_derivative(gwp);
    d.gwp_growth.name = "gwp_growth";

    if (energy && energy->size() >= 3) {
        d.eta_from_energy = log_derivative(*energy);
        d.eta_from_energy.name = "eta_from_energy";
        d.efficiency = production_efficiency(gwp, *energy);
    }

    d.eta_smoothed = running_decadal_mean(d.eta, smooth_window);
    d.innovation_smoothed = running_decadal_mean(d.innovation, smooth_window);
    d.gwp_growth_smoothed = running_decadal_mean(d.gwp_growth, smooth_window);

    // growth decomposition residual on the interior years where both
    // centered differences exist
    for (int y = d.innovation.start_year; y <= d.innovation.end_year(); ++y) {
        const double r =
            std::fabs(d.gwp_growth.at(y) - d.eta.at(y) - d.innovation.at(y));
        d.max_identity_residual = std::max(d.max_identity_residual, r);
    }

    // accumulation form: eta(y) - eta(start) vs trapezoid of deta/dt where
    // deta/dt is the centered difference of eta itself
    if (d.eta.size() >= 3) {
        AnnualSeries deta;
        deta.start_year = d.eta.start_year + 1;
        deta.unit = Unit::FractionPerYear;
        deta.name = "deta_dt";
        deta.values.resize(d.eta.values.size() - 2);
        for (size_t i = 1; i + 1 < d.eta.values.size(); ++i)
            deta.values[i - 1] =
                0.5 * (d.eta.values[i + 1] - d.eta.values[i - 1]);
        const AnnualSeries acc = integrate_cumulative(deta, 0.0);
        for (int y = acc.start_year; y <= acc.end_year(); ++y) {
            const double r = std::fabs(d.eta.at(y) - d.eta.at(acc.start_year) -
                                       acc.at(y));
            d.max_accumulation_residual =
                std::max(d.max_accumulation_residual, r);
        }
    }
    return d;
}

AnnualSeries production_efficiency(const AnnualSeries& gwp,
                                   const AnnualSeries& energy) {
    const int lo = std::max(gwp.start_year, energy.start_year);
    const int hi = std::min(gwp.end_year(), energy.end_year());
    if (lo > hi)
        throw Error(ErrorKind::Coverage, "gwp and energy do not overlap");
    AnnualSeries f;
    f.start_year = lo;
    f.unit = Unit::Dimensionless; // USD/yr per Watt
    f.name = "efficiency";
    for (int y = lo; y <= hi; ++y) {
        const double a = energy.at(y);
        if (!(a > 0.0))
            throw Error(ErrorKind::Domain, "energy must be positive");
        f.values.push_back(gwp.at(y) / a);
    }
    return f;
}

} // namespace thermo
