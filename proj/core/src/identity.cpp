#include "thermo/identity.hpp"

#include <cmath>

namespace thermo {

AnnualSeries wealth_series(const AnnualSeries& gwp, double initial_wealth) {
    if (gwp.unit != Unit::CurrencyPerYear)
        throw Error(ErrorKind::Unit, "wealth_series expects a currency flux");
    AnnualSeries c = integrate_cumulative(gwp, initial_wealth);
    c.name = "wealth";
    c.unit = Unit::Currency;
    return c;
}

LambdaEstimate estimate_lambda(const AnnualSeries& energy,
                               const AnnualSeries& wealth, int window_a,
                               int window_b) {
    if (window_a >= window_b)
        throw Error(ErrorKind::Parameter, "window requires a < b");
    if (!energy.contains(window_a) || !energy.contains(window_b) ||
        !wealth.contains(window_a) || !wealth.contains(window_b))
        throw Error(ErrorKind::Range,
                    "lambda window " + std::to_string(window_a) + ".." +
                        std::to_string(window_b) +
                        " not covered by both series");

    LambdaEstimate est;
    est.per_year_lambda.start_year = window_a;
    est.per_year_lambda.unit = Unit::Dimensionless; // W/USD, no enum slot
    est.per_year_lambda.name = "lambda";
    double sum = 0.0;
    for (int y = window_a; y <= window_b; ++y) {
        const double c = wealth.at(y);
        if (!(c > 0.0))
            throw Error(ErrorKind::Domain, "wealth must be positive");
        const double l = energy.at(y) / c;
        est.per_year_lambda.values.push_back(l);
        sum += l;
    }
    est.n_years = est.per_year_lambda.size();
    est.mean_lambda = sum / est.n_years;
    double ss = 0.0;
    for (double l : est.per_year_lambda.values) {
        const double d = l - est.mean_lambda;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / est.n_years);
    est.relative_sd = sd / est.mean_lambda;
    est.ci95_halfwidth = 1.96 * sd / std::sqrt(double(est.n_years));
    return est;
}

AnnualSeries production_from_energy(const AnnualSeries& energy,
                                    double lambda) {
    if (!(lambda > 0.0))
        throw Error(ErrorKind::Parameter, "lambda must be positive");
    if (energy.size() < 3)
        throw Error(ErrorKind::Coverage,
                    "production_from_energy needs at least 3 years");
    AnnualSeries y;
    y.start_year = energy.start_year + 1;
    y.unit = Unit::CurrencyPerYear;
    y.name = "gwp_from_energy";
    y.values.resize(energy.values.size() - 2);
    for (size_t i = 1; i + 1 < energy.values.size(); ++i)
        y.values[i - 1] =
            0.5 * (energy.values[i + 1] - energy.values[i - 1]) / lambda;
    return y;
}

} // namespace thermo
