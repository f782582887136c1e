#include "thermo/series.hpp"

#include <cmath>

namespace thermo {

const char* unit_tag(Unit u) {
    switch (u) {
    case Unit::Watts: return "watts";
    case Unit::CurrencyPerYear: return "usd2005_per_year";
    case Unit::Currency: return "usd2005";
    case Unit::EnergyPerYear: return "ej_per_year";
    case Unit::Energy: return "ej";
    case Unit::FractionPerYear: return "fraction_per_year";
    case Unit::Dimensionless: return "dimensionless";
    case Unit::MassPerYear: return "mass_per_year";
    }
    return "unknown";
}

bool unit_from_tag(const std::string& tag, Unit& out) {
    static const struct { const char* tag; Unit u; } table[] = {
        {"watts", Unit::Watts},
        {"usd2005_per_year", Unit::CurrencyPerYear},
        {"usd2005", Unit::Currency},
        {"ej_per_year", Unit::EnergyPerYear},
        {"ej", Unit::Energy},
        {"fraction_per_year", Unit::FractionPerYear},
        {"dimensionless", Unit::Dimensionless},
        {"mass_per_year", Unit::MassPerYear},
        // volume fluxes (wood, cement) share the flux-rate slot: only their
        // growth rates ever enter the computation
        {"volume_per_year", Unit::MassPerYear},
    };
    for (const auto& row : table) {
        if (tag == row.tag) {
            out = row.u;
            return true;
        }
    }
    return false;
}

bool is_flux_unit(Unit u) {
    switch (u) {
    case Unit::Watts:
    case Unit::CurrencyPerYear:
    case Unit::EnergyPerYear:
    case Unit::FractionPerYear:
    case Unit::MassPerYear:
        return true;
    default:
        return false;
    }
}

Unit integrated_unit(Unit flux) {
    switch (flux) {
    case Unit::CurrencyPerYear: return Unit::Currency;
    case Unit::EnergyPerYear: return Unit::Energy;
    case Unit::Watts: return Unit::Energy; // Joules, up to the year constant
    case Unit::FractionPerYear: return Unit::Dimensionless;
    case Unit::MassPerYear: return Unit::Dimensionless;
    default:
        throw Error(ErrorKind::Unit, "cannot integrate non-flux unit");
    }
}

AnnualSeries integrate_cumulative(const AnnualSeries& series, double initial) {
    if (!is_flux_unit(series.unit))
        throw Error(ErrorKind::Unit,
                    series.name + ": integrate_cumulative needs a per-year "
                                  "flux unit, got " +
                        unit_tag(series.unit));
    AnnualSeries out;
    out.start_year = series.start_year;
    out.unit = integrated_unit(series.unit);
    out.name = series.name + "_integral";
    out.values.resize(series.values.size());
    double acc = initial;
    for (size_t i = 0; i < series.values.size(); ++i) {
        if (i > 0) acc += 0.5 * (series.values[i - 1] + series.values[i]);
        out.values[i] = acc;
    }
    return out;
}

RateSeries log_derivative(const AnnualSeries& series) {
    if (series.size() < 3)
        throw Error(ErrorKind::Coverage,
                    series.name + ": need at least 3 years for a centered "
                                  "log-derivative");
    for (double v : series.values)
        if (!(v > 0.0))
            throw Error(ErrorKind::Domain,
                        series.name + ": log_derivative requires strictly "
                                      "positive values");
    RateSeries out;
    out.start_year = series.start_year + 1;
    out.unit = Unit::FractionPerYear;
    out.name = "dln_" + series.name;
    out.values.resize(series.values.size() - 2);
    for (size_t i = 1; i + 1 < series.values.size(); ++i)
        out.values[i - 1] =
            0.5 * (std::log(series.values[i + 1]) -
                   std::log(series.values[i - 1]));
    return out;
}

AnnualSeries running_decadal_mean(const AnnualSeries& series,
                                  int window_years) {
    if (window_years < 0)
        throw Error(ErrorKind::Parameter, "window_years must be >= 0");
    AnnualSeries out = series;
    const int h = window_years / 2; // 10 -> +-5 (11-point window)
    if (h == 0) return out;
    const int n = series.size();
    for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - h);
        const int hi = std::min(n - 1, i + h);
        double s = 0.0;
        for (int j = lo; j <= hi; ++j) s += series.values[j];
        out.values[i] = s / (hi - lo + 1);
    }
    return out;
}

double interval_average_rate(const AnnualSeries& series, int year_a,
                             int year_b) {
    if (year_a >= year_b)
        throw Error(ErrorKind::Parameter, "interval requires year_a < year_b");
    const double va = series.at(year_a);
    const double vb = series.at(year_b);
    if (!(va > 0.0) || !(vb > 0.0))
        throw Error(ErrorKind::Domain,
                    series.name + ": interval_average_rate requires positive "
                                  "endpoint values");
    return (std::log(vb) - std::log(va)) / (year_b - year_a);
}

double mean_over(const AnnualSeries& series, int year_a, int year_b) {
    if (year_a > year_b)
        throw Error(ErrorKind::Parameter, "mean_over requires year_a <= year_b");
    if (!series.contains(year_a) || !series.contains(year_b))
        throw Error(ErrorKind::Coverage,
                    series.name + ": window " + std::to_string(year_a) + ".." +
                        std::to_string(year_b) + " not covered by span " +
                        std::to_string(series.start_year) + ".." +
                        std::to_string(series.end_year()));
    double s = 0.0;
    for (int y = year_a; y <= year_b; ++y) s += series.at(y);
    return s / (year_b - year_a + 1);
}

} // namespace thermo
