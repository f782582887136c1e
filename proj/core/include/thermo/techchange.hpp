#pragma once

#include <map>
#include <string>

#include "thermo/diagnostics.hpp"
#include "thermo/ingest.hpp"
#include "thermo/series.hpp"

namespace thermo {

// How to weight the per-fuel reserve-growth rates into a single number.
// The default matches the published table (period-mean production, EJ/yr);
// endpoint weights are an alternative the source text does not rule out.
enum class ReserveWeighting { PeriodMeanProduction, EndpointProduction };

struct Period {
    int start = 0;
    int end = 0;
};

// Physical estimate of the rate of technological change over a period,
// as the exact sum of three components.
struct TechChangeComponents {
    double eta_delta = 0.0;      // longevity term, from falling inflation
    double eta_reserves = 0.0;   // production-weighted reserve growth
    double eta_extraction = 0.0; // material-per-energy growth, class mean
    double eta_tech_total = 0.0; // sum of the three
    Period period;
    std::map<std::string, double> per_fuel;     // oil/gas/coal rates
    std::map<std::string, double> per_material; // class rates
};

// Per-fuel reserve (or capacity-proxy) series, production series, and an
// optional explicit discovery series that overrides stock-change inference.
struct ReserveLedger {
    struct Fuel {
        AnnualSeries stock;      // reserves (oil, gas) or capacity proxy (coal)
        AnnualSeries production; // EJ/yr, used for weighting
    };
    std::map<std::string, Fuel> fuels;
};

// -(i(end) - i(start)) / (end - start): the negated average time-derivative
// of the inflation rate, proxying the change in material longevity.
double longevity_rate(const AnnualSeries& inflation, Period period);

// Per-fuel interval growth rate of the stock series; total is the
// production-weighted mean. Writes the per-fuel breakdown when requested.
double net_discovery_rate(const ReserveLedger& ledger, Period period,
                          ReserveWeighting weighting,
                          std::map<std::string, double>* per_fuel = nullptr);

// Per-class rate = interval rate of class consumption minus interval rate of
// energy; wood and cement are volume-summed into one class before
// differencing; total is the unweighted mean of the three class rates.
double extraction_efficiency_rate(
    const std::map<std::string, AnnualSeries>& materials,
    const AnnualSeries& energy, Period period,
    std::map<std::string, double>* per_class = nullptr);

// Assemble all three components from a dataset.
TechChangeComponents eta_tech_physical(
    const EconomicDataset& dataset, Period period,
    ReserveWeighting weighting = ReserveWeighting::PeriodMeanProduction);

// Growth-implied estimate: mean innovation + 2 * mean eta over the period
// (arithmetic means of the unsmoothed annual series).
double eta_tech_implied(const GrowthDiagnostics& diag, Period period);

} // namespace thermo
