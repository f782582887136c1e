#include "thermo/techchange.hpp"

#include <cmath>

namespace thermo {

namespace {

void check_period(Period p) {
    if (p.start >= p.end)
        throw Error(ErrorKind::Parameter, "period requires start < end");
}

} // namespace

double longevity_rate(const AnnualSeries& inflation, Period period) {
    check_period(period);
    const double i0 = inflation.at(period.start);
    const double i1 = inflation.at(period.end);
    return -(i1 - i0) / (period.end - period.start);
}

double net_discovery_rate(const ReserveLedger& ledger, Period period,
                          ReserveWeighting weighting,
                          std::map<std::string, double>* per_fuel) {
    check_period(period);
    if (ledger.fuels.empty())
        throw Error(ErrorKind::Coverage, "reserve ledger has no fuels");
    double weighted = 0.0;
    double total_weight = 0.0;
    for (const auto& [name, fuel] : ledger.fuels) {
        const double rate =
            interval_average_rate(fuel.stock, period.start, period.end);
        double w;
        if (weighting == ReserveWeighting::PeriodMeanProduction)
            w = mean_over(fuel.production, period.start, period.end);
        else
            w = 0.5 * (fuel.production.at(period.start) +
                       fuel.production.at(period.end));
        if (per_fuel) (*per_fuel)[name] = rate;
        weighted += w * rate;
        total_weight += w;
    }
    if (!(total_weight > 0.0))
        throw Error(ErrorKind::Domain, "zero total production weight");
    return weighted / total_weight;
}

double extraction_efficiency_rate(
    const std::map<std::string, AnnualSeries>& materials,
    const AnnualSeries& energy, Period period,
    std::map<std::string, double>* per_class) {
    check_period(period);
    const auto need = [&](const char* key) -> const AnnualSeries& {
        const auto it = materials.find(key);
        if (it == materials.end())
            throw Error(ErrorKind::Coverage,
                        std::string("missing material series '") + key + "'");
        return it->second;
    };
    const AnnualSeries& cement = need("cement");
    const AnnualSeries& wood = need("wood");
    const AnnualSeries& iron = need("iron_steel");
    const AnnualSeries& copper = need("copper");

    // wood + cement combined by volume before any differencing
    const int lo = std::max(cement.start_year, wood.start_year);
    const int hi = std::min(cement.end_year(), wood.end_year());
    AnnualSeries cw;
    cw.start_year = lo;
    cw.unit = Unit::MassPerYear;
    cw.name = "cement_wood";
    for (int y = lo; y <= hi; ++y)
        cw.values.push_back(cement.at(y) + wood.at(y));

    const double e_rate =
        interval_average_rate(energy, period.start, period.end);
    const double r_cw =
        interval_average_rate(cw, period.start, period.end) - e_rate;
    const double r_iron =
        interval_average_rate(iron, period.start, period.end) - e_rate;
    const double r_cu =
        interval_average_rate(copper, period.start, period.end) - e_rate;
    if (per_class) {
        (*per_class)["cement_wood"] = r_cw;
        (*per_class)["iron_steel"] = r_iron;
        (*per_class)["copper"] = r_cu;
    }
    return (r_cw + r_iron + r_cu) / 3.0;
}

TechChangeComponents eta_tech_physical(const EconomicDataset& dataset,
                                       Period period,
                                       ReserveWeighting weighting) {
    check_period(period);
    if (!dataset.inflation)
        throw Error(ErrorKind::Coverage, "dataset has no inflation series");
    if (!dataset.has_reserve_inputs())
        throw Error(ErrorKind::Coverage,
                    "dataset lacks reserve/production series");

    ReserveLedger ledger;
    ledger.fuels["oil"] = {*dataset.oil_reserves, *dataset.oil_production};
    ledger.fuels["gas"] = {*dataset.gas_reserves, *dataset.gas_production};
    // coal consumption is not reserve-constrained: production capacity
    // stands in for the stock
    ledger.fuels["coal"] = {*dataset.coal_production, *dataset.coal_production};

    TechChangeComponents out;
    out.period = period;
    out.eta_delta = longevity_rate(*dataset.inflation, period);
    out.eta_reserves =
        net_discovery_rate(ledger, period, weighting, &out.per_fuel);
    out.eta_extraction = extraction_efficiency_rate(
        dataset.materials, dataset.energy, period, &out.per_material);
    out.eta_tech_total =
        out.eta_delta + out.eta_reserves + out.eta_extraction;
    return out;
}

double eta_tech_implied(const GrowthDiagnostics& diag, Period period) {
    check_period(period);
    return mean_over(diag.innovation, period.start, period.end) +
           2.0 * mean_over(diag.eta, period.start, period.end);
}

} // namespace thermo
