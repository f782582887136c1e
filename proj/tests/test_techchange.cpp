#include <cmath>

#include <doctest.h>

#include "thermo/techchange.hpp"

using namespace thermo;

namespace {

AnnualSeries make(int start, std::vector<double> v, Unit u,
                  const std::string& name = "test") {
    AnnualSeries s;
    s.start_year = start;
    s.values = std::move(v);
    s.unit = u;
    s.name = name;
    return s;
}

AnnualSeries exp_series(int start, int n, double v0, double rate, Unit u,
                        const std::string& name = "test") {
    std::vector<double> v(n);
    for (int t = 0; t < n; ++t) v[t] = v0 * std::exp(rate * t);
    return make(start, std::move(v), u, name);
}

const EconomicDataset& fixture() {
    static const EconomicDataset ds = load_dataset(THERMO_FIXTURE_MANIFEST);
    return ds;
}

// A fully static synthetic world: every physical driver constant.
EconomicDataset constant_world() {
    EconomicDataset ds;
    ds.gwp = exp_series(1950, 61, 1e13, 0.0, Unit::CurrencyPerYear, "gwp");
    ds.energy = exp_series(1950, 61, 1e13, 0.0, Unit::Watts, "energy");
    ds.initial_wealth = 1e15;
    ds.oil_reserves = exp_series(1950, 61, 5000.0, 0.0, Unit::Energy, "oil_r");
    ds.gas_reserves = exp_series(1950, 61, 2000.0, 0.0, Unit::Energy, "gas_r");
    ds.oil_production =
        exp_series(1950, 61, 100.0, 0.0, Unit::EnergyPerYear, "oil_p");
    ds.gas_production =
        exp_series(1950, 61, 50.0, 0.0, Unit::EnergyPerYear, "gas_p");
    ds.coal_production =
        exp_series(1950, 61, 80.0, 0.0, Unit::EnergyPerYear, "coal_p");
    ds.materials["cement"] =
        exp_series(1950, 61, 1e9, 0.0, Unit::MassPerYear, "cement");
    ds.materials["wood"] =
        exp_series(1950, 61, 2e9, 0.0, Unit::MassPerYear, "wood");
    ds.materials["iron_steel"] =
        exp_series(1950, 61, 2e8, 0.0, Unit::MassPerYear, "iron_steel");
    ds.materials["copper"] =
        exp_series(1950, 61, 3e6, 0.0, Unit::MassPerYear, "copper");
    ds.inflation =
        make(1950, std::vector<double>(61, 0.03), Unit::FractionPerYear,
             "inflation");
    return ds;
}

} // namespace

TEST_CASE("longevity rate: constant and linearly falling inflation") {
    const AnnualSeries flat =
        make(1990, std::vector<double>(21, 0.03), Unit::FractionPerYear);
    CHECK(longevity_rate(flat, {1990, 2010}) == 0.0);

    std::vector<double> falling(11);
    for (int t = 0; t <= 10; ++t) falling[t] = 0.04 - 0.002 * t;
    CHECK(longevity_rate(make(2000, falling, Unit::FractionPerYear),
                         {2000, 2010}) ==
          doctest::Approx(0.002).epsilon(1e-14));
}

TEST_CASE("longevity rate: fixture 1990-2010 is about +0.2 pp/yr") {
    CHECK(std::fabs(longevity_rate(*fixture().inflation, {1990, 2010}) -
                    0.002) < 0.001);
}

TEST_CASE("net discovery rate: single fuel and constant reserves") {
    ReserveLedger one;
    one.fuels["oil"] = {exp_series(1950, 21, 1000.0, 0.036, Unit::Energy),
                        exp_series(1950, 21, 60.0, 0.02, Unit::EnergyPerYear)};
    CHECK(net_discovery_rate(one, {1950, 1970},
                             ReserveWeighting::PeriodMeanProduction) ==
          doctest::Approx(0.036).epsilon(1e-12));

    ReserveLedger flat;
    flat.fuels["oil"] = {exp_series(1950, 21, 1000.0, 0.0, Unit::Energy),
                         exp_series(1950, 21, 60.0, 0.0, Unit::EnergyPerYear)};
    flat.fuels["gas"] = {exp_series(1950, 21, 300.0, 0.0, Unit::Energy),
                         exp_series(1950, 21, 20.0, 0.0, Unit::EnergyPerYear)};
    CHECK(net_discovery_rate(flat, {1950, 1970},
                             ReserveWeighting::PeriodMeanProduction) == 0.0);
}

TEST_CASE("net discovery rate: fixture 1950-1970 per-fuel and total") {
    ReserveLedger ledger;
    ledger.fuels["oil"] = {*fixture().oil_reserves,
                           *fixture().oil_production};
    ledger.fuels["gas"] = {*fixture().gas_reserves,
                           *fixture().gas_production};
    ledger.fuels["coal"] = {*fixture().coal_production,
                            *fixture().coal_production};
    std::map<std::string, double> per_fuel;
    const double total = net_discovery_rate(
        ledger, {1950, 1970}, ReserveWeighting::PeriodMeanProduction,
        &per_fuel);
    CHECK(std::fabs(per_fuel["oil"] - 0.036) < 0.001);
    CHECK(std::fabs(per_fuel["gas"] - 0.082) < 0.001);
    CHECK(std::fabs(per_fuel["coal"] - 0.022) < 0.001);
    CHECK(std::fabs(total - 0.036) < 0.001);

    // weighted mean lies between the per-fuel extremes
    double lo = 1.0, hi = -1.0;
    for (const auto& [k, v] : per_fuel) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(total >= lo);
    CHECK(total <= hi);
}

TEST_CASE("extraction efficiency: frozen ratios and an isolated mover") {
    std::map<std::string, AnnualSeries> mats;
    mats["cement"] = exp_series(1950, 21, 1e9, 0.02, Unit::MassPerYear);
    mats["wood"] = exp_series(1950, 21, 2e9, 0.02, Unit::MassPerYear);
    mats["iron_steel"] = exp_series(1950, 21, 2e8, 0.02, Unit::MassPerYear);
    mats["copper"] = exp_series(1950, 21, 3e6, 0.02, Unit::MassPerYear);
    const AnnualSeries energy = exp_series(1950, 21, 1e13, 0.02, Unit::Watts);
    CHECK(std::fabs(extraction_efficiency_rate(mats, energy, {1950, 1970})) <
          1e-12);

    // energy flat, copper +1%/yr, everything else flat -> mean 1/3 %/yr
    std::map<std::string, AnnualSeries> mats2 = mats;
    for (auto& [k, s] : mats2)
        s = exp_series(1950, 21, s.values.front(), 0.0, Unit::MassPerYear);
    mats2["copper"] = exp_series(1950, 21, 3e6, 0.01, Unit::MassPerYear);
    const AnnualSeries flat = exp_series(1950, 21, 1e13, 0.0, Unit::Watts);
    CHECK(extraction_efficiency_rate(mats2, flat, {1950, 1970}) ==
          doctest::Approx(0.01 / 3.0).epsilon(1e-10));

    std::map<std::string, AnnualSeries> missing = mats;
    missing.erase("copper");
    CHECK_THROWS_AS(extraction_efficiency_rate(missing, energy, {1950, 1970}),
                    Error);
}

TEST_CASE("extraction efficiency: fixture 1950-1970 class rates") {
    std::map<std::string, double> per_class;
    const double total = extraction_efficiency_rate(
        fixture().materials, fixture().energy, {1950, 1970}, &per_class);
    CHECK(std::fabs(per_class["cement_wood"] - 0.022) < 0.001);
    CHECK(std::fabs(per_class["iron_steel"] - 0.046) < 0.001);
    CHECK(std::fabs(per_class["copper"] - 0.037) < 0.001);
    CHECK(std::fabs(total - 0.035) < 0.001);
}

TEST_CASE("assembled components: fixture period totals") {
    const TechChangeComponents p1 = eta_tech_physical(fixture(), {1950, 1970});
    CHECK(std::fabs(p1.eta_tech_total - 0.070) < 0.001);
    // exact sum identity
    CHECK(std::fabs(p1.eta_tech_total -
                    (p1.eta_delta + p1.eta_reserves + p1.eta_extraction)) <
          1e-15);

    const TechChangeComponents p2 = eta_tech_physical(fixture(), {1970, 1990});
    CHECK(std::fabs(p2.eta_tech_total - 0.008) < 0.001);

    const TechChangeComponents p3 = eta_tech_physical(fixture(), {1990, 2010});
    CHECK(std::fabs(p3.eta_tech_total - 0.016) < 0.001);

    // the three 20-year physical estimates nearly telescope into the 60-year
    // one; the production-weighted reserve term carries the only slack, so
    // the long average lands just below the naive 3.5 sum of the published
    // rows. Kept wide here; the strict table check lives in acceptance.
    const TechChangeComponents p4 = eta_tech_physical(fixture(), {1950, 2010});
    CHECK(p4.eta_tech_total > 0.033);
    CHECK(p4.eta_tech_total < 0.035);
}

TEST_CASE("assembled components: static world gives zeros") {
    const TechChangeComponents c =
        eta_tech_physical(constant_world(), {1950, 2010});
    CHECK(c.eta_delta == 0.0);
    CHECK(std::fabs(c.eta_reserves) < 1e-14);
    CHECK(std::fabs(c.eta_extraction) < 1e-14);
}

TEST_CASE("assembled components: invariant under material rescaling") {
    EconomicDataset scaled = fixture();
    for (auto& [k, s] : scaled.materials)
        for (auto& v : s.values) v *= 42.0;
    const TechChangeComponents a = eta_tech_physical(fixture(), {1950, 2010});
    const TechChangeComponents b = eta_tech_physical(scaled, {1950, 2010});
    CHECK(std::fabs(a.eta_tech_total - b.eta_tech_total) < 1e-12);
}

TEST_CASE("growth-implied estimate: fixture periods") {
    const GrowthDiagnostics d =
        gwp_growth_decomposition(fixture().gwp, fixture().initial_wealth);
    CHECK(std::fabs(eta_tech_implied(d, {1950, 1970}) - 0.053) < 0.002);
    CHECK(std::fabs(eta_tech_implied(d, {1970, 1990}) - 0.050) < 0.002);
    CHECK(std::fabs(eta_tech_implied(d, {1990, 2010}) - 0.047) < 0.002);
    CHECK(std::fabs(eta_tech_implied(d, {1950, 2010}) - 0.051) < 0.002);

    // the physical estimate runs well below the growth-implied one on the
    // 60-year mean; the gap is a real feature of the data, not a bug
    const TechChangeComponents phys =
        eta_tech_physical(fixture(), {1950, 2010});
    const double residual =
        eta_tech_implied(d, {1950, 2010}) - phys.eta_tech_total;
    CHECK(std::fabs(residual - 0.016) < 0.0025);
}

TEST_CASE("growth-implied estimate: stationary return gives exactly 2 eta") {
    GrowthDiagnostics d;
    d.eta = make(1950, std::vector<double>(20, 0.02), Unit::FractionPerYear);
    d.innovation =
        make(1951, std::vector<double>(18, 0.0), Unit::FractionPerYear);
    CHECK(eta_tech_implied(d, {1955, 1965}) ==
          doctest::Approx(0.04).epsilon(1e-14));
}

TEST_CASE("missing inputs raise coverage errors") {
    EconomicDataset ds = constant_world();
    ds.inflation.reset();
    CHECK_THROWS_AS(eta_tech_physical(ds, {1950, 2010}), Error);
    EconomicDataset ds2 = constant_world();
    ds2.gas_reserves.reset();
    CHECK_THROWS_AS(eta_tech_physical(ds2, {1950, 2010}), Error);
}
