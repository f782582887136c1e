#include <cmath>

#include <doctest.h>

#include "thermo/diagnostics.hpp"
#include "thermo/ingest.hpp"
#include "thermo/logistic.hpp"

using namespace thermo;

namespace {

AnnualSeries make(int start, std::vector<double> v, Unit u) {
    AnnualSeries s;
    s.start_year = start;
    s.values = std::move(v);
    s.unit = u;
    s.name = "test";
    return s;
}

// GWP sampled annually from the logistic closed forms:
// Y(t) = eta(t) * C(t) with C(t) = C0 * exp(integral of eta).
AnnualSeries logistic_gwp(const LogisticParams& p, int years, double c0) {
    std::vector<double> v(years);
    for (int t = 0; t < years; ++t)
        v[t] = eta_analytic(p, t) * c0 * std::exp(eta_integral_analytic(p, t));
    return make(int(p.t0), std::move(v), Unit::CurrencyPerYear);
}

const EconomicDataset& fixture() {
    static const EconomicDataset ds = load_dataset(THERMO_FIXTURE_MANIFEST);
    return ds;
}

} // namespace

TEST_CASE("rate of return: direct ratio on a constant economy") {
    const RateSeries eta = rate_of_return(
        make(2000, std::vector<double>(3, 1.0), Unit::CurrencyPerYear), 99.0);
    CHECK(eta.at(2001) == doctest::Approx(0.01).epsilon(1e-14));
}

TEST_CASE("rate of return: fixture long-run level and 2008 high") {
    const RateSeries eta = rate_of_return(fixture().gwp,
                                          fixture().initial_wealth);
    CHECK(mean_over(eta, 1970, 2010) == doctest::Approx(0.019).epsilon(0.03));
    CHECK(eta.at(2008) == doctest::Approx(0.0224).epsilon(0.01));
}

TEST_CASE("innovation rate: constant return gives zero") {
    const RateSeries z = innovation_rate(
        make(1990, std::vector<double>(5, 0.02), Unit::FractionPerYear));
    for (double x : z.values) CHECK(x == 0.0);
}

TEST_CASE("innovation rate: fixture period means") {
    const GrowthDiagnostics d =
        gwp_growth_decomposition(fixture().gwp, fixture().initial_wealth);
    CHECK(std::fabs(mean_over(d.innovation, 1950, 1960) - 0.033) < 0.001);
    CHECK(std::fabs(mean_over(d.innovation, 1990, 2010) - 0.006) < 0.001);
}

TEST_CASE("decomposition residual is tiny on analytic logistic data") {
    const LogisticParams p(0.015, 0.05, 1900.0);
    const GrowthDiagnostics d =
        gwp_growth_decomposition(logistic_gwp(p, 100, 1.0e14), 1.0e14);
    CHECK(d.max_identity_residual < 1e-4);
    CHECK(d.max_accumulation_residual < 1e-4);
}

TEST_CASE("decomposition residual shrinks at second order in the step") {
    // Sample the same smooth economy at step dt by treating each step as one
    // "year" of a time-rescaled process: rates scale by dt, so the per-year
    // residual is max_identity_residual / dt. Halving dt must divide it ~4.
    const LogisticParams p(0.012, 0.048, 0.0);
    const double c0 = 1.0e14;
    const double span = 60.0;
    double prev = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double dt = 1.0 / double(1 << k);
        const int n = int(span / dt) + 1;
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) {
            const double t = i * dt;
            v[i] = dt * eta_analytic(p, t) * c0 *
                   std::exp(eta_integral_analytic(p, t));
        }
        const GrowthDiagnostics d = gwp_growth_decomposition(
            make(0, std::move(v), Unit::CurrencyPerYear), c0);
        const double per_year = d.max_identity_residual / dt;
        if (k > 0) CHECK(prev / per_year == doctest::Approx(4.0).epsilon(0.13));
        prev = per_year;
    }
}

TEST_CASE("fixture smoothed GWP growth: fast mid-century, ~3% after 1980") {
    const GrowthDiagnostics d = gwp_growth_decomposition(
        fixture().gwp, fixture().initial_wealth, &fixture().energy);
    const double early = mean_over(d.gwp_growth_smoothed, 1955, 1965);
    CHECK(early > 0.04);
    CHECK(early < 0.05);
    const double late = mean_over(d.gwp_growth_smoothed, 1985, 2005);
    CHECK(late == doctest::Approx(0.03).epsilon(0.2));
}

TEST_CASE("currency re-basing leaves all diagnostic rates unchanged") {
    const double k = 3.7;
    AnnualSeries gwp = fixture().gwp;
    const GrowthDiagnostics a =
        gwp_growth_decomposition(gwp, fixture().initial_wealth);
    for (auto& x : gwp.values) x *= k;
    const GrowthDiagnostics b =
        gwp_growth_decomposition(gwp, k * fixture().initial_wealth);
    for (int i = 0; i < a.eta.size(); ++i)
        CHECK(std::fabs(a.eta.values[i] - b.eta.values[i]) < 1e-12);
    for (int i = 0; i < a.innovation.size(); ++i) {
        CHECK(std::fabs(a.innovation.values[i] - b.innovation.values[i]) <
              1e-12);
        CHECK(std::fabs(a.gwp_growth.values[i] - b.gwp_growth.values[i]) <
              1e-12);
    }
}

TEST_CASE("production efficiency: exact proportionality gives lambda*f = eta") {
    const double lambda = 0.0071;
    std::vector<double> y(30);
    for (int t = 0; t < 30; ++t)
        y[t] = 5e13 * std::exp(0.02 * t + 0.01 * std::sin(0.3 * t));
    const AnnualSeries gwp = make(1950, y, Unit::CurrencyPerYear);
    const AnnualSeries c = wealth_series(gwp, 1e15);
    AnnualSeries energy;
    energy.start_year = 1950;
    energy.unit = Unit::Watts;
    energy.name = "energy";
    for (double cv : c.values) energy.values.push_back(lambda * cv);

    const AnnualSeries f = production_efficiency(gwp, energy);
    const RateSeries eta = rate_of_return(gwp, 1e15);
    for (int yy = 1950; yy <= 1979; ++yy)
        CHECK(std::fabs(lambda * f.at(yy) - eta.at(yy)) / eta.at(yy) < 1e-12);

    // doubling f at fixed lambda doubles eta: trivially lambda*(2f) = 2*eta
    for (int yy = 1950; yy <= 1979; ++yy)
        CHECK(lambda * (2.0 * f.at(yy)) ==
              doctest::Approx(2.0 * eta.at(yy)).epsilon(1e-12));
}

TEST_CASE("fixture: efficiency growth tracks innovation within lambda wobble") {
    const GrowthDiagnostics d = gwp_growth_decomposition(
        fixture().gwp, fixture().initial_wealth, &fixture().energy);
    const RateSeries df = log_derivative(d.efficiency);
    const int lo = std::max(df.start_year, d.innovation.start_year);
    const int hi = std::min(df.end_year(), d.innovation.end_year());
    double max_dev = 0.0;
    for (int y = lo; y <= hi; ++y)
        max_dev = std::max(max_dev, std::fabs(df.at(y) - d.innovation.at(y)));
    // error budget: twice the relative SD of lambda per year
    CHECK(max_dev < 2.0 * 0.02);
}

TEST_CASE("production efficiency rejects disjoint spans") {
    const AnnualSeries gwp =
        make(1950, std::vector<double>(5, 1.0), Unit::CurrencyPerYear);
    const AnnualSeries energy =
        make(1990, std::vector<double>(5, 1.0), Unit::Watts);
    CHECK_THROWS_AS(production_efficiency(gwp, energy), Error);
}
