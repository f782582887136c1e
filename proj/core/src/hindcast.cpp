#include "thermo/hindcast.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

namespace thermo {

std::pair<double, double> skill_score(double hindcast, double persistence,
                                      double observed) {
    const double pe = std::fabs(persistence - observed);
    if (pe == 0.0)
        throw Error(ErrorKind::UndefinedSkill,
                    "persistence equals observed; hindcast error " +
                        std::to_string(std::fabs(hindcast - observed)));
    const double raw = 1.0 - std::fabs(hindcast - observed) / pe;
    return {raw, std::max(0.0, raw)};
}

PersistenceMeans persistence_forecast(const GrowthDiagnostics& diag,
                                      int train_start, int train_end,
                                      bool smoothed) {
    PersistenceMeans m;
    const RateSeries& eta = smoothed ? diag.eta_smoothed : diag.eta;
    const RateSeries& innov =
        smoothed ? diag.innovation_smoothed : diag.innovation;
    const RateSeries& growth =
        smoothed ? diag.gwp_growth_smoothed : diag.gwp_growth;
    m.eta = mean_over(eta, train_start, train_end);
    m.innovation = mean_over(innov, train_start, train_end);
    m.gwp_growth = mean_over(growth, train_start, train_end);
    return m;
}

HindcastReport run_hindcast(const EconomicDataset& dataset,
                            const HindcastConfig& config) {
    config.validate();
    const GrowthDiagnostics diag = gwp_growth_decomposition(
        dataset.gwp, dataset.initial_wealth, &dataset.energy);

    HindcastReport rep;
    rep.config = config;
    rep.eta0 = diag.eta.at(config.init_year);

    const PersistenceMeans train = persistence_forecast(
        diag, config.train_start, config.train_end, config.smoothed_training);

    switch (config.eta_tech_source) {
    case EtaTechSource::ImpliedFromTraining:
        rep.eta_tech = train.innovation + 2.0 * train.eta;
        break;
    case EtaTechSource::Physical:
        rep.eta_tech = eta_tech_physical(
                           dataset, {config.train_start, config.train_end})
                           .eta_tech_total;
        break;
    case EtaTechSource::Explicit:
        rep.eta_tech = config.explicit_eta_tech;
        break;
    }

    const LogisticParams p(rep.eta0, rep.eta_tech, config.init_year);
    rep.growth_number = p.growth_number();

    const double t1 = config.eval_start - config.init_year;
    const double t2 = config.eval_end - config.init_year;
    rep.eta.hindcast = mean_eta_analytic(p, t1, t2);
    rep.innovation.hindcast = mean_innovation_analytic(p, t1, t2);
    rep.gwp_growth.hindcast = mean_gwp_growth_analytic(p, t1, t2);

    rep.eta.persistence = train.eta;
    rep.innovation.persistence = train.innovation;
    rep.gwp_growth.persistence = train.gwp_growth;

    // observed decade averages measured as interval (log-endpoint) rates,
    // matching how the hindcast decade means are defined
    rep.eta.observed = interval_average_rate(diag.wealth, config.eval_start,
                                             config.eval_end);
    rep.eta.observed_energy = interval_average_rate(
        dataset.energy, config.eval_start, config.eval_end);
    rep.innovation.observed =
        interval_average_rate(diag.eta, config.eval_start, config.eval_end);
    rep.gwp_growth.observed =
        interval_average_rate(dataset.gwp, config.eval_start, config.eval_end);

    for (QuantityScore* q :
         {&rep.eta, &rep.innovation, &rep.gwp_growth}) {
        const auto [raw, clamped] =
            skill_score(q->hindcast, q->persistence, q->observed);
        q->skill = raw;
        q->skill_clamped = clamped;
    }

    // annual trajectory for Fig.-7-style plots
    rep.trajectory =
        integrate_ode(p, config.eval_end - config.init_year, 1.0);
    return rep;
}

FitResult ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    if (n < 3 || y.size() != x.size())
        throw Error(ErrorKind::Fit, "need at least 3 paired points");
    double xb = 0.0, yb = 0.0;
    for (int i = 0; i < n; ++i) {
        xb += x[i];
        yb += y[i];
    }
    xb /= n;
    yb /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - xb) * (x[i] - xb);
        sxy += (x[i] - xb) * (y[i] - yb);
        syy += (y[i] - yb) * (y[i] - yb);
    }
    // relative threshold: a nominally constant predictor leaves sxx at the
    // level of mean-subtraction roundoff, not exactly zero
    const double roundoff = n * 1e-24 * xb * xb;
    if (!(sxx > roundoff))
        throw Error(ErrorKind::Fit, "degenerate fit: zero x variance");

    FitResult f;
    f.n = n;
    f.slope = sxy / sxx;
    f.intercept = yb - f.slope * xb;
    double ssr = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ssr += r * r;
    }
    const double s2 = ssr / (n - 2);
    const boost::math::students_t dist(n - 2);
    const double tcrit = boost::math::quantile(dist, 0.975);
    f.slope_ci95 = tcrit * std::sqrt(s2 / sxx);
    f.intercept_ci95 = tcrit * std::sqrt(s2 * (1.0 / n + xb * xb / sxx));
    f.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    return f;
}

FitResult fit_innovation_vs_return(const GrowthDiagnostics& diag,
                                   int window_start, int window_end,
                                   bool smoothed) {
    const RateSeries& ex = smoothed ? diag.eta_smoothed : diag.eta;
    const RateSeries& iy =
        smoothed ? diag.innovation_smoothed : diag.innovation;
    std::vector<double> x, y;
    for (int yr = window_start; yr <= window_end; ++yr) {
        if (ex.contains(yr) && iy.contains(yr)) {
            x.push_back(ex.at(yr));
            y.push_back(iy.at(yr));
        }
    }
    if (x.size() < 3)
        throw Error(ErrorKind::Fit,
                    "fewer than 3 paired points in fit window");
    return ols_fit(x, y);
}

} // namespace thermo
