#pragma once

#include <optional>

#include "thermo/diagnostics.hpp"
#include "thermo/ingest.hpp"
#include "thermo/logistic.hpp"
#include "thermo/techchange.hpp"

namespace thermo {

enum class EtaTechSource { ImpliedFromTraining, Physical, Explicit };

struct HindcastConfig {
    int train_start = 1950;
    int train_end = 1960;
    int init_year = 1960;
    int eval_start = 2000;
    int eval_end = 2010;
    EtaTechSource eta_tech_source = EtaTechSource::ImpliedFromTraining;
    double explicit_eta_tech = 0.0; // used when source == Explicit
    // train on decadal-smoothed series instead of raw annual means
    bool smoothed_training = false;

    void validate() const {
        if (!(train_start < train_end && train_end <= init_year &&
              init_year <= eval_start && eval_start < eval_end))
            throw Error(ErrorKind::Parameter,
                        "windows must satisfy train < init <= eval");
    }
};

// One scored quantity: constant persistence baseline, logistic hindcast,
// observed decade average, and Eq.-style skill (raw and clamped at zero).
struct QuantityScore {
    double persistence = 0.0;
    double hindcast = 0.0;
    double observed = 0.0;
    std::optional<double> observed_energy; // energy-pathway alternate
    double skill = 0.0;
    double skill_clamped = 0.0;
};

struct HindcastReport {
    QuantityScore eta;
    QuantityScore innovation;
    QuantityScore gwp_growth;
    double eta0 = 0.0;     // calibrated at init year
    double eta_tech = 0.0; // per configured source
    double growth_number = 0.0;
    HindcastConfig config;
    Trajectory trajectory; // init..eval, annual, for plotting
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0; // 1/yr
    double slope_ci95 = 0.0;
    double intercept_ci95 = 0.0;
    int n = 0;
    double r_squared = 0.0;
};

struct PersistenceMeans {
    double eta = 0.0;
    double innovation = 0.0;
    double gwp_growth = 0.0;
};

// raw = 1 - |hindcast - observed| / |persistence - observed|; clamped at 0.
// Throws UndefinedSkill when the persistence error is exactly zero.
std::pair<double, double> skill_score(double hindcast, double persistence,
                                      double observed);

// Train-window arithmetic means of the three diagnostic rates.
PersistenceMeans persistence_forecast(const GrowthDiagnostics& diag,
                                      int train_start, int train_end,
                                      bool smoothed = false);

HindcastReport run_hindcast(const EconomicDataset& dataset,
                            const HindcastConfig& config);

// OLS with 95% confidence intervals from Student-t on n-2 dof.
FitResult ols_fit(const std::vector<double>& x, const std::vector<double>& y);

// Regression of innovation rate on rate of return over a year window,
// on decadal-smoothed pairs by default.
FitResult fit_innovation_vs_return(const GrowthDiagnostics& diag,
                                   int window_start, int window_end,
                                   bool smoothed = true);

} // namespace thermo
