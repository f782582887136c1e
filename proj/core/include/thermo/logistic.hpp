#pragma once

#include <vector>

#include "thermo/series.hpp"

namespace thermo {

// Parameters of the prognostic logistic model
//   d eta/dt = eta_tech * eta - 2 eta^2
// with growth number G = (1/2) eta_tech / eta0. eta_tech <= 0 is allowed
// (decline scenarios); eta_tech = 0 uses the pure-diminishing-returns limit
// eta(t) = eta0 / (1 + 2 eta0 t).
struct LogisticParams {
    double eta0 = 0.0;     // 1/yr, at t0
    double eta_tech = 0.0; // 1/yr
    double t0 = 0.0;       // calendar year of initialization

    double growth_number() const { return 0.5 * eta_tech / eta0; }

    LogisticParams(double eta0_, double eta_tech_, double t0_)
        : eta0(eta0_), eta_tech(eta_tech_), t0(t0_) {
        if (!(eta0 > 0.0))
            throw Error(ErrorKind::Parameter, "eta0 must be positive");
    }
};

struct Trajectory {
    std::vector<double> years;      // calendar time, t0 + k*dt
    std::vector<double> eta;        // 1/yr
    std::vector<double> gwp_growth; // 1/yr, = eta_tech - eta along solutions
    std::vector<double> innovation; // 1/yr, = eta_tech - 2*eta pointwise
};

// Closed-form eta(t), t measured in years since t0.
double eta_analytic(const LogisticParams& p, double t);

// Closed-form d ln Y/dt (t years since t0). Equals eta + innovation.
double gwp_growth_analytic(const LogisticParams& p, double t);

// Running integral of eta from 0 to t: ln C(t) - ln C(0). Used for
// decade-average rates measured the same way observed decade rates are.
double eta_integral_analytic(const LogisticParams& p, double t);

// Decade (or any interval) averages from the closed forms over
// [t1, t2] years since t0.
double mean_eta_analytic(const LogisticParams& p, double t1, double t2);
double mean_innovation_analytic(const LogisticParams& p, double t1, double t2);
double mean_gwp_growth_analytic(const LogisticParams& p, double t1, double t2);

// Classic fixed-step RK4 on the scalar ODE; deterministic by construction.
Trajectory integrate_ode(const LogisticParams& p, double horizon, double dt);

// Same ODE with piecewise-linear eta_tech(t) taken from an annual rate
// series (calendar years). Reduces exactly to integrate_ode when the series
// is constant.
Trajectory time_dependent_eta_tech_integrate(double eta0, double t0,
                                             const RateSeries& eta_tech_series,
                                             double horizon, double dt);

} // namespace thermo
