#include "thermo/logistic.hpp"

#include <cmath>

namespace thermo {

double eta_analytic(const LogisticParams& p, double t) {
    if (p.eta_tech == 0.0) return p.eta0 / (1.0 + 2.0 * p.eta0 * t);
    const double g = p.growth_number();
    return (0.5 * p.eta_tech) /
           (1.0 + (g - 1.0) * std::exp(-p.eta_tech * t));
}

double gwp_growth_analytic(const LogisticParams& p, double t) {
    if (p.eta_tech == 0.0) return -p.eta0 / (1.0 + 2.0 * p.eta0 * t);
    const double g = p.growth_number();
    const double e = std::exp(-p.eta_tech * t);
    return 0.5 * p.eta_tech * (1.0 + 2.0 * (g - 1.0) * e) /
           (1.0 + (g - 1.0) * e);
}

double eta_integral_analytic(const LogisticParams& p, double t) {
    if (p.eta_tech == 0.0) return 0.5 * std::log1p(2.0 * p.eta0 * t);
    const double g = p.growth_number();
    const double ut = p.eta_tech * t;
    if (ut > 0.0) {
        // factor out exp(ut) to stay finite for long horizons
        return 0.5 * (ut + std::log1p((g - 1.0) * std::exp(-ut)) -
                      std::log(g));
    }
    return 0.5 * std::log(((g - 1.0) + std::exp(ut)) / g);
}

double mean_eta_analytic(const LogisticParams& p, double t1, double t2) {
    if (!(t2 > t1))
        throw Error(ErrorKind::Parameter, "interval requires t1 < t2");
    return (eta_integral_analytic(p, t2) - eta_integral_analytic(p, t1)) /
           (t2 - t1);
}

double mean_innovation_analytic(const LogisticParams& p, double t1,
                                double t2) {
    if (!(t2 > t1))
        throw Error(ErrorKind::Parameter, "interval requires t1 < t2");
    return (std::log(eta_analytic(p, t2)) - std::log(eta_analytic(p, t1))) /
           (t2 - t1);
}

double mean_gwp_growth_analytic(const LogisticParams& p, double t1,
                                double t2) {
    return mean_eta_analytic(p, t1, t2) +
           mean_innovation_analytic(p, t1, t2);
}

namespace {

inline double rhs(double eta_tech, double eta) {
    return eta_tech * eta - 2.0 * eta * eta;
}

} // namespace

Trajectory integrate_ode(const LogisticParams& p, double horizon, double dt) {
    if (!(dt > 0.0) || !(horizon > 0.0))
        throw Error(ErrorKind::Parameter, "horizon and dt must be positive");
    const long n = std::lround(horizon / dt);
    if (n < 1)
        throw Error(ErrorKind::Parameter, "horizon shorter than one step");
    Trajectory tr;
    tr.years.reserve(n + 1);
    tr.eta.reserve(n + 1);
    tr.gwp_growth.reserve(n + 1);
    tr.innovation.reserve(n + 1);
    const double u = p.eta_tech;
    double eta = p.eta0;
    for (long k = 0; k <= n; ++k) {
        tr.years.push_back(p.t0 + k * dt);
        tr.eta.push_back(eta);
        tr.innovation.push_back(u - 2.0 * eta);
        tr.gwp_growth.push_back(u - eta);
        if (k == n) break;
        const double k1 = rhs(u, eta);
        const double k2 = rhs(u, eta + 0.5 * dt * k1);
        const double k3 = rhs(u, eta + 0.5 * dt * k2);
        const double k4 = rhs(u, eta + dt * k3);
        eta += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return tr;
}

namespace {

// piecewise-linear eta_tech(t) over calendar time
double eta_tech_at(const RateSeries& s, double t) {
    const double lo = s.start_year;
    const double hi = s.end_year();
    // tolerate float roundoff at the horizon endpoint
    if (t < lo - 1e-9 || t > hi + 1e-9)
        throw Error(ErrorKind::Coverage,
                    "eta_tech series does not cover t = " + std::to_string(t));
    if (t >= hi) return s.values.back();
    if (t <= lo) return s.values.front();
    const int i = static_cast<int>(std::floor(t - lo));
    const double frac = (t - lo) - i;
    return s.values[i] + frac * (s.values[i + 1] - s.values[i]);
}

} // namespace

Trajectory time_dependent_eta_tech_integrate(double eta0, double t0,
                                             const RateSeries& eta_tech_series,
                                             double horizon, double dt) {
    if (!(eta0 > 0.0))
        throw Error(ErrorKind::Parameter, "eta0 must be positive");
    if (!(dt > 0.0) || !(horizon > 0.0))
        throw Error(ErrorKind::Parameter, "horizon and dt must be positive");
    if (eta_tech_series.size() < 1)
        throw Error(ErrorKind::Coverage, "empty eta_tech series");
    const long n = std::lround(horizon / dt);
    if (n < 1)
        throw Error(ErrorKind::Parameter, "horizon shorter than one step");
    // validate coverage up front so we fail before integrating half-way
    eta_tech_at(eta_tech_series, t0);
    eta_tech_at(eta_tech_series, t0 + n * dt);

    Trajectory tr;
    double eta = eta0;
    for (long k = 0; k <= n; ++k) {
        const double t = t0 + k * dt;
        const double u = eta_tech_at(eta_tech_series, t);
        tr.years.push_back(t);
        tr.eta.push_back(eta);
        tr.innovation.push_back(u - 2.0 * eta);
        tr.gwp_growth.push_back(u - eta);
        if (k == n) break;
        const double um = eta_tech_at(eta_tech_series, t + 0.5 * dt);
        const double ue = eta_tech_at(eta_tech_series, t + dt);
        const double k1 = rhs(u, eta);
        const double k2 = rhs(um, eta + 0.5 * dt * k1);
        const double k3 = rhs(um, eta + 0.5 * dt * k2);
        const double k4 = rhs(ue, eta + dt * k3);
        eta += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return tr;
}

} // namespace thermo
