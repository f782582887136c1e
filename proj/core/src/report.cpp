#include "thermo/report.hpp"

#include <cstdio>

namespace thermo {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// RFC-4180-style quoting; our field content is numeric or simple labels, but
// quote anything that needs it so downstream parsers stay honest.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

ordered_json make_envelope(const std::string& command,
                           const ordered_json& config,
                           const ordered_json& payload,
                           const EconomicDataset& dataset) {
    ordered_json env;
    env["command"] = command;
    env["version"] = kToolVersion;
    env["config"] = config;
    ordered_json prov = ordered_json::object();
    for (const auto& [k, v] : dataset.provenance) prov[k] = v;
    env["provenance"] = prov;
    env["result"] = payload;
    return env;
}

ordered_json diagnostics_payload(const GrowthDiagnostics& diag,
                                 const LambdaEstimate& lambda, int window_a,
                                 int window_b, bool smoothed) {
    ordered_json p;
    p["units"] = {{"eta", "fraction_per_year"},
                  {"innovation", "fraction_per_year"},
                  {"gwp_growth", "fraction_per_year"},
                  {"eta_from_energy", "fraction_per_year"},
                  {"efficiency", "usd2005_per_year_per_watt"},
                  {"lambda", "watts_per_usd2005"}};
    p["smoothed"] = smoothed;
    ordered_json rows = ordered_json::array();
    const RateSeries& eta = smoothed ? diag.eta_smoothed : diag.eta;
    const RateSeries& innov =
        smoothed ? diag.innovation_smoothed : diag.innovation;
    const RateSeries& growth =
        smoothed ? diag.gwp_growth_smoothed : diag.gwp_growth;
    for (int y = window_a; y <= window_b; ++y) {
        ordered_json r;
        r["year"] = y;
        const auto put = [&](const char* key, const AnnualSeries& s) {
            if (s.contains(y)) r[key] = s.at(y);
            else r[key] = nullptr;
        };
        put("eta", eta);
        put("innovation", innov);
        put("gwp_growth", growth);
        put("eta_from_energy", diag.eta_from_energy);
        put("efficiency", diag.efficiency);
        put("lambda", lambda.per_year_lambda);
        rows.push_back(r);
    }
    p["rows"] = rows;
    ordered_json lam;
    lam["mean"] = lambda.mean_lambda;
    lam["relative_sd"] = lambda.relative_sd;
    lam["ci95_halfwidth"] = lambda.ci95_halfwidth;
    lam["n_years"] = lambda.n_years;
    lam["unit"] = "watts_per_usd2005";
    p["lambda_summary"] = lam;
    p["max_identity_residual"] = diag.max_identity_residual;
    return p;
}

std::string diagnostics_csv(const GrowthDiagnostics& diag,
                            const LambdaEstimate& lambda, int window_a,
                            int window_b, bool smoothed) {
    std::string out =
        "year,eta,innovation,gwp_growth,eta_from_energy,efficiency,lambda\n";
    const RateSeries& eta = smoothed ? diag.eta_smoothed : diag.eta;
    const RateSeries& innov =
        smoothed ? diag.innovation_smoothed : diag.innovation;
    const RateSeries& growth =
        smoothed ? diag.gwp_growth_smoothed : diag.gwp_growth;
    for (int y = window_a; y <= window_b; ++y) {
        out += std::to_string(y);
        const auto put = [&](const AnnualSeries& s) {
            out += ',';
            if (s.contains(y)) out += num17(s.at(y));
        };
        put(eta);
        put(innov);
        put(growth);
        put(diag.eta_from_energy);
        put(diag.efficiency);
        put(lambda.per_year_lambda);
        out += '\n';
    }
    return out;
}

namespace {

ordered_json quantity_json(const QuantityScore& q) {
    ordered_json j;
    j["persistence"] = q.persistence;
    j["hindcast"] = q.hindcast;
    j["observed"] = q.observed;
    if (q.observed_energy) j["observed_energy"] = *q.observed_energy;
    else j["observed_energy"] = nullptr;
    j["skill"] = q.skill;
    j["skill_clamped"] = q.skill_clamped;
    j["unit"] = "fraction_per_year";
    return j;
}

} // namespace

ordered_json hindcast_payload(const HindcastReport& rep) {
    ordered_json p;
    p["eta0"] = rep.eta0;
    p["eta_tech"] = rep.eta_tech;
    p["growth_number"] = rep.growth_number;
    p["rate_unit"] = "fraction_per_year";
    p["eta"] = quantity_json(rep.eta);
    p["innovation"] = quantity_json(rep.innovation);
    p["gwp_growth"] = quantity_json(rep.gwp_growth);
    ordered_json tr;
    tr["years"] = rep.trajectory.years;
    tr["eta"] = rep.trajectory.eta;
    tr["innovation"] = rep.trajectory.innovation;
    tr["gwp_growth"] = rep.trajectory.gwp_growth;
    p["trajectory"] = tr;
    return p;
}

std::string hindcast_csv(const HindcastReport& rep) {
    std::string out =
        "quantity,persistence,hindcast,observed,observed_energy,skill,"
        "skill_clamped\n";
    const auto row = [&](const char* name, const QuantityScore& q) {
        out += name;
        out += ',' + num17(q.persistence);
        out += ',' + num17(q.hindcast);
        out += ',' + num17(q.observed);
        out += ',';
        if (q.observed_energy) out += num17(*q.observed_energy);
        out += ',' + num17(q.skill);
        out += ',' + num17(q.skill_clamped);
        out += '\n';
    };
    row("eta", rep.eta);
    row("innovation", rep.innovation);
    row("gwp_growth", rep.gwp_growth);
    return out;
}

ordered_json techchange_payload(const std::vector<TechChangeComponents>& rows,
                                const std::vector<double>& implied,
                                const std::vector<double>& residual) {
    ordered_json p;
    p["rate_unit"] = "fraction_per_year";
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        ordered_json j;
        j["period"] = std::to_string(r.period.start) + ":" +
                      std::to_string(r.period.end);
        j["eta_delta"] = r.eta_delta;
        j["eta_reserves"] = r.eta_reserves;
        j["eta_extraction"] = r.eta_extraction;
        j["eta_tech_physical"] = r.eta_tech_total;
        j["eta_tech_implied"] = implied[i];
        j["residual_implied_minus_physical"] = residual[i];
        ordered_json pf = ordered_json::object();
        for (const auto& [k, v] : r.per_fuel) pf[k] = v;
        j["per_fuel"] = pf;
        ordered_json pm = ordered_json::object();
        for (const auto& [k, v] : r.per_material) pm[k] = v;
        j["per_material"] = pm;
        arr.push_back(j);
    }
    p["periods"] = arr;
    return p;
}

std::string techchange_csv(const std::vector<TechChangeComponents>& rows,
                           const std::vector<double>& implied,
                           const std::vector<double>& residual) {
    std::string out =
        "period,eta_delta,eta_reserves,eta_extraction,eta_tech_physical,"
        "eta_tech_implied,residual_implied_minus_physical\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += csv_field(std::to_string(r.period.start) + ":" +
                         std::to_string(r.period.end));
        out += ',' + num17(r.eta_delta);
        out += ',' + num17(r.eta_reserves);
        out += ',' + num17(r.eta_extraction);
        out += ',' + num17(r.eta_tech_total);
        out += ',' + num17(implied[i]);
        out += ',' + num17(residual[i]);
        out += '\n';
    }
    return out;
}

ordered_json fit_payload(const FitResult& fit, int window_a, int window_b) {
    ordered_json p;
    p["window"] = std::to_string(window_a) + ":" + std::to_string(window_b);
    p["slope"] = fit.slope;
    p["slope_unit"] = "dimensionless";
    p["slope_ci95"] = fit.slope_ci95;
    p["intercept"] = fit.intercept;
    p["intercept_unit"] = "fraction_per_year";
    p["intercept_ci95"] = fit.intercept_ci95;
    p["n"] = fit.n;
    p["r_squared"] = fit.r_squared;
    return p;
}

std::string fit_csv(const FitResult& fit, int window_a, int window_b) {
    std::string out =
        "window,slope,slope_ci95,intercept,intercept_ci95,n,r_squared\n";
    out += csv_field(std::to_string(window_a) + ":" +
                     std::to_string(window_b));
    out += ',' + num17(fit.slope);
    out += ',' + num17(fit.slope_ci95);
    out += ',' + num17(fit.intercept);
    out += ',' + num17(fit.intercept_ci95);
    out += ',' + std::to_string(fit.n);
    out += ',' + num17(fit.r_squared);
    out += '\n';
    return out;
}

} // namespace thermo
