// thermo-hindcast: command-line front end for the growth-diagnostics /
// hindcast pipeline. Subcommands: validate, diagnostics, hindcast,
// techchange, fit. All machine output (CSV/JSON) is deterministic;
// --reproducible additionally strips the timestamp comment from SVG plots.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "thermo/report.hpp"
#include "thermo/svg.hpp"

namespace {

using namespace thermo;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Unit: return 3;
    case ErrorKind::Gap: return 4;
    case ErrorKind::Coverage: return 5;
    default: return 1;
    }
}

struct YearRange {
    int a = 0;
    int b = 0;
};

YearRange parse_range(const std::string& s) {
    const size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::Parse,
                    "expected YEAR:YEAR range, got '" + s + "'");
    YearRange r;
    try {
        r.a = std::stoi(s.substr(0, colon));
        r.b = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad year range '" + s + "'");
    }
    if (r.a >= r.b)
        throw Error(ErrorKind::Parse, "range '" + s + "' needs start < end");
    return r;
}

// Buffer all file writes until the command has fully succeeded so failures
// never leave partial output behind.
struct OutputBuffer {
    std::vector<std::pair<std::string, std::string>> files; // path -> bytes
    std::string stdout_text;

    void flush() {
        for (const auto& [path, bytes] : files) {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw Error(ErrorKind::Parse, "cannot write " + path);
            out << bytes;
        }
        std::fwrite(stdout_text.data(), 1, stdout_text.size(), stdout);
    }
};

std::string pct(double rate_per_year) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f %%/yr", rate_per_year * 100.0);
    return buf;
}

std::vector<double> slice_years(const AnnualSeries& s, int a, int b) {
    std::vector<double> xs;
    for (int y = a; y <= b; ++y)
        if (s.contains(y)) xs.push_back(y);
    return xs;
}

std::vector<double> slice_values(const AnnualSeries& s, int a, int b) {
    std::vector<double> vs;
    for (int y = a; y <= b; ++y)
        if (s.contains(y)) vs.push_back(s.at(y));
    return vs;
}

struct CommonOpts {
    std::string manifest;
    std::string format = "json";
    std::string output; // empty -> stdout
    std::string plot;   // optional SVG path
    bool reproducible = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_plot = true) {
    cmd->add_option("--manifest", o.manifest, "dataset manifest path")
        ->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output", o.output, "write payload to file");
    if (with_plot) cmd->add_option("--plot", o.plot, "write an SVG chart");
    cmd->add_flag("--reproducible", o.reproducible,
                  "byte-identical output (no timestamps)");
}

void emit(OutputBuffer& out, const CommonOpts& o, const std::string& bytes) {
    if (o.output.empty()) out.stdout_text += bytes;
    else out.files.emplace_back(o.output, bytes);
}

// ---------------------------------------------------------------- validate

int cmd_validate(const CommonOpts& o) {
    OutputBuffer out;
    const EconomicDataset ds = load_dataset(o.manifest);
    out.stdout_text += "dataset OK\n";
    out.stdout_text += "  gwp: " + std::to_string(ds.gwp.start_year) + ".." +
                       std::to_string(ds.gwp.end_year()) + " (" +
                       unit_tag(ds.gwp.unit) + ")\n";
    out.stdout_text += "  energy: " + std::to_string(ds.energy.start_year) +
                       ".." + std::to_string(ds.energy.end_year()) + " (" +
                       unit_tag(ds.energy.unit) + ")\n";
    // plausibility: global primary power sits around 1e13 W; flag series
    // that look like mislabeled units
    double emax = 0.0;
    for (double v : ds.energy.values) emax = std::max(emax, v);
    if (emax < 1e12 || emax > 1e14)
        out.stdout_text += "  warning: energy magnitude " + num17(emax) +
                           " W outside the plausible global range "
                           "1e12..1e14 W — check units\n";
    for (const auto& [k, v] : ds.provenance)
        out.stdout_text += "  " + k + ": " + v + "\n";
    out.flush();
    return 0;
}

// ------------------------------------------------------------- diagnostics

int cmd_diagnostics(const CommonOpts& o, const std::string& window,
                    int smooth) {
    OutputBuffer out;
    const EconomicDataset ds = load_dataset(o.manifest);
    const GrowthDiagnostics diag = gwp_growth_decomposition(
        ds.gwp, ds.initial_wealth, &ds.energy, smooth >= 2 ? smooth : 10);

    int wa = std::max(ds.gwp.start_year, ds.energy.start_year);
    int wb = std::min(ds.gwp.end_year(), ds.energy.end_year());
    if (!window.empty()) {
        const YearRange r = parse_range(window);
        wa = r.a;
        wb = r.b;
    }
    const AnnualSeries wealth = diag.wealth;
    const int la = std::max(wa, ds.energy.start_year);
    const int lb = std::min(wb, ds.energy.end_year());
    const LambdaEstimate lambda = estimate_lambda(ds.energy, wealth, la, lb);
    const bool smoothed = smooth >= 2;

    if (o.format == "csv") {
        emit(out, o, diagnostics_csv(diag, lambda, wa, wb, smoothed));
    } else if (o.format == "json") {
        ordered_json config;
        config["manifest"] = o.manifest;
        config["window"] = std::to_string(wa) + ":" + std::to_string(wb);
        config["smooth"] = smooth;
        const ordered_json env = make_envelope(
            "diagnostics", config,
            diagnostics_payload(diag, lambda, wa, wb, smoothed), ds);
        emit(out, o, env.dump(2) + "\n");
    } else {
        std::string t = "growth diagnostics " + std::to_string(wa) + ".." +
                        std::to_string(wb) + "\n";
        t += "  mean eta:        " + pct(mean_over(diag.eta, wa, wb)) + "\n";
        t += "  mean innovation: " +
             pct(mean_over(diag.innovation,
                           std::max(wa, diag.innovation.start_year),
                           std::min(wb, diag.innovation.end_year()))) +
             "\n";
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "  lambda: %.3f mW/USD (rel SD %.2f%%, n=%d)\n",
                      lambda.mean_lambda * 1e3, lambda.relative_sd * 100.0,
                      lambda.n_years);
        t += buf;
        emit(out, o, t);
    }

    if (!o.plot.empty()) {
        SvgChart chart("Growth diagnostics (decadal means)", "year",
                       "rate (1/yr)");
        const RateSeries se = running_decadal_mean(diag.eta);
        const RateSeries si = running_decadal_mean(diag.innovation);
        const RateSeries sg = running_decadal_mean(diag.gwp_growth);
        chart.add_line("rate of return", "#1f77b4", slice_years(se, wa, wb),
                       slice_values(se, wa, wb));
        chart.add_line("innovation rate", "#2ca02c", slice_years(si, wa, wb),
                       slice_values(si, wa, wb));
        chart.add_line("GWP growth", "#d62728", slice_years(sg, wa, wb),
                       slice_values(sg, wa, wb));
        out.files.emplace_back(o.plot, chart.render(!o.reproducible));
    }
    out.flush();
    return 0;
}

// ---------------------------------------------------------------- hindcast

int cmd_hindcast(const CommonOpts& o, const std::string& train,
                 int init_year, const std::string& eval,
                 const std::string& eta_tech) {
    OutputBuffer out;
    const EconomicDataset ds = load_dataset(o.manifest);

    HindcastConfig cfg;
    if (!train.empty()) {
        const YearRange r = parse_range(train);
        cfg.train_start = r.a;
        cfg.train_end = r.b;
    }
    if (init_year > 0) cfg.init_year = init_year;
    if (!eval.empty()) {
        const YearRange r = parse_range(eval);
        cfg.eval_start = r.a;
        cfg.eval_end = r.b;
    }
    if (eta_tech == "implied") {
        cfg.eta_tech_source = EtaTechSource::ImpliedFromTraining;
    } else if (eta_tech == "physical") {
        cfg.eta_tech_source = EtaTechSource::Physical;
    } else if (!eta_tech.empty()) {
        cfg.eta_tech_source = EtaTechSource::Explicit;
        try {
            cfg.explicit_eta_tech = std::stod(eta_tech);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse,
                        "--eta-tech must be implied, physical, or a number");
        }
    }

    const HindcastReport rep = run_hindcast(ds, cfg);

    if (o.format == "csv") {
        emit(out, o, hindcast_csv(rep));
    } else if (o.format == "json") {
        ordered_json config;
        config["manifest"] = o.manifest;
        config["train"] = std::to_string(cfg.train_start) + ":" +
                          std::to_string(cfg.train_end);
        config["init"] = cfg.init_year;
        config["eval"] = std::to_string(cfg.eval_start) + ":" +
                         std::to_string(cfg.eval_end);
        config["eta_tech"] = eta_tech.empty() ? "implied" : eta_tech;
        const ordered_json env =
            make_envelope("hindcast", config, hindcast_payload(rep), ds);
        emit(out, o, env.dump(2) + "\n");
    } else {
        char buf[160];
        std::string t = "hindcast " + std::to_string(cfg.eval_start) + ".." +
                        std::to_string(cfg.eval_end) + " (init " +
                        std::to_string(cfg.init_year) + ")\n";
        std::snprintf(buf, sizeof buf,
                      "  eta0 %.2f %%/yr, eta_tech %.2f %%/yr, G %.2f\n",
                      rep.eta0 * 100, rep.eta_tech * 100, rep.growth_number);
        t += buf;
        const auto row = [&](const char* n, const QuantityScore& q) {
            std::snprintf(buf, sizeof buf,
                          "  %-12s persistence %6s  hindcast %6s  observed "
                          "%6s  skill %3.0f\n",
                          n, pct(q.persistence).c_str(),
                          pct(q.hindcast).c_str(), pct(q.observed).c_str(),
                          q.skill_clamped * 100);
            t += buf;
        };
        row("eta", rep.eta);
        row("innovation", rep.innovation);
        row("gwp_growth", rep.gwp_growth);
        emit(out, o, t);
    }

    if (!o.plot.empty()) {
        SvgChart chart("Logistic hindcast vs observed rate of return", "year",
                       "rate (1/yr)");
        chart.add_line("hindcast eta", "#d62728", rep.trajectory.years,
                       rep.trajectory.eta);
        const GrowthDiagnostics diag = gwp_growth_decomposition(
            ds.gwp, ds.initial_wealth, &ds.energy);
        const RateSeries se = running_decadal_mean(diag.eta);
        chart.add_line("observed eta (decadal mean)", "#1f77b4",
                       slice_years(se, cfg.init_year, cfg.eval_end),
                       slice_values(se, cfg.init_year, cfg.eval_end));
        out.files.emplace_back(o.plot, chart.render(!o.reproducible));
    }
    out.flush();
    return 0;
}

// --------------------------------------------------------------- techchange

int cmd_techchange(const CommonOpts& o, const std::string& periods_arg,
                   bool endpoint_weights) {
    OutputBuffer out;
    const EconomicDataset ds = load_dataset(o.manifest);
    const GrowthDiagnostics diag =
        gwp_growth_decomposition(ds.gwp, ds.initial_wealth, &ds.energy);

    std::vector<Period> periods;
    std::stringstream ss(periods_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const YearRange r = parse_range(item);
        periods.push_back({r.a, r.b});
    }
    if (periods.empty())
        throw Error(ErrorKind::Parse, "--periods must list at least one range");

    const ReserveWeighting w = endpoint_weights
                                   ? ReserveWeighting::EndpointProduction
                                   : ReserveWeighting::PeriodMeanProduction;
    std::vector<TechChangeComponents> rows;
    std::vector<double> implied, residual;
    for (const Period& p : periods) {
        rows.push_back(eta_tech_physical(ds, p, w));
        implied.push_back(eta_tech_implied(diag, p));
        residual.push_back(implied.back() - rows.back().eta_tech_total);
    }

    if (o.format == "csv") {
        emit(out, o, techchange_csv(rows, implied, residual));
    } else if (o.format == "json") {
        ordered_json config;
        config["manifest"] = o.manifest;
        config["periods"] = periods_arg;
        config["weighting"] =
            endpoint_weights ? "endpoint" : "period_mean";
        const ordered_json env =
            make_envelope("techchange", config,
                          techchange_payload(rows, implied, residual), ds);
        emit(out, o, env.dump(2) + "\n");
    } else {
        std::string t = "technological change components\n";
        char buf[200];
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            std::snprintf(buf, sizeof buf,
                          "  %d-%d: longevity %6s  reserves %6s  materials "
                          "%6s  total %6s | implied %6s (residual %+.2f pp)\n",
                          r.period.start, r.period.end,
                          pct(r.eta_delta).c_str(), pct(r.eta_reserves).c_str(),
                          pct(r.eta_extraction).c_str(),
                          pct(r.eta_tech_total).c_str(),
                          pct(implied[i]).c_str(), residual[i] * 100);
            t += buf;
        }
        emit(out, o, t);
    }
    out.flush();
    return 0;
}

// --------------------------------------------------------------------- fit

int cmd_fit(const CommonOpts& o, const std::string& window, bool raw) {
    OutputBuffer out;
    const EconomicDataset ds = load_dataset(o.manifest);
    const GrowthDiagnostics diag =
        gwp_growth_decomposition(ds.gwp, ds.initial_wealth, &ds.energy);
    YearRange r{1950, 2010};
    if (!window.empty()) r = parse_range(window);
    const FitResult fit = fit_innovation_vs_return(diag, r.a, r.b, !raw);

    if (o.format == "csv") {
        emit(out, o, fit_csv(fit, r.a, r.b));
    } else if (o.format == "json") {
        ordered_json config;
        config["manifest"] = o.manifest;
        config["window"] = std::to_string(r.a) + ":" + std::to_string(r.b);
        config["smoothed"] = !raw;
        const ordered_json env =
            make_envelope("fit", config, fit_payload(fit, r.a, r.b), ds);
        emit(out, o, env.dump(2) + "\n");
    } else {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "innovation = (%.2f +/- %.2f) * eta + (%.4f +/- %.4f) "
                      "/yr   [n=%d, R^2=%.3f]\n",
                      fit.slope, fit.slope_ci95, fit.intercept,
                      fit.intercept_ci95, fit.n, fit.r_squared);
        emit(out, o, buf);
    }

    if (!o.plot.empty()) {
        const RateSeries& ex = raw ? diag.eta : diag.eta_smoothed;
        const RateSeries& iy =
            raw ? diag.innovation : diag.innovation_smoothed;
        std::vector<double> xs, ys;
        for (int y = r.a; y <= r.b; ++y)
            if (ex.contains(y) && iy.contains(y)) {
                xs.push_back(ex.at(y));
                ys.push_back(iy.at(y));
            }
        SvgChart chart("Innovation rate vs rate of return",
                       "rate of return (1/yr)", "innovation rate (1/yr)");
        chart.add_points("annual (decadal-mean) pairs", "#1f77b4", xs, ys);
        if (!xs.empty()) {
            const double x0 = *std::min_element(xs.begin(), xs.end());
            const double x1 = *std::max_element(xs.begin(), xs.end());
            chart.add_line("least-squares fit", "#d62728", {x0, x1},
                           {fit.intercept + fit.slope * x0,
                            fit.intercept + fit.slope * x1});
        }
        out.files.emplace_back(o.plot, chart.render(!o.reproducible));
    }
    out.flush();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermodynamic growth-model diagnostics and hindcasts"};
    app.require_subcommand(1);

    CommonOpts vo, dopt, ho, to, fo;
    std::string d_window, h_train, h_eval, t_periods = "1950:2010";
    std::string h_eta_tech = "implied", f_window;
    int d_smooth = 0, h_init = 0;
    bool t_endpoint = false, f_raw = false;

    CLI::App* v = app.add_subcommand("validate", "check a dataset manifest");
    add_common(v, vo, false);

    CLI::App* d =
        app.add_subcommand("diagnostics", "per-year growth diagnostics");
    add_common(d, dopt);
    d->add_option("--window", d_window, "year range a:b");
    d->add_option("--smooth", d_smooth, "decadal-mean window (years)");

    CLI::App* h = app.add_subcommand("hindcast", "logistic decade hindcast");
    add_common(h, ho);
    h->add_option("--train", h_train, "training window a:b (1950:1960)");
    h->add_option("--init", h_init, "initialization year (1960)");
    h->add_option("--eval", h_eval, "evaluation window a:b (2000:2010)");
    h->add_option("--eta-tech", h_eta_tech,
                  "implied | physical | explicit value (1/yr)");

    CLI::App* t =
        app.add_subcommand("techchange", "technological-change components");
    add_common(t, to, false);
    t->add_option("--periods", t_periods, "comma-separated a:b ranges");
    t->add_flag("--endpoint-weights", t_endpoint,
                "weight fuels by endpoint production instead of period mean");

    CLI::App* f =
        app.add_subcommand("fit", "innovation-vs-return regression");
    add_common(f, fo);
    f->add_option("--window", f_window, "year range a:b (1950:2010)");
    f->add_flag("--raw", f_raw, "fit unsmoothed annual pairs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed()) return cmd_validate(vo);
        if (d->parsed()) return cmd_diagnostics(dopt, d_window, d_smooth);
        if (h->parsed())
            return cmd_hindcast(ho, h_train, h_init, h_eval, h_eta_tech);
        if (t->parsed()) return cmd_techchange(to, t_periods, t_endpoint);
        if (f->parsed()) return cmd_fit(fo, f_window, f_raw);
    } catch (const thermo::Error& e) {
        std::cerr << "error (" << thermo::error_kind_name(e.kind())
                  << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
