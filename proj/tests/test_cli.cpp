#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <doctest.h>
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kBin = THERMO_CLI_BIN;
const char* kManifest = THERMO_FIXTURE_MANIFEST;
const char* kFixtureDir = THERMO_FIXTURE_DIR;

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("thermo_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Run the CLI with the given argument string; optional env prefix like
// "VAR=value ".
RunResult run(const std::string& args, const std::string& env = "") {
    static int seq = 0;
    const fs::path o = work_dir() / ("out" + std::to_string(seq));
    const fs::path e = work_dir() / ("err" + std::to_string(seq));
    ++seq;
    const std::string cmd = env + std::string(kBin) + " " + args + " >" +
                            o.string() + " 2>" + e.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(o);
    r.err = slurp(e);
    return r;
}

// A manifest equal to the bundled one except that one series is replaced by
// a local CSV file.
fs::path manifest_with(const std::string& key, const std::string& csv_text,
                       const std::string& tag) {
    static int seq = 0;
    const fs::path csv =
        work_dir() / ("override" + std::to_string(seq) + ".csv");
    const fs::path man =
        work_dir() / ("manifest" + std::to_string(seq) + ".manifest");
    ++seq;
    spit(csv, csv_text);
    std::ifstream in(kManifest);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + " =", 0) == 0)
            out << key << " = " << csv.string() << "\n";
        else if (line.rfind(key + ".unit =", 0) == 0)
            out << key << ".unit = " << tag << "\n";
        else
            out << line << "\n";
    }
    spit(man, out.str());
    return man;
}

std::string fixture_arg() {
    return std::string("--manifest ") + kManifest;
}

} // namespace

TEST_CASE("cli validate: bundled fixture passes") {
    const RunResult r = run("validate " + fixture_arg());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dataset OK") != std::string::npos);
    CHECK(r.out.find("warning") == std::string::npos);
}

TEST_CASE("cli validate: error classes map to distinct exit codes") {
    // multi-year gap -> 4, names the missing years
    const fs::path gapped = manifest_with(
        "inflation", "year,value\n1950,0.07\n1954,0.08\n",
        "fraction_per_year");
    const RunResult g = run("validate --manifest " + gapped.string());
    CHECK(g.exit_code == 4);
    CHECK(g.err.find("1951") != std::string::npos);
    CHECK(g.err.find("1953") != std::string::npos);

    // unit column contradicting the declared unit -> 3
    const fs::path miss = manifest_with(
        "inflation", "year,value,unit\n1950,0.07,watts\n1951,0.07,watts\n",
        "fraction_per_year");
    CHECK(run("validate --manifest " + miss.string()).exit_code == 3);

    // malformed row -> 2
    const fs::path bad = manifest_with(
        "inflation", "year,value\n1950,0.07\noops,0.08\n",
        "fraction_per_year");
    const RunResult b = run("validate --manifest " + bad.string());
    CHECK(b.exit_code == 2);
    CHECK(b.err.find("line 3") != std::string::npos);

    // missing required series -> 5
    const fs::path nogwp = work_dir() / "nogwp.manifest";
    spit(nogwp, "energy = fixture:energy\nenergy.unit = ej_per_year\n"
                "initial_wealth = 1e15\n");
    CHECK(run("validate --manifest " + nogwp.string()).exit_code == 5);
}

TEST_CASE("cli validate: implausible energy magnitude warns but passes") {
    // mislabel EJ/yr numbers (~500) as Watts: far below 1e12 W
    std::string csv = "year,value\n";
    for (int y = 1950; y <= 2010; ++y)
        csv += std::to_string(y) + ",400\n";
    const fs::path man = manifest_with("energy", csv, "watts");
    const RunResult r = run("validate --manifest " + man.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("warning") != std::string::npos);
}

TEST_CASE("cli diagnostics: lambda summary and smoothing flag") {
    const RunResult r =
        run("diagnostics " + fixture_arg() + " --window 1970:2010");
    REQUIRE(r.exit_code == 0);
    const json env = json::parse(r.out);
    CHECK(env["command"] == "diagnostics");
    const json& lam = env["result"]["lambda_summary"];
    CHECK(std::fabs(lam["mean"].get<double>() - 0.0071) < 0.0001);
    CHECK(lam["relative_sd"].get<double>() < 0.02);
    CHECK(lam["n_years"] == 41);
    CHECK(env["result"]["rows"].size() == 41);

    // --smooth 1 is the identity window: same result payload (the config
    // echo naturally records the different flag)
    const RunResult s =
        run("diagnostics " + fixture_arg() + " --window 1970:2010 --smooth 1");
    CHECK(json::parse(s.out)["result"] == env["result"]);
}

TEST_CASE("cli hindcast: defaults reproduce the published comparison") {
    const RunResult r = run("hindcast " + fixture_arg());
    REQUIRE(r.exit_code == 0);
    const json env = json::parse(r.out);
    const json& res = env["result"];
    CHECK(std::fabs(res["eta0"].get<double>() - 0.010) < 1e-4);
    CHECK(std::fabs(res["eta_tech"].get<double>() - 0.051) < 0.0005);
    CHECK(std::fabs(res["eta"]["hindcast"].get<double>() - 0.023) < 0.003);
    CHECK(std::fabs(res["innovation"]["hindcast"].get<double>() - 0.004) <
          0.003);
    CHECK(std::fabs(res["gwp_growth"]["hindcast"].get<double>() - 0.028) <
          0.003);
    CHECK(res["innovation"]["skill_clamped"].get<double>() > 0.5);

    // feeding the implied value back explicitly reproduces the forecast
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", res["eta_tech"].get<double>());
    const RunResult e =
        run("hindcast " + fixture_arg() + " --eta-tech " + buf);
    REQUIRE(e.exit_code == 0);
    const json env2 = json::parse(e.out);
    CHECK(env2["result"]["eta"]["hindcast"] == res["eta"]["hindcast"]);
    CHECK(env2["result"]["gwp_growth"]["hindcast"] ==
          res["gwp_growth"]["hindcast"]);
}

TEST_CASE("cli techchange: period list shapes the report") {
    const RunResult one =
        run("techchange " + fixture_arg() + " --periods 1950:1970");
    REQUIRE(one.exit_code == 0);
    CHECK(json::parse(one.out)["result"]["periods"].size() == 1);

    const RunResult four =
        run("techchange " + fixture_arg() +
            " --periods 1950:1970,1970:1990,1990:2010,1950:2010");
    REQUIRE(four.exit_code == 0);
    const json periods = json::parse(four.out)["result"]["periods"];
    REQUIRE(periods.size() == 4);
    CHECK(std::fabs(periods[0]["eta_tech_physical"].get<double>() - 0.070) <
          0.001);
    CHECK(std::fabs(periods[3]["eta_tech_implied"].get<double>() - 0.051) <
          0.002);
    CHECK(std::fabs(
              periods[3]["residual_implied_minus_physical"].get<double>() -
              0.016) < 0.0025);
}

TEST_CASE("cli fit: regression payload and CSV/JSON agreement") {
    const RunResult j = run("fit " + fixture_arg());
    REQUIRE(j.exit_code == 0);
    const json fit = json::parse(j.out)["result"];
    const double slope = fit["slope"].get<double>();
    CHECK(slope > -3.08);
    CHECK(slope < -2.0);
    const double intercept = fit["intercept"].get<double>();
    CHECK(intercept > 0.05);
    CHECK(intercept < 0.07);
    CHECK(fit["n"] == 61);

    const RunResult c = run("fit " + fixture_arg() + " --format csv");
    REQUIRE(c.exit_code == 0);
    // csv row: window,slope,...
    std::istringstream ss(c.out);
    std::string header, row, cell;
    std::getline(ss, header);
    std::getline(ss, row);
    std::istringstream rs(row);
    std::getline(rs, cell, ','); // window
    std::getline(rs, cell, ','); // slope
    CHECK(std::stod(cell) == slope); // %.17g round-trips exactly
}

TEST_CASE("cli determinism: --reproducible outputs are byte-identical") {
    const fs::path svg1 = work_dir() / "plot1.svg";
    const fs::path svg2 = work_dir() / "plot2.svg";
    const fs::path out1 = work_dir() / "diag1.json";
    const fs::path out2 = work_dir() / "diag2.json";
    const std::string base = "diagnostics " + fixture_arg() +
                             " --reproducible --output ";
    REQUIRE(run(base + out1.string() + " --plot " + svg1.string()).exit_code ==
            0);
    REQUIRE(run(base + out2.string() + " --plot " + svg2.string()).exit_code ==
            0);
    CHECK(slurp(out1) == slurp(out2));
    const std::string s1 = slurp(svg1);
    CHECK(s1 == slurp(svg2));
    CHECK(s1.find("<svg") != std::string::npos);
}

TEST_CASE("cli failure leaves no partial output file") {
    const fs::path out = work_dir() / "never_written.json";
    const RunResult r = run("fit " + fixture_arg() + " --window 1950:1951 " +
                            "--output " + out.string());
    CHECK(r.exit_code != 0);
    CHECK(!fs::exists(out));
}

TEST_CASE("cli honors THERMO_HINDCAST_FIXTURES") {
    const fs::path alt = work_dir() / "fixtures_copy";
    fs::create_directories(alt);
    for (const auto& entry : fs::directory_iterator(kFixtureDir))
        fs::copy_file(entry.path(), alt / entry.path().filename(),
                      fs::copy_options::overwrite_existing);
    const RunResult ok =
        run("validate --manifest " + (alt / "fixture.manifest").string(),
            "THERMO_HINDCAST_FIXTURES=" + alt.string() + " ");
    CHECK(ok.exit_code == 0);

    const fs::path empty = work_dir() / "fixtures_empty";
    fs::create_directories(empty);
    const RunResult bad =
        run("validate --manifest " + (alt / "fixture.manifest").string(),
            "THERMO_HINDCAST_FIXTURES=" + empty.string() + " ");
    CHECK(bad.exit_code != 0);
}
