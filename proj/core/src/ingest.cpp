#include "thermo/ingest.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef THERMO_DEFAULT_FIXTURE_DIR
#define THERMO_DEFAULT_FIXTURE_DIR ""
#endif

namespace thermo {
namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

bool parse_int(const std::string& s, int& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    long v = std::strtol(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size()) return false;
    out = static_cast<int>(v);
    return true;
}

bool parse_real(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(out);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Coverage, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

std::string fixture_directory() {
    if (const char* env = std::getenv("THERMO_HINDCAST_FIXTURES"))
        if (*env) return env;
    return THERMO_DEFAULT_FIXTURE_DIR;
}

AnnualSeries parse_series_csv(const std::string& text, Unit expected_unit,
                              const std::string& name,
                              std::vector<int>* interpolated_years) {
    const auto lines = split_lines(text);
    if (lines.empty())
        throw Error(ErrorKind::Parse, name + ": empty CSV input");
    {
        auto header = split_csv_row(lines[0]);
        if (header.size() < 2 || header.size() > 3 ||
            trim(header[0]) != "year" || trim(header[1]) != "value" ||
            (header.size() == 3 && trim(header[2]) != "unit"))
            throw Error(ErrorKind::Parse,
                        name + ": line 1: expected header year,value[,unit]");
    }

    AnnualSeries out;
    out.unit = expected_unit;
    out.name = name;
    bool first = true;
    int prev_year = 0;
    for (size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        const auto f = split_csv_row(lines[li]);
        const std::string where =
            name + ": line " + std::to_string(li + 1) + ": ";
        if (f.size() < 2 || f.size() > 3)
            throw Error(ErrorKind::Parse, where + "expected 2 or 3 fields");
        int year;
        double value;
        if (!parse_int(f[0], year))
            throw Error(ErrorKind::Parse, where + "bad year '" + f[0] + "'");
        if (!parse_real(f[1], value))
            throw Error(ErrorKind::Parse, where + "bad value '" + f[1] + "'");
        if (f.size() == 3) {
            Unit u;
            if (!unit_from_tag(trim(f[2]), u))
                throw Error(ErrorKind::Unit,
                            where + "unknown unit tag '" + trim(f[2]) + "'");
            if (u != expected_unit)
                throw Error(ErrorKind::Unit,
                            where + "unit '" + trim(f[2]) + "' does not match "
                                                            "expected '" +
                                unit_tag(expected_unit) + "'");
        }
        if (first) {
            out.start_year = year;
            out.values.push_back(value);
            first = false;
        } else {
            if (year <= prev_year)
                throw Error(ErrorKind::Parse,
                            where + "years must be strictly ascending");
            const int hole = year - prev_year - 1;
            if (hole >= 2) {
                throw Error(ErrorKind::Gap,
                            name + ": missing years " +
                                std::to_string(prev_year + 1) + "-" +
                                std::to_string(year - 1) +
                                " (gaps of 2+ years are rejected)");
            }
            if (hole == 1) {
                const double a = out.values.back();
                if (!(a > 0.0) || !(value > 0.0))
                    throw Error(ErrorKind::Domain,
                                where + "geometric gap-fill needs positive "
                                        "neighbors");
                out.values.push_back(std::sqrt(a * value));
                if (interpolated_years)
                    interpolated_years->push_back(prev_year + 1);
            }
            out.values.push_back(value);
        }
        prev_year = year;
    }
    if (out.values.empty())
        throw Error(ErrorKind::Parse, name + ": no data rows");
    return out;
}

std::string series_to_csv(const AnnualSeries& series) {
    std::string out = "year,value,unit\n";
    char buf[64];
    for (int i = 0; i < series.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", series.values[i]);
        out += std::to_string(series.start_year + i);
        out += ',';
        out += buf;
        out += ',';
        out += unit_tag(series.unit);
        out += '\n';
    }
    return out;
}

DatasetManifest parse_manifest(const std::string& text,
                               const std::string& base_dir) {
    DatasetManifest m;
    m.base_dir = base_dir;
    const auto lines = split_lines(text);
    for (size_t li = 0; li < lines.size(); ++li) {
        std::string line = lines[li];
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::Parse,
                        "manifest line " + std::to_string(li + 1) +
                            ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error(ErrorKind::Parse,
                        "manifest line " + std::to_string(li + 1) +
                            ": empty key or value");
        if (key == "initial_wealth") {
            double v;
            if (!parse_real(value, v))
                throw Error(ErrorKind::Parse,
                            "manifest: bad initial_wealth '" + value + "'");
            m.initial_wealth = v;
        } else if (key == "calibration.eta0") {
            double v;
            if (!parse_real(value, v))
                throw Error(ErrorKind::Parse,
                            "manifest: bad calibration.eta0 '" + value + "'");
            m.calibration_eta0 = v;
        } else if (key == "calibration.year") {
            int v;
            if (!parse_int(value, v))
                throw Error(ErrorKind::Parse,
                            "manifest: bad calibration.year '" + value + "'");
            m.calibration_year = v;
        } else if (key.size() > 5 &&
                   key.compare(key.size() - 5, 5, ".unit") == 0) {
            Unit u;
            if (!unit_from_tag(value, u))
                throw Error(ErrorKind::Unit,
                            "manifest: unknown unit tag '" + value + "'");
            m.declared_units[key.substr(0, key.size() - 5)] = u;
        } else {
            m.series_sources[key] = value;
        }
    }
    return m;
}

DatasetManifest load_manifest(const std::string& path) {
    std::string dir = ".";
    const size_t slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    return parse_manifest(read_file(path), dir);
}

double calibrate_initial_wealth(const AnnualSeries& gwp, double target_eta0,
                                int at_year) {
    if (!(target_eta0 > 0.0))
        throw Error(ErrorKind::Parameter, "target_eta0 must be positive");
    const double y = gwp.at(at_year); // also validates the year
    const AnnualSeries acc = integrate_cumulative(gwp, 0.0);
    const double integral = acc.at(at_year);
    const double w = y / target_eta0 - integral;
    if (!(w > 0.0))
        throw Error(ErrorKind::Calibration,
                    "eta0 target implies non-positive initial wealth (" +
                        std::to_string(w) + ")");
    return w;
}

namespace {

struct SeriesSpec {
    const char* key;
    Unit canonical;
    bool allow_watts; // energy may arrive as EJ/yr or Watts
};

std::string resolve_source(const DatasetManifest& m, const std::string& src) {
    if (src.rfind("fixture:", 0) == 0) {
        const std::string dir = fixture_directory();
        if (dir.empty())
            throw Error(ErrorKind::Coverage,
                        "fixture reference '" + src +
                            "' but no fixture directory configured (set "
                            "THERMO_HINDCAST_FIXTURES)");
        return dir + "/" + src.substr(8) + ".csv";
    }
    if (!src.empty() && src[0] == '/') return src;
    return m.base_dir + "/" + src;
}

AnnualSeries load_series(const DatasetManifest& m, const std::string& key,
                         Unit expected,
                         std::map<std::string, std::string>& provenance) {
    const auto it = m.series_sources.find(key);
    if (it == m.series_sources.end())
        throw Error(ErrorKind::Coverage, "manifest missing series '" + key + "'");
    const std::string path = resolve_source(m, it->second);
    std::vector<int> filled;
    AnnualSeries s =
        parse_series_csv(read_file(path), expected, key, &filled);
    std::string note = it->second;
    if (it->second.rfind("fixture:", 0) == 0)
        note += " (bundled synthetic-calibrated fixture)";
    if (!filled.empty()) {
        note += "; geometric interpolation at";
        for (int y : filled) note += " " + std::to_string(y);
    }
    provenance[key] = note;
    return s;
}

Unit declared_or(const DatasetManifest& m, const std::string& key, Unit dflt) {
    const auto it = m.declared_units.find(key);
    return it == m.declared_units.end() ? dflt : it->second;
}

} // namespace

EconomicDataset load_dataset(const DatasetManifest& manifest) {
    EconomicDataset ds;

    ds.gwp = load_series(manifest, "gwp",
                         declared_or(manifest, "gwp", Unit::CurrencyPerYear),
                         ds.provenance);
    if (ds.gwp.unit != Unit::CurrencyPerYear)
        throw Error(ErrorKind::Unit, "gwp must be in usd2005_per_year");
    if (!ds.gwp.strictly_positive())
        throw Error(ErrorKind::Domain, "gwp must be strictly positive");

    const Unit energy_unit =
        declared_or(manifest, "energy", Unit::EnergyPerYear);
    if (energy_unit != Unit::EnergyPerYear && energy_unit != Unit::Watts)
        throw Error(ErrorKind::Unit, "energy must be ej_per_year or watts");
    ds.energy = load_series(manifest, "energy", energy_unit, ds.provenance);
    if (ds.energy.unit == Unit::EnergyPerYear) {
        for (double& v : ds.energy.values) v *= kWattsPerEJPerYear;
        ds.energy.unit = Unit::Watts;
    }
    if (!ds.energy.strictly_positive())
        throw Error(ErrorKind::Domain, "energy must be strictly positive");

    // gwp/energy overlap of at least a decade
    const int lo = std::max(ds.gwp.start_year, ds.energy.start_year);
    const int hi = std::min(ds.gwp.end_year(), ds.energy.end_year());
    if (hi - lo + 1 < 10)
        throw Error(ErrorKind::Coverage,
                    "gwp and energy must overlap for at least 10 years");

    if (manifest.initial_wealth) {
        ds.initial_wealth = *manifest.initial_wealth;
    } else if (manifest.calibration_eta0 && manifest.calibration_year) {
        ds.initial_wealth = calibrate_initial_wealth(
            ds.gwp, *manifest.calibration_eta0, *manifest.calibration_year);
    } else {
        throw Error(ErrorKind::Coverage,
                    "manifest needs initial_wealth or a calibration block "
                    "(calibration.eta0 + calibration.year)");
    }
    if (!(ds.initial_wealth > 0.0))
        throw Error(ErrorKind::Calibration, "initial_wealth must be positive");

    const auto maybe = [&](const char* key, Unit u,
                           std::optional<AnnualSeries>& slot) {
        if (manifest.series_sources.count(key)) {
            slot = load_series(manifest, key, declared_or(manifest, key, u),
                               ds.provenance);
            if (!slot->strictly_positive())
                throw Error(ErrorKind::Domain,
                            std::string(key) + " must be strictly positive");
        }
    };
    maybe("oil_reserves", Unit::Energy, ds.oil_reserves);
    maybe("gas_reserves", Unit::Energy, ds.gas_reserves);
    maybe("oil_production", Unit::EnergyPerYear, ds.oil_production);
    maybe("gas_production", Unit::EnergyPerYear, ds.gas_production);
    maybe("coal_production", Unit::EnergyPerYear, ds.coal_production);

    for (const auto& [key, src] : manifest.series_sources) {
        if (key.rfind("materials.", 0) != 0) continue;
        const std::string mat = key.substr(10);
        AnnualSeries s =
            load_series(manifest, key, declared_or(manifest, key, Unit::MassPerYear),
                        ds.provenance);
        s.name = mat;
        if (!s.strictly_positive())
            throw Error(ErrorKind::Domain, key + " must be strictly positive");
        ds.materials[mat] = std::move(s);
    }

    if (manifest.series_sources.count("inflation")) {
        ds.inflation = load_series(manifest, "inflation",
                                   declared_or(manifest, "inflation",
                                               Unit::FractionPerYear),
                                   ds.provenance);
    }

    // reject unknown top-level keys so typos do not silently drop series
    for (const auto& [key, src] : manifest.series_sources) {
        static const char* known[] = {
            "gwp", "energy", "oil_reserves", "gas_reserves", "oil_production",
            "gas_production", "coal_production", "inflation"};
        bool ok = key.rfind("materials.", 0) == 0;
        for (const char* k : known) ok = ok || key == k;
        if (!ok)
            throw Error(ErrorKind::Parse, "manifest: unknown series key '" +
                                              key + "'");
    }

    return ds;
}

EconomicDataset load_dataset(const std::string& manifest_path) {
    return load_dataset(load_manifest(manifest_path));
}

} // namespace thermo
