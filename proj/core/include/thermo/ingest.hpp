#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thermo/series.hpp"

namespace thermo {

// Validated bundle of input series in canonical units (energy in Watts,
// GWP in 2005 USD / yr). Reserve/material/inflation series are optional at
// load time; operations that need them raise coverage errors when absent.
struct EconomicDataset {
    AnnualSeries gwp;                  // CurrencyPerYear
    AnnualSeries energy;               // Watts
    double initial_wealth = 0.0;       // Currency, accumulated before gwp start
    std::optional<AnnualSeries> oil_reserves; // Energy
    std::optional<AnnualSeries> gas_reserves; // Energy
    std::optional<AnnualSeries> oil_production;  // EnergyPerYear
    std::optional<AnnualSeries> gas_production;  // EnergyPerYear
    std::optional<AnnualSeries> coal_production; // EnergyPerYear
    std::map<std::string, AnnualSeries> materials; // MassPerYear
    std::optional<AnnualSeries> inflation;         // FractionPerYear
    std::map<std::string, std::string> provenance; // series -> source notes

    bool has_reserve_inputs() const {
        return oil_reserves && gas_reserves && oil_production &&
               gas_production && coal_production;
    }
};

// Flat key-value manifest: `series = path-or-fixture`, optional
// `series.unit = tag`, `materials.<name> = ...` entries, and either
// `initial_wealth = <currency>` or a calibration rule
// `calibration.eta0 = <rate>` + `calibration.year = <year>`.
struct DatasetManifest {
    std::map<std::string, std::string> series_sources; // key -> path/fixture id
    std::map<std::string, Unit> declared_units;
    std::optional<double> initial_wealth;
    std::optional<double> calibration_eta0;
    std::optional<int> calibration_year;
    std::string base_dir; // directory of the manifest file, for relative paths
};

// Location of the bundled fixture CSVs. The THERMO_HINDCAST_FIXTURES
// environment variable overrides the compiled-in default.
std::string fixture_directory();

// Parse `year,value[,unit]` CSV. Rows must be ascending years; single-year
// holes are filled geometrically (recorded in `interpolated_years`); holes of
// two or more years are rejected.
AnnualSeries parse_series_csv(const std::string& text, Unit expected_unit,
                              const std::string& name,
                              std::vector<int>* interpolated_years = nullptr);

// Serialize in the same schema (round-trips to full precision).
std::string series_to_csv(const AnnualSeries& series);

DatasetManifest parse_manifest(const std::string& text,
                               const std::string& base_dir);
DatasetManifest load_manifest(const std::string& path);

// Solve for the initial wealth W with Y(at_year) / (W + trapezoid integral of
// Y through at_year) = target_eta0. Linear in W, so exact.
double calibrate_initial_wealth(const AnnualSeries& gwp, double target_eta0,
                                int at_year);

EconomicDataset load_dataset(const DatasetManifest& manifest);
EconomicDataset load_dataset(const std::string& manifest_path);

} // namespace thermo
