#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "thermo/diagnostics.hpp"
#include "thermo/hindcast.hpp"
#include "thermo/ingest.hpp"
#include "thermo/techchange.hpp"

namespace thermo {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Wrap a command payload with config echo, provenance, and version so every
// emitted document is self-describing. Key order is fixed; output bytes are
// deterministic for identical inputs.
ordered_json make_envelope(const std::string& command,
                           const ordered_json& config,
                           const ordered_json& payload,
                           const EconomicDataset& dataset);

// Columnar per-year diagnostics table. Every column carries a unit tag.
ordered_json diagnostics_payload(const GrowthDiagnostics& diag,
                                 const LambdaEstimate& lambda, int window_a,
                                 int window_b, bool smoothed);
std::string diagnostics_csv(const GrowthDiagnostics& diag,
                            const LambdaEstimate& lambda, int window_a,
                            int window_b, bool smoothed);

ordered_json hindcast_payload(const HindcastReport& rep);
std::string hindcast_csv(const HindcastReport& rep);

ordered_json techchange_payload(
    const std::vector<TechChangeComponents>& rows,
    const std::vector<double>& implied, const std::vector<double>& residual);
std::string techchange_csv(const std::vector<TechChangeComponents>& rows,
                           const std::vector<double>& implied,
                           const std::vector<double>& residual);

ordered_json fit_payload(const FitResult& fit, int window_a, int window_b);
std::string fit_csv(const FitResult& fit, int window_a, int window_b);

// Full-precision decimal text for a double ("%.17g": round-trips exactly).
std::string num17(double v);

} // namespace thermo
