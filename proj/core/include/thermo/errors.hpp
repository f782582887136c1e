#pragma once

#include <stdexcept>
#include <string>

namespace thermo {

// Error classes map 1:1 onto the CLI exit codes (see tools/). Everything the
// library throws derives from Error so callers can catch one type and switch
// on kind().
enum class ErrorKind {
    Parse,         // malformed CSV/manifest input
    Unit,          // unit tag mismatch or non-convertible unit
    Gap,           // multi-year hole in an annual series
    Coverage,      // required series/window missing or not overlapping
    Domain,        // value outside mathematical domain (log of <= 0, ...)
    Range,         // year outside series span
    Calibration,   // requested eta0 implies non-positive initial wealth
    Parameter,     // bad numeric parameter (dt <= 0, ...)
    Fit,           // degenerate regression input
    UndefinedSkill // persistence error is exactly zero
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Unit: return "unit";
    case ErrorKind::Gap: return "gap";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Range: return "range";
    case ErrorKind::Calibration: return "calibration";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Fit: return "fit";
    case ErrorKind::UndefinedSkill: return "undefined-skill";
    }
    return "unknown";
}

} // namespace thermo
