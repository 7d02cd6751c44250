#pragma once

// Global numeric policy shared by the CLI subcommands, loadable from a JSON
// file (--config or the HOOKPOLY_CONFIG environment variable).

#include <optional>
#include <string>

#include <mpfr.h>

namespace hookpoly {

inline constexpr const char* kConfigEnvVar = "HOOKPOLY_CONFIG";

struct JobConfig {
    long precision_bits = 128;  // working precision, >= 64
    double default_tol = 1e-20;
    long enumeration_cap = 40;  // brute-force partition walks refuse larger n
    long series_trunc = 2000;   // ceiling on q-series expansion orders
    double w0 = 0.05;           // small-|w| regime radius
    double eps = 0.5;           // annulus/neighborhood width for localization
    std::string output_dir = ".";

    mpfr_prec_t prec() const { return static_cast<mpfr_prec_t>(precision_bits); }
};

// throws domain_error when an invariant fails (precision < 64, tol <= 0, ...)
void validate_config(const JobConfig& cfg);

// unknown keys are rejected so typos cannot silently fall back to defaults
JobConfig parse_config_json(const std::string& text);
JobConfig load_config_file(const std::string& path);

// explicit path beats the environment variable beats built-in defaults
JobConfig resolve_config(const std::optional<std::string>& cli_path);

// stable key order, round-trips through parse_config_json
std::string config_to_json(const JobConfig& cfg);

} // namespace hookpoly
