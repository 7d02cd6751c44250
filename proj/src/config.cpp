#include "hookpoly/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hookpoly/errors.hpp"

namespace hookpoly {

void validate_config(const JobConfig& cfg) {
    if (cfg.precision_bits < 64)
        throw domain_error("config: precision_bits must be at least 64");
    if (!(cfg.default_tol > 0)) throw domain_error("config: default_tol must be positive");
    if (cfg.enumeration_cap < 1) throw domain_error("config: enumeration_cap must be positive");
    if (cfg.series_trunc < 1) throw domain_error("config: series_trunc must be positive");
    if (!(cfg.w0 > 0)) throw domain_error("config: w0 must be positive");
    if (!(cfg.eps > 0)) throw domain_error("config: eps must be positive");
}

JobConfig parse_config_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw domain_error("config: top level must be a JSON object");

    JobConfig cfg;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        try {
            if (key == "precision_bits")
                cfg.precision_bits = it.value().get<long>();
            else if (key == "default_tol")
                cfg.default_tol = it.value().get<double>();
            else if (key == "enumeration_cap")
                cfg.enumeration_cap = it.value().get<long>();
            else if (key == "series_trunc")
                cfg.series_trunc = it.value().get<long>();
            else if (key == "w0")
                cfg.w0 = it.value().get<double>();
            else if (key == "eps")
                cfg.eps = it.value().get<double>();
            else if (key == "output_dir")
                cfg.output_dir = it.value().get<std::string>();
            else
                throw domain_error("config: unknown key \"" + key + "\"");
        } catch (const nlohmann::json::exception& e) {
            throw domain_error("config: bad value for \"" + key + "\": " + e.what());
        }
    }
    validate_config(cfg);
    return cfg;
}

JobConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

JobConfig resolve_config(const std::optional<std::string>& cli_path) {
    if (cli_path) return load_config_file(*cli_path);
    if (const char* env = std::getenv(kConfigEnvVar); env && *env) return load_config_file(env);
    return JobConfig{};
}

std::string config_to_json(const JobConfig& cfg) {
    nlohmann::ordered_json j;
    j["precision_bits"] = cfg.precision_bits;
    j["default_tol"] = cfg.default_tol;
    j["enumeration_cap"] = cfg.enumeration_cap;
    j["series_trunc"] = cfg.series_trunc;
    j["w0"] = cfg.w0;
    j["eps"] = cfg.eps;
    j["output_dir"] = cfg.output_dir;
    return j.dump(2) + "\n";
}

} // namespace hookpoly
