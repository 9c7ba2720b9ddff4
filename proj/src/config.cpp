#include "risnet/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "risnet/errors.hpp"

namespace risnet {

using nlohmann::json;

Scenario SimConfig::sample(std::uint64_t seed_override) const {
    return sample_scenario(num_ue, num_uav, area, uav_altitude, ris, radio,
                           seed_override);
}

namespace {

double as_number(const json& j, const std::string& key) {
    if (!j.is_number())
        throw ConfigError("config key '" + key + "' must be a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& key) {
    double v = as_number(j, key);
    if (v != std::floor(v))
        throw ConfigError("config key '" + key + "' must be an integer");
    return static_cast<int>(v);
}

SimConfig from_json(const json& root) {
    if (!root.is_object())
        throw ConfigError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "num_ue", "num_uav", "area_m", "uav_altitude_m", "seed",
        "p", "P", "N0", "alpha", "fc", "beta0",
        "gamma0_ue", "gamma0_uav", "gamma0_ris", "D0", "ris"};
    for (auto it = root.begin(); it != root.end(); ++it)
        if (!known.count(it.key()))
            throw ConfigError("unknown config key '" + it.key() + "'");

    SimConfig cfg;
    if (root.contains("num_ue")) cfg.num_ue = as_int(root["num_ue"], "num_ue");
    if (root.contains("num_uav")) cfg.num_uav = as_int(root["num_uav"], "num_uav");
    if (root.contains("area_m")) {
        const json& a = root["area_m"];
        if (a.is_array()) {
            if (a.size() != 2)
                throw ConfigError("area_m array must be [width, height]");
            cfg.area.width = as_number(a[0], "area_m[0]");
            cfg.area.height = as_number(a[1], "area_m[1]");
        } else {
            double side = as_number(a, "area_m");
            cfg.area.width = side;
            cfg.area.height = side;
        }
    }
    if (root.contains("uav_altitude_m"))
        cfg.uav_altitude = as_number(root["uav_altitude_m"], "uav_altitude_m");
    if (root.contains("seed")) {
        const json& s = root["seed"];
        if (!s.is_number_unsigned())
            throw ConfigError("config key 'seed' must be a non-negative integer");
        cfg.seed = s.get<std::uint64_t>();
    }

    RadioParams& r = cfg.radio;
    if (root.contains("p")) r.p = as_number(root["p"], "p");
    if (root.contains("P")) r.P = as_number(root["P"], "P");
    if (root.contains("N0")) {
        double dbm = as_number(root["N0"], "N0");
        r.N0 = 1e-3 * std::pow(10.0, dbm / 10.0);
    }
    if (root.contains("alpha")) r.alpha = as_number(root["alpha"], "alpha");
    if (root.contains("fc")) r.fc = as_number(root["fc"], "fc");
    if (root.contains("beta0")) r.beta0 = as_number(root["beta0"], "beta0");
    if (root.contains("gamma0_ue"))
        r.gamma0_ue = as_number(root["gamma0_ue"], "gamma0_ue");
    if (root.contains("gamma0_uav"))
        r.gamma0_uav = as_number(root["gamma0_uav"], "gamma0_uav");
    if (root.contains("gamma0_ris"))
        r.gamma0_ris = as_number(root["gamma0_ris"], "gamma0_ris");
    if (root.contains("D0")) r.D0 = as_number(root["D0"], "D0");

    if (root.contains("ris")) {
        const json& g = root["ris"];
        if (!g.is_object())
            throw ConfigError("config key 'ris' must be an object");
        static const std::set<std::string> ris_known = {"position", "Mr", "Mc",
                                                        "dr", "dc"};
        for (auto it = g.begin(); it != g.end(); ++it)
            if (!ris_known.count(it.key()))
                throw ConfigError("unknown ris config key '" + it.key() + "'");
        if (g.contains("position")) {
            const json& p = g["position"];
            if (!p.is_array() || p.size() != 3)
                throw ConfigError("ris.position must be [x, y, z]");
            cfg.ris.position = {as_number(p[0], "ris.position[0]"),
                                as_number(p[1], "ris.position[1]"),
                                as_number(p[2], "ris.position[2]")};
        }
        if (g.contains("Mr")) cfg.ris.Mr = as_int(g["Mr"], "ris.Mr");
        if (g.contains("Mc")) cfg.ris.Mc = as_int(g["Mc"], "ris.Mc");
        if (g.contains("dr")) cfg.ris.dr = as_number(g["dr"], "ris.dr");
        if (g.contains("dc")) cfg.ris.dc = as_number(g["dc"], "ris.dc");
    }

    if (cfg.num_ue < 1 || cfg.num_uav < 1)
        throw ConfigError("num_ue and num_uav must be at least 1");
    if (!(cfg.area.width > 0.0) || !(cfg.area.height > 0.0))
        throw ConfigError("area_m sides must be positive");
    if (!(cfg.uav_altitude > 0.0))
        throw ConfigError("uav_altitude_m must be positive");
    if (cfg.ris.Mr < 1 || cfg.ris.Mc < 1 || !(cfg.ris.dr > 0.0) ||
        !(cfg.ris.dc > 0.0))
        throw ConfigError("ris array geometry must be positive");
    if (!(r.p > 0.0) || !(r.P > 0.0) || !(r.N0 > 0.0) || !(r.alpha > 0.0) ||
        !(r.fc > 0.0) || !(r.beta0 > 0.0))
        throw ConfigError("radio parameters must be positive");
    return cfg;
}

} // namespace

SimConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return from_json(root);
}

SimConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace risnet
