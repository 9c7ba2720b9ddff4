#pragma once

#include <cstdint>
#include <string>

#include "risnet/scenario.hpp"

namespace risnet {

/// Everything needed to sample scenarios; JSON-loadable. Defaults are
/// the standard evaluation setup (10 UEs, 7 UAVs, 150 m x 150 m arena,
/// 50 m altitude, surface at (35, 50, 20) with a 10 x 10 array).
struct SimConfig {
    int num_ue = 10;
    int num_uav = 7;
    Area area;
    double uav_altitude = 50.0;
    RisGeometry ris;
    RadioParams radio;
    std::uint64_t seed = 1;

    Scenario sample(std::uint64_t seed_override) const;
    Scenario sample() const { return sample(seed); }
};

/// Parses a JSON config file. Recognized keys: num_ue, num_uav, area_m
/// (side length or [width, height]), uav_altitude_m, seed, p, P, N0
/// (dBm), alpha, fc, beta0, gamma0_ue, gamma0_uav, gamma0_ris, D0, and
/// ris {position, Mr, Mc, dr, dc}. Missing keys keep their defaults;
/// unknown keys are rejected. Throws ConfigError on any problem with
/// the file's content or existence.
SimConfig load_config(const std::string& path);

/// Same parse from an in-memory JSON string (used by tests).
SimConfig parse_config(const std::string& json_text);

} // namespace risnet
