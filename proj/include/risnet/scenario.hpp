#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risnet {

/// Radio-layer parameters. Defaults reproduce the standard evaluation
/// setup used throughout the tests.
struct RadioParams {
    double p = 1.0;        ///< UE transmit power, W
    double P = 5.0;        ///< UAV transmit power, W
    double N0 = 1e-16;     ///< noise power, W (configured in dBm)
    double alpha = 4.0;    ///< path-loss exponent
    double fc = 3e9;       ///< carrier frequency, Hz
    double beta0 = 1e-6;   ///< reference path gain at 1 m, linear
    double gamma0_ue = 85.0;   ///< UE-UAV SNR threshold, dB
    double gamma0_uav = 80.0;  ///< UAV-UAV SNR threshold, dB
    double gamma0_ris = 30.0;  ///< reflected-link SNR threshold, dB
    std::optional<double> D0;  ///< UE-RIS distance gate, m; disabled by default

    static constexpr double c = 3e8; ///< speed of light, m/s

    double wavelength() const { return c / fc; }
};

/// Uniform planar array geometry of the reflecting surface.
struct RisGeometry {
    Eigen::Vector3d position{35.0, 50.0, 20.0};
    int Mr = 10;      ///< rows of reflecting units
    int Mc = 10;      ///< columns of reflecting units
    double dr = 0.05; ///< row spacing, m
    double dc = 0.05; ///< column spacing, m

    int M() const { return Mr * Mc; }
};

/// One fully-specified network instance. Node convention: indices
/// 0..U-1 are UEs in list order, U..U+A-1 are UAVs in list order
/// (1-based in text formats).
struct Scenario {
    std::vector<Eigen::Vector2d> ue_positions;  ///< ground level, z = 0
    std::vector<Eigen::Vector3d> uav_positions;
    RisGeometry ris;
    RadioParams radio;
    std::uint64_t seed = 0;

    int num_ue() const { return static_cast<int>(ue_positions.size()); }
    int num_uav() const { return static_cast<int>(uav_positions.size()); }
    int num_nodes() const { return num_ue() + num_uav(); }
};

/// Axis-aligned placement area with origin at (0, 0).
struct Area {
    double width = 150.0;
    double height = 150.0;
};

/// Uniform i.i.d. placement of UEs and UAVs over the area, UAVs at a
/// fixed altitude. Pure function of its arguments: identical inputs and
/// seed give bit-identical scenarios on every platform.
Scenario sample_scenario(int num_ue, int num_uav, const Area& area,
                         double uav_altitude, const RisGeometry& ris,
                         const RadioParams& radio, std::uint64_t seed);

/// Reports every violated invariant (empty means valid). Never throws.
std::vector<std::string> validate(const Scenario& sc);

} // namespace risnet
