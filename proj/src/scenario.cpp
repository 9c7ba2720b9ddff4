#include "risnet/scenario.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "risnet/errors.hpp"
#include "risnet/rng.hpp"

namespace risnet {

Scenario sample_scenario(int num_ue, int num_uav, const Area& area,
                         double uav_altitude, const RisGeometry& ris,
                         const RadioParams& radio, std::uint64_t seed) {
    if (num_ue < 1 || num_uav < 1)
        throw ConfigError("sample_scenario: need at least one UE and one UAV");
    if (!(area.width > 0.0) || !(area.height > 0.0))
        throw ConfigError("sample_scenario: area sides must be positive");
    if (!(uav_altitude > 0.0))
        throw ConfigError("sample_scenario: UAV altitude must be positive");

    std::mt19937_64 gen(seed);
    Scenario sc;
    sc.ris = ris;
    sc.radio = radio;
    sc.seed = seed;
    sc.ue_positions.reserve(num_ue);
    for (int u = 0; u < num_ue; ++u) {
        double x = uniform01(gen) * area.width;
        double y = uniform01(gen) * area.height;
        sc.ue_positions.emplace_back(x, y);
    }
    sc.uav_positions.reserve(num_uav);
    for (int a = 0; a < num_uav; ++a) {
        double x = uniform01(gen) * area.width;
        double y = uniform01(gen) * area.height;
        sc.uav_positions.emplace_back(x, y, uav_altitude);
    }
    return sc;
}

namespace {

void check_positive(std::vector<std::string>& out, const char* name, double v) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << name << " must be positive (got " << v << ")";
        out.push_back(os.str());
    }
}

} // namespace

std::vector<std::string> validate(const Scenario& sc) {
    std::vector<std::string> violations;
    const RadioParams& r = sc.radio;
    check_positive(violations, "p", r.p);
    check_positive(violations, "P", r.P);
    check_positive(violations, "N0", r.N0);
    check_positive(violations, "alpha", r.alpha);
    check_positive(violations, "fc", r.fc);
    check_positive(violations, "beta0", r.beta0);
    if (r.D0 && !(*r.D0 > 0.0))
        violations.push_back("D0 must be positive when enabled");

    const RisGeometry& g = sc.ris;
    if (g.Mr < 1 || g.Mc < 1)
        violations.push_back("ris: Mr x Mc must be at least 1");
    check_positive(violations, "ris.dr", g.dr);
    check_positive(violations, "ris.dc", g.dc);
    if (!(g.position.z() > 0.0))
        violations.push_back("ris: z_R must be positive");

    if (sc.ue_positions.empty())
        violations.push_back("scenario needs at least one UE");
    if (sc.uav_positions.empty())
        violations.push_back("scenario needs at least one UAV");
    for (std::size_t u = 0; u < sc.ue_positions.size(); ++u) {
        if (!sc.ue_positions[u].allFinite()) {
            std::ostringstream os;
            os << "UE " << u + 1 << " has non-finite coordinates";
            violations.push_back(os.str());
        }
    }
    for (std::size_t a = 0; a < sc.uav_positions.size(); ++a) {
        const auto& pos = sc.uav_positions[a];
        if (!pos.allFinite()) {
            std::ostringstream os;
            os << "UAV " << a + 1 << " has non-finite coordinates";
            violations.push_back(os.str());
        } else if (!(pos.z() > 0.0)) {
            std::ostringstream os;
            os << "UAV " << a + 1 << " altitude must be positive (got "
               << pos.z() << ")";
            violations.push_back(os.str());
        }
    }
    return violations;
}

} // namespace risnet
