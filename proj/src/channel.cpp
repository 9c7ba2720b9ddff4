#include "risnet/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "risnet/errors.hpp"

namespace risnet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_2pi(double x) {
    double w = std::fmod(x, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

/// Direction terms shared by both array responses: phi and vphi are the
/// vertical/horizontal geometry ratios, psi the elevation ratio.
struct LinkAngles {
    double phi = 0.0;
    double vphi = 0.0;
    double psi = 0.0;
    double dist = 0.0;
};

/// Angles of arrival at the surface for a ground UE.
LinkAngles ue_angles(const Eigen::Vector2d& ue, const RisGeometry& ris) {
    const auto& r = ris.position;
    double hx = ue.x() - r.x();
    double hy = ue.y() - r.y();
    double horiz = std::hypot(hx, hy);
    if (horiz <= 0.0)
        throw DomainError("UE sits on the RIS vertical axis; angles undefined");
    LinkAngles la;
    la.dist = std::sqrt(horiz * horiz + r.z() * r.z());
    la.phi = hy / horiz;
    la.vphi = -hx / horiz;
    la.psi = -r.z() / la.dist;
    return la;
}

/// Angles of departure from the surface toward a UAV.
LinkAngles uav_angles(const Eigen::Vector3d& uav, const RisGeometry& ris) {
    const auto& r = ris.position;
    double hx = r.x() - uav.x();
    double hy = r.y() - uav.y();
    double horiz = std::hypot(hx, hy);
    if (horiz <= 0.0)
        throw DomainError("UAV sits on the RIS vertical axis; angles undefined");
    LinkAngles la;
    double dz = r.z() - uav.z();
    la.dist = std::sqrt(horiz * horiz + dz * dz);
    la.phi = hy / horiz;
    la.vphi = hx / horiz;
    la.psi = dz / la.dist;
    return la;
}

ArrayChannel steered_channel(const LinkAngles& la, const RisGeometry& ris,
                             const RadioParams& radio, LinkKind kind) {
    ArrayChannel ch;
    ch.distance = la.dist;
    ch.link_kind = kind;
    ch.coefficients.resize(ris.M());
    const double modulus = std::sqrt(radio.beta0) / la.dist;
    const double k0 = -kTwoPi / radio.wavelength();
    for (int mr = 1; mr <= ris.Mr; ++mr) {
        for (int mc = 1; mc <= ris.Mc; ++mc) {
            double phase = k0 * (ris.dr * (mr - 1) * la.phi * la.psi +
                                 ris.dc * (mc - 1) * la.vphi * la.psi);
            int m = (mr - 1) * ris.Mc + (mc - 1);
            ch.coefficients[m] = std::polar(modulus, phase);
        }
    }
    return ch;
}

} // namespace

double ue_uav_snr_db(const Eigen::Vector2d& ue, const Eigen::Vector3d& uav,
                     const RadioParams& radio) {
    Eigen::Vector3d ue3(ue.x(), ue.y(), 0.0);
    double d = (ue3 - uav).norm();
    if (d <= 0.0)
        throw DomainError("ue_uav_snr_db: zero distance");
    return 10.0 * std::log10(std::pow(d, -radio.alpha) * radio.p / radio.N0);
}

double uav_uav_snr_db(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                      const RadioParams& radio) {
    double d = (a - b).norm();
    if (d <= 0.0)
        throw DomainError("uav_uav_snr_db: zero distance");
    double gamma_d = 20.0 * std::log10(2.0 * kTwoPi * radio.fc * d / RadioParams::c);
    return 10.0 * std::log10(radio.P) - gamma_d - 10.0 * std::log10(radio.N0);
}

ArrayChannel ue_ris_channel(const Eigen::Vector2d& ue, const RisGeometry& ris,
                            const RadioParams& radio) {
    return steered_channel(ue_angles(ue, ris), ris, radio, LinkKind::UeToRis);
}

ArrayChannel ris_uav_channel(const Eigen::Vector3d& uav, const RisGeometry& ris,
                             const RadioParams& radio) {
    return steered_channel(uav_angles(uav, ris), ris, radio, LinkKind::RisToUav);
}

std::complex<double> cascaded_channel(const ArrayChannel& h_ur,
                                      const ArrayChannel& h_ra,
                                      const PhaseConfig& theta) {
    const auto n = h_ur.coefficients.size();
    if (h_ra.coefficients.size() != n || theta.thetas.size() != n)
        throw DimensionError("cascaded_channel: channel/phase length mismatch");
    std::complex<double> sum = 0.0;
    for (Eigen::Index m = 0; m < n; ++m) {
        sum += std::conj(h_ra.coefficients[m]) *
               std::polar(1.0, theta.thetas[m]) * h_ur.coefficients[m];
    }
    return sum;
}

double ris_snr_db(std::complex<double> h_ura, const RadioParams& radio) {
    double mag2 = std::norm(h_ura);
    if (mag2 == 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(radio.p * mag2 / radio.N0);
}

PhaseConfig phase_shift_paper(const Eigen::Vector2d& ue,
                              const Eigen::Vector3d& uav,
                              const RisGeometry& ris,
                              const RadioParams& radio) {
    LinkAngles au = ue_angles(ue, ris);
    LinkAngles aa = uav_angles(uav, ris);
    const double pref = std::numbers::pi * radio.fc / RadioParams::c;
    PhaseConfig cfg;
    cfg.thetas.resize(ris.M());
    for (int mr = 1; mr <= ris.Mr; ++mr) {
        for (int mc = 1; mc <= ris.Mc; ++mc) {
            double v = pref * (ris.dr * (mr - 1) * (au.phi * au.psi + aa.phi * aa.psi) +
                               ris.dc * (mc - 1) * (au.vphi * au.psi + aa.vphi * aa.psi));
            cfg.thetas[(mr - 1) * ris.Mc + (mc - 1)] = wrap_2pi(v);
        }
    }
    return cfg;
}

PhaseConfig phase_shift_cophase(const ArrayChannel& h_ur,
                                const ArrayChannel& h_ra) {
    const auto n = h_ur.coefficients.size();
    if (h_ra.coefficients.size() != n)
        throw DimensionError("phase_shift_cophase: channel length mismatch");
    PhaseConfig cfg;
    cfg.thetas.resize(n);
    for (Eigen::Index m = 0; m < n; ++m) {
        std::complex<double> prod =
            std::conj(h_ra.coefficients[m]) * h_ur.coefficients[m];
        if (std::norm(prod) == 0.0)
            throw DomainError("phase_shift_cophase: zero-modulus entry");
        cfg.thetas[m] = wrap_2pi(-std::arg(prod));
    }
    return cfg;
}

} // namespace risnet
