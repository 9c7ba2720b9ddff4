#pragma once

#include <Eigen/Dense>
#include <complex>

#include "risnet/scenario.hpp"

namespace risnet {

enum class LinkKind { UeToRis, RisToUav };

/// Constant-modulus LoS channel between a node and the surface; one
/// complex coefficient per reflecting unit, row-major over (m_r, m_c).
struct ArrayChannel {
    Eigen::VectorXcd coefficients;
    double distance = 0.0;
    LinkKind link_kind = LinkKind::UeToRis;
};

/// Per-unit phase shifts applied by the surface, each in [0, 2pi).
struct PhaseConfig {
    Eigen::VectorXd thetas;
};

/// How candidate links get their phase configuration: the closed-form
/// geometric formula, or analytic co-phasing that attains the coherent
/// combining bound.
enum class PhaseMode { Paper, Cophase };

/// Direct UE-UAV SNR in dB: 10 log10(d^-alpha * p / N0) with d the 3-D
/// distance. Throws DomainError at zero distance.
double ue_uav_snr_db(const Eigen::Vector2d& ue, const Eigen::Vector3d& uav,
                     const RadioParams& radio);

/// UAV-UAV SNR in dB: 10 log10(P) - Gamma(d) - 10 log10(N0), where
/// Gamma(d) = 20 log10(4 pi fc d / c) is the free-space path loss.
double uav_uav_snr_db(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                      const RadioParams& radio);

/// UE-to-surface array channel. Throws DomainError when the UE sits on
/// the surface's vertical axis (angles undefined).
ArrayChannel ue_ris_channel(const Eigen::Vector2d& ue, const RisGeometry& ris,
                            const RadioParams& radio);

/// Surface-to-UAV array channel; same degeneracy rule.
ArrayChannel ris_uav_channel(const Eigen::Vector3d& uav, const RisGeometry& ris,
                             const RadioParams& radio);

/// End-to-end reflected channel sum_m conj(h_ra[m]) e^{j theta_m} h_ur[m].
std::complex<double> cascaded_channel(const ArrayChannel& h_ur,
                                      const ArrayChannel& h_ra,
                                      const PhaseConfig& theta);

/// Reflected-link SNR 10 log10(p |h|^2 / N0); -inf when |h| = 0.
double ris_snr_db(std::complex<double> h_ura, const RadioParams& radio);

/// Closed-form phase configuration from the link geometry (pi*fc/c
/// prefactor over the summed UE and UAV direction terms).
PhaseConfig phase_shift_paper(const Eigen::Vector2d& ue,
                              const Eigen::Vector3d& uav,
                              const RisGeometry& ris, const RadioParams& radio);

/// Co-phasing: theta_m = -arg(conj(h_ra[m]) h_ur[m]), aligning every
/// summand so the cascaded modulus reaches M beta0 / (d_ur d_ra).
PhaseConfig phase_shift_cophase(const ArrayChannel& h_ur,
                                const ArrayChannel& h_ra);

} // namespace risnet
