#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "ringoam/ode.hpp"
#include "ringoam/params.hpp"

namespace ringoam::two_state {

// Reduced model of the n = 0 antisymmetric state plus one symmetric
// perturbation pair +-m, in the canonical pair
//   x    = |alpha_m|^2      (0 <= x <= N/4 by particle conservation),
//   zeta = theta - phi      (phase difference, radians).
struct TwoStatePoint {
    double x = 0.0;
    double zeta = 0.0;
};

// x'    = 2 gamma x (2x - N/2) sin(2 zeta)
// zeta' = 2 kappa - m^2 + gamma (3x - N/2) + gamma (4x - N/2) cos(2 zeta)
std::pair<double, double> two_state_rhs(const TwoStatePoint& p, const SystemParams& params,
                                        int m);

// H = x [2 kappa - m^2 - gamma N/2 + (3/2) gamma x + gamma (2x - N/2) cos(2 zeta)]
double hamiltonian(const TwoStatePoint& p, const SystemParams& params, int m);

enum class Family {
    saddle_at_zero,       // x = 0,        cos(2 zeta) = (2k - m^2 - eps) / eps
    saddle_at_quarter,    // x = N/4,      cos(2 zeta) = (m^2 - 2k - eps/2) / eps
    center_at_pi,         // zeta in {0, pi},        x = (m^2 - 2k + 2 eps) N / (14 eps)
    center_at_half_pi,    // zeta in {pi/2, 3pi/2},  x = (2k - m^2) N / (2 eps)
};

std::string family_token(Family f); // stable JSON/CSV token, e.g. "saddle-at-zero"

enum class PointKind { saddle, center };

struct CriticalPoint {
    TwoStatePoint location;
    Family family = Family::saddle_at_zero;
    PointKind classification = PointKind::saddle;
    std::pair<std::complex<double>, std::complex<double>> jacobian_eigenvalues;
    bool marginal = false; // existence-window boundary; eigenvalues may vanish
};

// Enumerates all critical points of the reduced system with zeta restricted
// to [0, 2 pi). Existence windows are inclusive; points on a window
// boundary carry the marginal flag. eps = 0 is rejected.
std::vector<CriticalPoint> critical_points(const SystemParams& params, int m);

// Eigenvalues of the 2x2 Jacobian of the reduced equations at an arbitrary
// point (the flow is Hamiltonian, so the Jacobian is traceless and the pair
// is +-sqrt(a^2 + b c)).
std::pair<std::complex<double>, std::complex<double>>
jacobian_eigenvalues(const TwoStatePoint& p, const SystemParams& params, int m);

// Upper bound on the population transfer |alpha_m|^2_max / N along the
// H = 0 orbit:
//   (2k - m^2)/eps                      for k in [m^2/2, (m^2 + eps/4)/2]
//   (2/7)(m^2 - 2k + 2 eps)/(2 eps)     for k in [(m^2 + eps/4)/2, (m^2 + 2 eps)/2]
// Outside the instability interval the bound is undefined (domain error).
double max_transfer(const SystemParams& params, int m);

struct PortraitCell {
    double zeta = 0.0;
    double x_over_n = 0.0;
    double h = 0.0;
};

struct PhasePortrait {
    std::vector<double> zeta_axis;
    std::vector<double> x_axis; // absolute x, in particles
    std::vector<PortraitCell> cells; // row-major: x outer, zeta inner
    std::vector<CriticalPoint> critical_points;
};

PhasePortrait phase_portrait(const SystemParams& params, int m,
                             const std::vector<double>& x_axis,
                             const std::vector<double>& zeta_axis);

struct TwoStateSample {
    double tau = 0.0;
    double x = 0.0;
    double zeta = 0.0;
    double h_drift = 0.0; // max relative drift of H up to this sample
};

struct TwoStateTrajectory {
    double sampling_stride = 0.0;
    std::vector<TwoStateSample> samples;
    double final_h_drift() const { return samples.empty() ? 0.0 : samples.back().h_drift; }
};

// Integrates the reduced equations; H drift beyond 1e-8 relative aborts
// with conservation_error.
TwoStateTrajectory integrate_two_state(const TwoStatePoint& initial,
                                       const SystemParams& params, int m, double t_end,
                                       double sampling_stride = 0.01,
                                       const ode::AdaptiveOptions& opts = {1e-12, 1e-14});

} // namespace ringoam::two_state
