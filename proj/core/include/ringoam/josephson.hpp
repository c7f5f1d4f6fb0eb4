#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringoam/full_dynamics.hpp"
#include "ringoam/ode.hpp"
#include "ringoam/params.hpp"

namespace ringoam::josephson {

// Single-mode two-ring dynamics in the canonical pair (z, dphi) with the
// rescaled time s = 2 kappa tau. Lambda = eps/kappa is the only parameter.
struct JosephsonState {
    double z = 0.0;    // population imbalance, |z| <= 1
    double dphi = 0.0; // phase difference, radians
};

// dz/ds    = -sqrt(1 - z^2) sin(dphi)
// ddphi/ds = Lambda z + z cos(dphi) / sqrt(1 - z^2)
// |z| -> 1 is a phase singularity; callers integrating these equations must
// keep |z| < 1 - 1e-12.
std::pair<double, double> josephson_rhs(const JosephsonState& s, double lambda);

// H = (1/2) Lambda z^2 - cos(dphi) sqrt(1 - z^2)
double josephson_hamiltonian(const JosephsonState& s, double lambda);

// Self-trapping threshold Lambda_c = 2 (cos(dphi0) sqrt(1 - z0^2) + 1) / z0^2.
// Lambda > Lambda_c keeps z away from zero; Lambda < Lambda_c allows full
// Josephson oscillations. z0 = 0 is a domain error.
double lambda_critical(double z0, double dphi0);

struct JosephsonSample {
    double s = 0.0;
    double z = 0.0;
    double dphi = 0.0;
    double h_drift = 0.0;
};

struct JosephsonTrajectory {
    double sampling_stride = 0.0;
    std::vector<JosephsonSample> samples;
    double final_h_drift() const { return samples.empty() ? 0.0 : samples.back().h_drift; }
    double min_z() const;
    double mean_z() const;
    bool z_reaches_zero() const; // sign change or |z| < 1e-6 at a sample
};

JosephsonTrajectory integrate_josephson(const JosephsonState& initial, double lambda,
                                        double s_end, double sampling_stride = 0.01,
                                        const ode::AdaptiveOptions& opts = {1e-12, 1e-14});

// --- Perturbed-regime classifier over the full coupled-mode model ---

enum class Regime {
    stable_josephson,
    unstable_josephson,
    semistable_josephson,
    stable_selftrapping,
    unstable_selftrapping,
    semistable_selftrapping,
};

std::string regime_token(Regime r); // stable CSV token, e.g. "unstable-josephson"

struct ClassifyConfig {
    int main_mode = 0;
    double dphi0 = 3.14159265358979323846;
    double perturbation_amplitude_rel = 1e-4; // amplitude = rel * sqrt(N)
    int perturbation_span = 3;
    double tau_max = 100.0;
    double stable_threshold = 0.01; // on the summed perturbed-mode fraction
    dynamics::IntegratorConfig integrator; // t_end is overwritten with tau_max
};

struct RegimeCell {
    double kappa = 0.0;
    double epsilon = 0.0;
    double z0 = 0.0;
    Regime label = Regime::stable_josephson;
    std::optional<double> decay_time;    // set iff unstable-*
    std::optional<int> dominant_mode;    // |m| of the largest excitation
    double max_perturbed_fraction = 0.0;
    std::optional<std::string> failure;  // integrator error, cell kept in sweeps
};

// Integrates the full model from the mode-n imbalanced state with symmetric
// perturbation seeds and classifies the run:
//  - stable     : summed perturbed fraction < stable_threshold throughout
//  - unstable   : the perturbed-mode total crosses the main-mode total;
//                 decay_time is the first crossing
//  - semistable : threshold exceeded but no crossing by tau_max
// with the josephson/selftrapping facet decided by whether z_n(tau) reaches
// zero before the decay time (or at all, when there is none).
RegimeCell classify_regime(const SystemParams& params, double z0,
                           const ClassifyConfig& config);

struct RegimeMap {
    std::vector<double> kappa_axis;
    std::vector<double> epsilon_axis;
    double z0 = 0.0;
    std::vector<RegimeCell> cells; // row-major: epsilon outer, kappa inner

    const RegimeCell& at(std::size_t i_eps, std::size_t i_kappa) const {
        return cells[i_eps * kappa_axis.size() + i_kappa];
    }
};

// classify_regime per grid cell. Cells are evaluated concurrently on `jobs`
// threads and merged by index, so the output is independent of scheduling;
// per-cell failures are recorded in the cell.
RegimeMap regime_map(const std::vector<double>& kappa_axis,
                     const std::vector<double>& epsilon_axis, double z0, double gamma,
                     double n_total, int truncation, const ClassifyConfig& config,
                     unsigned jobs = 1);

// Maps a single-mode trajectory of the full model onto (z_n, dphi_n) at
// each sample; requires stored amplitudes.
std::vector<JosephsonSample> project_to_josephson(const dynamics::Trajectory& traj, int n,
                                                  double n_total, double kappa);

} // namespace ringoam::josephson
