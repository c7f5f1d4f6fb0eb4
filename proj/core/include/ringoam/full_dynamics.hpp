#pragma once

#include <optional>
#include <vector>

#include "ringoam/ode.hpp"
#include "ringoam/params.hpp"
#include "ringoam/state.hpp"

namespace ringoam::dynamics {

// Evaluation strategy for the cubic mode-coupling term of the equations of
// motion. The direct triple loop costs O((2M+1)^3) per ring; the
// convolution form computes the same sum as an autocorrelation followed by
// a convolution in O((2M+1)^2) and agrees with the direct loop to 1e-12
// relative.
enum class Kernel { direct, convolution };

struct ModeDerivative {
    std::vector<Complex> up;
    std::vector<Complex> down;
};

// d alpha_m^r / d tau for both rings:
//   i d alpha_m^r = m^2 alpha_m^r - kappa alpha_m^{r'}
//                   + gamma sum_{n,n'} alpha_n^r conj(alpha_{n'}^r) alpha_{m-n+n'}^r,
// with r' the opposite ring and triple-sum terms dropped when m-n+n' falls
// outside [-M, M].
ModeDerivative rhs(const RingModeState& state, const SystemParams& params,
                   Kernel kernel = Kernel::direct);

enum class Method { adaptive, fixed_rk4 };

struct IntegratorConfig {
    Method method = Method::adaptive;
    double rel_tol = 1e-11;  // adaptive
    double abs_tol = 1e-12;  // adaptive
    double dt = 1e-3;        // fixed-step
    double t_end = 10.0;
    double sampling_stride = 0.01;
    Kernel kernel = Kernel::convolution;
    bool store_amplitudes = false;
    // Integration aborts with conservation_error beyond this relative drift
    // of norm or angular momentum.
    double conservation_guard = 1e-6;
};

struct TrajectorySample {
    double tau = 0.0;
    std::vector<double> populations_up;   // N_m^u, m = -M..M
    std::vector<double> populations_down; // N_m^d
    // max relative drift of norm / angular momentum seen up to this sample
    double norm_drift = 0.0;
    double angular_momentum_drift = 0.0;
    std::vector<Complex> amplitudes_up;   // filled when store_amplitudes
    std::vector<Complex> amplitudes_down;
};

class Trajectory {
public:
    Trajectory(int truncation, double stride) : truncation_(truncation), stride_(stride) {}

    int truncation() const { return truncation_; }
    double sampling_stride() const { return stride_; }
    const std::vector<TrajectorySample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    const TrajectorySample& operator[](std::size_t i) const { return samples_[i]; }

    double population(std::size_t i, Ring r, int m) const;
    // N_m^u + N_m^d at sample i
    double mode_total(std::size_t i, int m) const;
    // z_m = (N_m^u - N_m^d) / N
    double imbalance(std::size_t i, int m, double n_total) const;
    double final_norm_drift() const;
    double final_angular_momentum_drift() const;

    void append(TrajectorySample s) { samples_.push_back(std::move(s)); }

private:
    int truncation_;
    double stride_;
    std::vector<TrajectorySample> samples_;
};

// Integrates the coupled-mode equations from `state` to config.t_end,
// sampling every config.sampling_stride. Norm and angular-momentum drift
// are recorded at each sample and guarded against config.conservation_guard.
Trajectory integrate(const RingModeState& state, const SystemParams& params,
                     const IntegratorConfig& config);

// Least-squares exponential growth rate of N_m(tau) = N_m^u + N_m^d over
// tau in [window_begin, window_end]. Requires at least 4 samples in the
// window and strictly positive populations.
double growth_rate_fit(const Trajectory& traj, int m, double window_begin,
                       double window_end);

} // namespace ringoam::dynamics
