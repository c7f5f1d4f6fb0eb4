#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "ringoam/errors.hpp"

namespace ringoam::ode {

// Adaptive embedded Dormand-Prince 5(4) and fixed-step classical RK4 over a
// flat double vector. The drivers land exactly on every requested sample
// time, so observers see the solution at t = k * stride with no
// interpolation. Everything is deterministic for identical inputs.

struct AdaptiveOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-12;
    double initial_step = 1e-4;
    double max_step = std::numeric_limits<double>::infinity();
};

using Rhs = std::function<void(double t, const std::vector<double>& y,
                               std::vector<double>& dydt)>;

// Called after each accepted step; may throw to abort (singularity guards).
using StepGuard = std::function<void(double t, const std::vector<double>& y)>;

// Called at every sample time t = t0 + k * stride, including k = 0.
using SampleObserver = std::function<void(double t, const std::vector<double>& y)>;

namespace detail {

inline double error_norm(const std::vector<double>& err, const std::vector<double>& y0,
                         const std::vector<double>& y1, double atol, double rtol) {
    double acc = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        double q = err[i] / scale;
        acc += q * q;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

} // namespace detail

class Dopri5 {
public:
    Dopri5(Rhs rhs, std::size_t dim, AdaptiveOptions opts = {})
        : rhs_(std::move(rhs)), opts_(opts), k_(7, std::vector<double>(dim)),
          y_tmp_(dim), y_err_(dim) {}

    // Advances y in place from t to t_end, never stepping past t_end.
    void advance(double& t, std::vector<double>& y, double t_end,
                 const StepGuard& guard = {});

private:
    bool step(double& t, std::vector<double>& y, double h, double& h_next);

    Rhs rhs_;
    AdaptiveOptions opts_;
    std::vector<std::vector<double>> k_;
    std::vector<double> y_tmp_, y_err_;
    double h_ = 0.0;
    bool have_first_stage_ = false; // FSAL: k_[0] holds f(t, y) when true
};

// Integrates from t0 over n_samples * stride, invoking observer at each
// sample time (first call at t0).
void integrate_sampled(Rhs rhs, std::vector<double>& y, double t0, double stride,
                       std::size_t n_samples, const SampleObserver& observer,
                       const AdaptiveOptions& opts, const StepGuard& guard = {});

// Fixed-step classical RK4 with the same sampling contract. Within each
// stride the step count is ceil(stride / dt), so sample times are hit
// exactly.
void integrate_sampled_rk4(Rhs rhs, std::vector<double>& y, double t0, double stride,
                           std::size_t n_samples, double dt,
                           const SampleObserver& observer, const StepGuard& guard = {});

// Least-squares slope of ln(values) against times; times.size() >= 2.
double log_slope(const std::vector<double>& times, const std::vector<double>& values);

} // namespace ringoam::ode
