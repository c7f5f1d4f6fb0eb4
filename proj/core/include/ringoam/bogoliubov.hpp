#pragma once

#include <array>
#include <complex>
#include <vector>

#include "ringoam/params.hpp"
#include "ringoam/state.hpp"

namespace ringoam::bogoliubov {

// Excitation branch of the antisymmetric stationary state for a symmetric
// perturbation pair +-m:
//   omega^2 = (m^2 + eps - 2 kappa)^2 - eps^2.
// omega^2 < 0 means exponential growth at rate Im(omega) = sqrt(-omega^2).
struct BogoliubovResult {
    int m = 0;
    double omega_squared = 0.0;
    bool stable = true; // omega_squared >= 0 (marginal points count as stable)
    double growth_rate = 0.0;
};

BogoliubovResult excitation_branch(int m, double kappa, double epsilon);

// Closed kappa-interval [m^2/2, (m^2 + 2 eps)/2] where the antisymmetric
// state is unstable against the +-m pair. Degenerate (zero width) at eps=0.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double kappa) const { return kappa >= lo && kappa <= hi; }
    bool degenerate() const { return lo == hi; }
};

Interval instability_interval(int m, double epsilon);

// Assembles the 4x4 linear eigenproblem of the ring-coupled
// Bogoliubov-de Gennes equations in the basis
// (u_m^u, u_m^d, v_{-m}^u, v_{-m}^d) around the n = 0 stationary state of
// the requested parity, and solves it numerically. For the antisymmetric
// state the physically relevant branch reproduces the closed form above.
std::array<std::complex<double>, 4> bdg_spectrum(int m, double kappa, double epsilon,
                                                 Parity parity);

struct StabilityCell {
    double kappa = 0.0;
    double epsilon = 0.0;
    std::vector<double> omega_squared; // per requested mode
    std::vector<int> unstable_modes;   // |m| values with omega^2 < 0
};

struct StabilityMap {
    std::vector<double> kappa_axis;
    std::vector<double> epsilon_axis;
    std::vector<int> modes;
    std::vector<StabilityCell> cells; // row-major: epsilon outer, kappa inner

    const StabilityCell& at(std::size_t i_eps, std::size_t i_kappa) const {
        return cells[i_eps * kappa_axis.size() + i_kappa];
    }
};

StabilityMap stability_map(const std::vector<double>& kappa_axis,
                           const std::vector<double>& epsilon_axis,
                           const std::vector<int>& modes);

std::vector<double> linspace(double lo, double hi, std::size_t count);

} // namespace ringoam::bogoliubov
