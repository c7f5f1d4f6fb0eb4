#include "ringoam/bogoliubov.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace ringoam::bogoliubov {

BogoliubovResult excitation_branch(int m, double kappa, double epsilon) {
    if (m == 0)
        throw validation_error("perturbation mode must differ from the stationary mode");
    if (kappa < 0.0 || epsilon < 0.0)
        throw validation_error("kappa and epsilon must be >= 0");
    const double d = double(m) * double(m) + epsilon - 2.0 * kappa;
    BogoliubovResult r;
    r.m = m;
    r.omega_squared = d * d - epsilon * epsilon;
    r.stable = r.omega_squared >= 0.0;
    r.growth_rate = r.stable ? 0.0 : std::sqrt(-r.omega_squared);
    return r;
}

Interval instability_interval(int m, double epsilon) {
    if (m == 0)
        throw validation_error("perturbation mode must differ from the stationary mode");
    if (epsilon < 0.0)
        throw validation_error("epsilon must be >= 0");
    const double m2 = double(m) * double(m);
    return Interval{0.5 * m2, 0.5 * (m2 + 2.0 * epsilon)};
}

std::array<std::complex<double>, 4> bdg_spectrum(int m, double kappa, double epsilon,
                                                 Parity parity) {
    if (m == 0)
        throw validation_error("perturbation mode must differ from the stationary mode");
    const double mu = parity == Parity::symmetric ? epsilon - kappa : epsilon + kappa;
    const double d = double(m) * double(m) - mu + 2.0 * epsilon;

    // Basis (u_m^u, u_m^d, v_{-m}^u, v_{-m}^d). The ring symmetry would
    // block-diagonalize this into 2x2 problems; the full matrix is kept as a
    // consistency check against the closed form.
    Eigen::Matrix4d b;
    b << d, -kappa, epsilon, 0.0,
        -kappa, d, 0.0, epsilon,
        -epsilon, 0.0, -d, kappa,
        0.0, -epsilon, kappa, -d;

    Eigen::EigenSolver<Eigen::Matrix4d> solver(b, /*computeEigenvectors=*/false);
    std::array<std::complex<double>, 4> out;
    for (int i = 0; i < 4; ++i)
        out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

StabilityMap stability_map(const std::vector<double>& kappa_axis,
                           const std::vector<double>& epsilon_axis,
                           const std::vector<int>& modes) {
    if (kappa_axis.empty() || epsilon_axis.empty())
        throw validation_error("stability map axes must be non-empty");
    for (int m : modes)
        if (m == 0)
            throw validation_error("stability map modes must be nonzero");

    StabilityMap map;
    map.kappa_axis = kappa_axis;
    map.epsilon_axis = epsilon_axis;
    map.modes = modes;
    map.cells.reserve(kappa_axis.size() * epsilon_axis.size());
    for (double eps : epsilon_axis) {
        for (double kap : kappa_axis) {
            StabilityCell cell;
            cell.kappa = kap;
            cell.epsilon = eps;
            cell.omega_squared.reserve(modes.size());
            for (int m : modes) {
                const auto r = excitation_branch(m, kap, eps);
                cell.omega_squared.push_back(r.omega_squared);
                if (!r.stable)
                    cell.unstable_modes.push_back(std::abs(m));
            }
            map.cells.push_back(std::move(cell));
        }
    }
    return map;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0)
        throw validation_error("linspace needs at least one point");
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = lo;
        return v;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = lo + step * static_cast<double>(i);
    v[count - 1] = hi;
    return v;
}

} // namespace ringoam::bogoliubov
