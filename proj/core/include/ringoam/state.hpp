#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ringoam/params.hpp"

namespace ringoam {

using Complex = std::complex<double>;

enum class Ring { up = 0, down = 1 };

// Complex OAM-mode amplitudes alpha_m for both rings over the dense window
// m in [-M, M], together with the scaled time tau. |alpha_m|^2 is the
// particle count in mode m of that ring. Immutable after construction.
class RingModeState {
public:
    RingModeState(int truncation, std::vector<Complex> up, std::vector<Complex> down,
                  double tau = 0.0);

    int truncation() const { return truncation_; }
    int n_modes() const { return 2 * truncation_ + 1; }
    double tau() const { return tau_; }

    const Complex& amplitude(Ring r, int m) const { return ring(r)[index_of(m)]; }
    const std::vector<Complex>& amplitudes(Ring r) const { return ring(r); }

    double population(Ring r, int m) const { return std::norm(amplitude(r, m)); }
    double total_norm() const;

    std::size_t index_of(int m) const; // throws validation_error if |m| > M

private:
    const std::vector<Complex>& ring(Ring r) const {
        return r == Ring::up ? up_ : down_;
    }

    int truncation_;
    double tau_;
    std::vector<Complex> up_;
    std::vector<Complex> down_;
};

// Derived one-time observables of a state.
struct Observables {
    std::vector<double> populations_up;   // N_m^u, m = -M..M
    std::vector<double> populations_down; // N_m^d
    std::vector<double> imbalance;        // z_m = (N_m^u - N_m^d) / N
    double norm = 0.0;                    // sum of all populations
    double angular_momentum = 0.0;        // L = sum_m m (N_m^u + N_m^d)
};

Observables observables(const RingModeState& state, const SystemParams& params);

// A single-mode stationary solution with N/2 particles per ring.
enum class Parity { symmetric, antisymmetric };

struct StationaryState {
    int n = 0;
    Parity parity = Parity::symmetric;
    double chemical_potential = 0.0;       // mu+ = n^2 + eps - kappa, mu- = n^2 + eps + kappa
    std::pair<Complex, Complex> amplitudes; // (alpha_n^u, alpha_n^d)
};

std::pair<StationaryState, StationaryState> stationary_states(const SystemParams& params,
                                                              int n);

// Populates mode n with ring imbalance z0 and inter-ring phase dphi0:
//   alpha_n^u = sqrt(N (1+z0)/2),  alpha_n^d = sqrt(N (1-z0)/2) e^{i dphi0},
// then seeds every mode 0 < |m - n| <= perturbation_span in both rings with
// the real amplitude perturbation_amplitude, and rescales the total norm
// back to exactly N.
RingModeState build_initial_state(const SystemParams& params, int n, double z0,
                                  double dphi0, double perturbation_amplitude = 0.0,
                                  int perturbation_span = 0);

} // namespace ringoam
