#include "ringoam/state.hpp"

#include <cmath>
#include <string>

namespace ringoam {

RingModeState::RingModeState(int truncation, std::vector<Complex> up,
                             std::vector<Complex> down, double tau)
    : truncation_(truncation), tau_(tau), up_(std::move(up)), down_(std::move(down)) {
    if (truncation_ < 1)
        throw validation_error("truncation must be >= 1");
    const auto expected = static_cast<std::size_t>(2 * truncation_ + 1);
    if (up_.size() != expected || down_.size() != expected)
        throw validation_error("amplitude arrays must span the dense window [-M, M]");
}

std::size_t RingModeState::index_of(int m) const {
    if (m < -truncation_ || m > truncation_)
        throw validation_error("mode index " + std::to_string(m) +
                               " outside truncation window [-" +
                               std::to_string(truncation_) + ", " +
                               std::to_string(truncation_) + "]");
    return static_cast<std::size_t>(m + truncation_);
}

double RingModeState::total_norm() const {
    double acc = 0.0;
    for (const auto& a : up_) acc += std::norm(a);
    for (const auto& a : down_) acc += std::norm(a);
    return acc;
}

Observables observables(const RingModeState& state, const SystemParams& params) {
    const int m_max = state.truncation();
    Observables obs;
    obs.populations_up.reserve(state.n_modes());
    obs.populations_down.reserve(state.n_modes());
    obs.imbalance.reserve(state.n_modes());
    for (int m = -m_max; m <= m_max; ++m) {
        const double nu = state.population(Ring::up, m);
        const double nd = state.population(Ring::down, m);
        obs.populations_up.push_back(nu);
        obs.populations_down.push_back(nd);
        obs.imbalance.push_back((nu - nd) / params.n_total());
        obs.norm += nu + nd;
        obs.angular_momentum += m * (nu + nd);
    }
    return obs;
}

std::pair<StationaryState, StationaryState> stationary_states(const SystemParams& params,
                                                              int n) {
    if (std::abs(n) > params.truncation())
        throw validation_error("stationary mode outside truncation window");
    const double amp = std::sqrt(0.5 * params.n_total()); // N/2 particles per ring
    StationaryState sym{n, Parity::symmetric,
                        n * n + params.epsilon() - params.kappa(),
                        {Complex(amp, 0.0), Complex(amp, 0.0)}};
    StationaryState asym{n, Parity::antisymmetric,
                         n * n + params.epsilon() + params.kappa(),
                         {Complex(amp, 0.0), Complex(-amp, 0.0)}};
    return {sym, asym};
}

RingModeState build_initial_state(const SystemParams& params, int n, double z0,
                                  double dphi0, double perturbation_amplitude,
                                  int perturbation_span) {
    const int m_max = params.truncation();
    if (std::abs(n) + perturbation_span > m_max)
        throw validation_error("perturbation span exceeds the truncation window");
    if (z0 < -1.0 || z0 > 1.0)
        throw validation_error("z0 must lie in [-1, 1]");
    if (perturbation_amplitude < 0.0 || perturbation_span < 0)
        throw validation_error("perturbation amplitude and span must be >= 0");

    const double n_total = params.n_total();
    std::vector<Complex> up(static_cast<std::size_t>(2 * m_max + 1), Complex(0.0, 0.0));
    std::vector<Complex> down = up;

    const auto at = [m_max](std::vector<Complex>& v, int m) -> Complex& {
        return v[static_cast<std::size_t>(m + m_max)];
    };

    at(up, n) = Complex(std::sqrt(0.5 * n_total * (1.0 + z0)), 0.0);
    at(down, n) = std::polar(std::sqrt(0.5 * n_total * (1.0 - z0)), dphi0);

    // Symmetric seeds: identical real amplitude in both rings.
    for (int m = n - perturbation_span; m <= n + perturbation_span; ++m) {
        if (m == n) continue;
        at(up, m) = Complex(perturbation_amplitude, 0.0);
        at(down, m) = Complex(perturbation_amplitude, 0.0);
    }

    double norm = 0.0;
    for (const auto& a : up) norm += std::norm(a);
    for (const auto& a : down) norm += std::norm(a);
    const double rescale = std::sqrt(n_total / norm);
    for (auto& a : up) a *= rescale;
    for (auto& a : down) a *= rescale;

    return RingModeState(m_max, std::move(up), std::move(down), 0.0);
}

} // namespace ringoam
