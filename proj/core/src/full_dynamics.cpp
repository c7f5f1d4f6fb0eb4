#include "ringoam/full_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ringoam::dynamics {

namespace {

// Cubic coupling for one ring: nl[i] = sum_{n,n'} a_n conj(a_{n'}) a_{m-n+n'},
// all three indices inside the window. Direct triple loop.
void nonlinear_direct(const Complex* a, int w, Complex* nl) {
    for (int im = 0; im < w; ++im) {
        Complex acc(0.0, 0.0);
        for (int in = 0; in < w; ++in) {
            const int base = im - in;
            const int lo = std::max(0, -base);
            const int hi = std::min(w - 1, w - 1 - base);
            Complex inner(0.0, 0.0);
            for (int inp = lo; inp <= hi; ++inp)
                inner += std::conj(a[inp]) * a[base + inp];
            acc += a[in] * inner;
        }
        nl[im] = acc;
    }
}

// Same sum rewritten as autocorrelation + convolution:
//   corr_j = sum_p conj(a_p) a_{p+j},  nl_m = sum_n a_n corr_{m-n}.
void nonlinear_convolution(const Complex* a, int w, Complex* nl, Complex* corr) {
    const int span = w - 1; // j in [-span, span]
    for (int j = -span; j <= span; ++j) {
        const int lo = std::max(0, -j);
        const int hi = std::min(w - 1, w - 1 - j);
        Complex acc(0.0, 0.0);
        for (int p = lo; p <= hi; ++p)
            acc += std::conj(a[p]) * a[p + j];
        corr[j + span] = acc;
    }
    for (int im = 0; im < w; ++im) {
        Complex acc(0.0, 0.0);
        for (int in = 0; in < w; ++in)
            acc += a[in] * corr[im - in + span];
        nl[im] = acc;
    }
}

struct FullSystem {
    SystemParams params;
    Kernel kernel;
    int m_max;
    int w;
    std::vector<Complex> alpha_u, alpha_d, nl_u, nl_d, corr;
    std::vector<double> m_squared;

    FullSystem(const SystemParams& p, Kernel k)
        : params(p), kernel(k), m_max(p.truncation()), w(2 * m_max + 1),
          alpha_u(w), alpha_d(w), nl_u(w), nl_d(w), corr(2 * w - 1), m_squared(w) {
        for (int m = -m_max; m <= m_max; ++m)
            m_squared[static_cast<std::size_t>(m + m_max)] = double(m) * double(m);
    }

    void nonlinear(const Complex* a, Complex* nl) {
        if (kernel == Kernel::direct)
            nonlinear_direct(a, w, nl);
        else
            nonlinear_convolution(a, w, nl, corr.data());
    }

    // Raw equations of motion; y holds interleaved alpha, up block then down.
    void eval_raw(double, const std::vector<double>& y, std::vector<double>& dydt) {
        const auto* au = reinterpret_cast<const Complex*>(y.data());
        const auto* ad = au + w;
        auto* du = reinterpret_cast<Complex*>(dydt.data());
        auto* dd = du + w;
        nonlinear(au, nl_u.data());
        nonlinear(ad, nl_d.data());
        const double kap = params.kappa(), gam = params.gamma();
        const Complex mi(0.0, -1.0);
        for (int i = 0; i < w; ++i) {
            du[i] = mi * (m_squared[i] * au[i] - kap * ad[i] + gam * nl_u[i]);
            dd[i] = mi * (m_squared[i] * ad[i] - kap * au[i] + gam * nl_d[i]);
        }
    }

    // Kinetic-rotated frame: y holds beta_m = e^{i m^2 tau} alpha_m. The m^2
    // phases are applied analytically, so the stepper only resolves the
    // tunneling and interaction scales.
    void eval_rotated(double tau, const std::vector<double>& y,
                      std::vector<double>& dydt) {
        const auto* bu = reinterpret_cast<const Complex*>(y.data());
        const auto* bd = bu + w;
        auto* du = reinterpret_cast<Complex*>(dydt.data());
        auto* dd = du + w;
        for (int i = 0; i < w; ++i) {
            const Complex phase = std::polar(1.0, -m_squared[i] * tau);
            alpha_u[i] = phase * bu[i];
            alpha_d[i] = phase * bd[i];
        }
        nonlinear(alpha_u.data(), nl_u.data());
        nonlinear(alpha_d.data(), nl_d.data());
        const double kap = params.kappa(), gam = params.gamma();
        const Complex mi(0.0, -1.0);
        for (int i = 0; i < w; ++i) {
            const Complex gu = mi * (-kap * alpha_d[i] + gam * nl_u[i]);
            const Complex gd = mi * (-kap * alpha_u[i] + gam * nl_d[i]);
            const Complex back = std::polar(1.0, m_squared[i] * tau);
            du[i] = back * gu;
            dd[i] = back * gd;
        }
    }
};

std::vector<double> pack(const RingModeState& state) {
    const int w = state.n_modes();
    std::vector<double> y(static_cast<std::size_t>(4 * w));
    auto* cu = reinterpret_cast<Complex*>(y.data());
    std::copy(state.amplitudes(Ring::up).begin(), state.amplitudes(Ring::up).end(), cu);
    std::copy(state.amplitudes(Ring::down).begin(), state.amplitudes(Ring::down).end(),
              cu + w);
    return y;
}

void norm_and_momentum(const std::vector<double>& y, int m_max, double& norm,
                       double& momentum) {
    const int w = 2 * m_max + 1;
    const auto* cu = reinterpret_cast<const Complex*>(y.data());
    norm = 0.0;
    momentum = 0.0;
    for (int i = 0; i < w; ++i) {
        const double p = std::norm(cu[i]) + std::norm(cu[i + w]);
        norm += p;
        momentum += (i - m_max) * p;
    }
}

} // namespace

ModeDerivative rhs(const RingModeState& state, const SystemParams& params,
                   Kernel kernel) {
    if (state.truncation() != params.truncation())
        throw validation_error("state window does not match params.truncation");
    FullSystem sys(params, kernel);
    std::vector<double> y = pack(state);
    std::vector<double> dydt(y.size());
    sys.eval_raw(state.tau(), y, dydt);
    const auto* du = reinterpret_cast<const Complex*>(dydt.data());
    ModeDerivative d;
    d.up.assign(du, du + sys.w);
    d.down.assign(du + sys.w, du + 2 * sys.w);
    return d;
}

Trajectory integrate(const RingModeState& state, const SystemParams& params,
                     const IntegratorConfig& config) {
    if (state.truncation() != params.truncation())
        throw validation_error("state window does not match params.truncation");
    if (config.t_end <= 0.0 || config.sampling_stride <= 0.0)
        throw validation_error("t_end and sampling_stride must be > 0");
    if (config.method == Method::adaptive && !(config.rel_tol > 0.0))
        throw validation_error("rel_tol must be > 0");
    if (config.method == Method::fixed_rk4 && !(config.dt > 0.0))
        throw validation_error("dt must be > 0");

    const int m_max = params.truncation();
    const int w = 2 * m_max + 1;
    const bool rotated = config.method == Method::adaptive;

    FullSystem sys(params, config.kernel);
    std::vector<double> y = pack(state);

    double norm0 = 0.0, l0 = 0.0;
    norm_and_momentum(y, m_max, norm0, l0);

    Trajectory traj(m_max, config.sampling_stride);
    double max_norm_drift = 0.0, max_l_drift = 0.0;

    auto observer = [&](double tau, const std::vector<double>& yy) {
        double norm = 0.0, l = 0.0;
        norm_and_momentum(yy, m_max, norm, l);
        max_norm_drift = std::max(max_norm_drift, std::abs(norm - norm0) / norm0);
        max_l_drift = std::max(max_l_drift, std::abs(l - l0) / norm0);
        if (max_norm_drift > config.conservation_guard ||
            max_l_drift > config.conservation_guard)
            throw conservation_error(
                "conservation drift exceeded guard " +
                std::to_string(config.conservation_guard) + " at tau = " +
                std::to_string(tau));

        TrajectorySample s;
        s.tau = tau;
        s.populations_up.resize(static_cast<std::size_t>(w));
        s.populations_down.resize(static_cast<std::size_t>(w));
        const auto* cu = reinterpret_cast<const Complex*>(yy.data());
        for (int i = 0; i < w; ++i) {
            s.populations_up[static_cast<std::size_t>(i)] = std::norm(cu[i]);
            s.populations_down[static_cast<std::size_t>(i)] = std::norm(cu[i + w]);
        }
        s.norm_drift = max_norm_drift;
        s.angular_momentum_drift = max_l_drift;
        if (config.store_amplitudes) {
            s.amplitudes_up.resize(static_cast<std::size_t>(w));
            s.amplitudes_down.resize(static_cast<std::size_t>(w));
            for (int i = 0; i < w; ++i) {
                const Complex phase =
                    rotated ? std::polar(1.0, -sys.m_squared[i] * tau)
                            : Complex(1.0, 0.0);
                s.amplitudes_up[static_cast<std::size_t>(i)] = phase * cu[i];
                s.amplitudes_down[static_cast<std::size_t>(i)] = phase * cu[i + w];
            }
        }
        traj.append(std::move(s));
    };

    const double t0 = state.tau();
    auto n_samples = static_cast<std::size_t>(
        std::floor(config.t_end / config.sampling_stride + 1e-9));

    if (rotated) {
        ode::AdaptiveOptions opts;
        opts.rel_tol = config.rel_tol;
        opts.abs_tol = config.abs_tol;
        opts.initial_step = std::min(1e-4, config.sampling_stride);
        ode::integrate_sampled(
            [&sys](double t, const std::vector<double>& yy, std::vector<double>& dd) {
                sys.eval_rotated(t, yy, dd);
            },
            y, t0, config.sampling_stride, n_samples, observer, opts);
    } else {
        ode::integrate_sampled_rk4(
            [&sys](double t, const std::vector<double>& yy, std::vector<double>& dd) {
                sys.eval_raw(t, yy, dd);
            },
            y, t0, config.sampling_stride, n_samples, config.dt, observer);
    }
    return traj;
}

double Trajectory::population(std::size_t i, Ring r, int m) const {
    const auto& s = samples_.at(i);
    const auto idx = static_cast<std::size_t>(m + truncation_);
    return r == Ring::up ? s.populations_up.at(idx) : s.populations_down.at(idx);
}

double Trajectory::mode_total(std::size_t i, int m) const {
    return population(i, Ring::up, m) + population(i, Ring::down, m);
}

double Trajectory::imbalance(std::size_t i, int m, double n_total) const {
    return (population(i, Ring::up, m) - population(i, Ring::down, m)) / n_total;
}

double Trajectory::final_norm_drift() const {
    return samples_.empty() ? 0.0 : samples_.back().norm_drift;
}

double Trajectory::final_angular_momentum_drift() const {
    return samples_.empty() ? 0.0 : samples_.back().angular_momentum_drift;
}

double growth_rate_fit(const Trajectory& traj, int m, double window_begin,
                       double window_end) {
    if (window_end <= window_begin)
        throw validation_error("growth fit window is empty");
    std::vector<double> times, values;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double tau = traj[i].tau;
        if (tau < window_begin - 1e-12 || tau > window_end + 1e-12)
            continue;
        const double nm = traj.mode_total(i, m);
        if (!(nm > 0.0))
            throw validation_error("growth fit requires strictly positive N_m");
        times.push_back(tau);
        values.push_back(nm);
    }
    if (times.size() < 4)
        throw validation_error("growth fit window holds fewer than 4 samples");
    return ode::log_slope(times, values);
}

} // namespace ringoam::dynamics
