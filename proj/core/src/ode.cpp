#include "ringoam/ode.hpp"

#include <cmath>

namespace ringoam::ode {

namespace {

// Dormand-Prince 5(4), 7 stages, FSAL.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b (5th order) minus the embedded 4th-order weights
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kMinShrink = 0.2;
constexpr double kMaxGrow = 5.0;
constexpr int kMaxRejects = 64;

} // namespace

bool Dopri5::step(double& t, std::vector<double>& y, double h, double& h_next) {
    const std::size_t n = y.size();
    auto& k = k_;

    if (!have_first_stage_) {
        rhs_(t, y, k[0]);
        have_first_stage_ = true;
    }

    for (std::size_t i = 0; i < n; ++i)
        y_tmp_[i] = y[i] + h * a21 * k[0][i];
    rhs_(t + c2 * h, y_tmp_, k[1]);

    for (std::size_t i = 0; i < n; ++i)
        y_tmp_[i] = y[i] + h * (a31 * k[0][i] + a32 * k[1][i]);
    rhs_(t + c3 * h, y_tmp_, k[2]);

    for (std::size_t i = 0; i < n; ++i)
        y_tmp_[i] = y[i] + h * (a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]);
    rhs_(t + c4 * h, y_tmp_, k[3]);

    for (std::size_t i = 0; i < n; ++i)
        y_tmp_[i] = y[i] + h * (a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] +
                                a54 * k[3][i]);
    rhs_(t + c5 * h, y_tmp_, k[4]);

    for (std::size_t i = 0; i < n; ++i)
        y_tmp_[i] = y[i] + h * (a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] +
                                a64 * k[3][i] + a65 * k[4][i]);
    rhs_(t + h, y_tmp_, k[5]);

    // 5th-order solution (also stage 7 position for FSAL)
    for (std::size_t i = 0; i < n; ++i)
        y_tmp_[i] = y[i] + h * (b1 * k[0][i] + b3 * k[2][i] + b4 * k[3][i] +
                                b5 * k[4][i] + b6 * k[5][i]);
    rhs_(t + h, y_tmp_, k[6]);

    for (std::size_t i = 0; i < n; ++i)
        y_err_[i] = h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] +
                         e6 * k[5][i] + e7 * k[6][i]);

    const double err = detail::error_norm(y_err_, y, y_tmp_, opts_.abs_tol, opts_.rel_tol);

    double factor;
    if (err <= 0.0)
        factor = kMaxGrow;
    else
        factor = std::clamp(kSafety * std::pow(err, -0.2), kMinShrink, kMaxGrow);
    h_next = h * factor;

    if (err <= 1.0) {
        t += h;
        y.swap(y_tmp_);
        k[0].swap(k[6]); // FSAL
        return true;
    }
    have_first_stage_ = true; // k[0] still holds f(t, y)
    return false;
}

void Dopri5::advance(double& t, std::vector<double>& y, double t_end,
                     const StepGuard& guard) {
    if (h_ <= 0.0)
        h_ = opts_.initial_step;
    while (t < t_end) {
        double h = std::min({h_, opts_.max_step, t_end - t});
        int rejects = 0;
        for (;;) {
            double h_next = h;
            if (step(t, y, h, h_next)) {
                // keep the controller's suggestion, but never below the
                // clamped step we just took unless it was rejected before
                h_ = std::min(h_next, opts_.max_step);
                break;
            }
            if (++rejects > kMaxRejects)
                throw integration_error("adaptive step size underflow");
            h = h_next;
            if (!(h > 0.0) || t + h == t)
                throw integration_error("adaptive step size underflow");
        }
        if (guard)
            guard(t, y);
    }
}

void integrate_sampled(Rhs rhs, std::vector<double>& y, double t0, double stride,
                       std::size_t n_samples, const SampleObserver& observer,
                       const AdaptiveOptions& opts, const StepGuard& guard) {
    if (stride <= 0.0)
        throw validation_error("sampling stride must be > 0");
    Dopri5 stepper(std::move(rhs), y.size(), opts);
    double t = t0;
    observer(t, y);
    for (std::size_t s = 1; s <= n_samples; ++s) {
        const double t_target = t0 + static_cast<double>(s) * stride;
        stepper.advance(t, y, t_target, guard);
        t = t_target; // advance() stops exactly at the clamp within roundoff
        observer(t, y);
    }
}

void integrate_sampled_rk4(Rhs rhs, std::vector<double>& y, double t0, double stride,
                           std::size_t n_samples, double dt,
                           const SampleObserver& observer, const StepGuard& guard) {
    if (stride <= 0.0 || dt <= 0.0)
        throw validation_error("sampling stride and dt must be > 0");
    const std::size_t n = y.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    const auto steps_per_stride =
        static_cast<std::size_t>(std::ceil(stride / dt - 1e-12));
    const double h = stride / static_cast<double>(steps_per_stride);

    double t = t0;
    observer(t, y);
    for (std::size_t s = 1; s <= n_samples; ++s) {
        for (std::size_t q = 0; q < steps_per_stride; ++q) {
            rhs(t, y, k1);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
            rhs(t + 0.5 * h, tmp, k2);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
            rhs(t + 0.5 * h, tmp, k3);
            for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
            rhs(t + h, tmp, k4);
            for (std::size_t i = 0; i < n; ++i)
                y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            t += h;
            if (guard)
                guard(t, y);
        }
        t = t0 + static_cast<double>(s) * stride;
        observer(t, y);
    }
}

double log_slope(const std::vector<double>& times, const std::vector<double>& values) {
    if (times.size() != values.size() || times.size() < 2)
        throw validation_error("log_slope needs matching series with >= 2 points");
    const auto n = static_cast<double>(times.size());
    double st = 0.0, sv = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(values[i] > 0.0))
            throw validation_error("log_slope requires strictly positive values");
        st += times[i];
        sv += std::log(values[i]);
    }
    const double mt = st / n, mv = sv / n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double dt = times[i] - mt;
        num += dt * (std::log(values[i]) - mv);
        den += dt * dt;
    }
    if (den == 0.0)
        throw validation_error("log_slope window has zero time spread");
    return num / den;
}

} // namespace ringoam::ode
