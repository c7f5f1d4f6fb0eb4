#include "ringoam/params.hpp"

#include <cmath>
#include <string>

namespace ringoam {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw validation_error(std::string(name) + " must be finite");
}

} // namespace

SystemParams::SystemParams(double kappa, double gamma, double n_total, int truncation)
    : kappa_(kappa), gamma_(gamma), n_total_(n_total), truncation_(truncation) {
    require_finite(kappa, "kappa");
    require_finite(gamma, "gamma");
    require_finite(n_total, "n_total");
    if (kappa < 0.0)
        throw validation_error("kappa must be >= 0 (repulsive, scaled units)");
    if (gamma < 0.0)
        throw validation_error("gamma must be >= 0 (repulsive interactions only)");
    if (n_total <= 0.0)
        throw validation_error("n_total must be > 0");
    if (truncation < 1)
        throw validation_error("truncation must be >= 1");
}

double SystemParams::lambda() const {
    if (kappa_ <= 0.0)
        throw validation_error("lambda = epsilon/kappa is undefined for kappa = 0");
    return epsilon() / kappa_;
}

SystemParams make_params(double kappa, double gamma, double n_total, int truncation) {
    return SystemParams(kappa, gamma, n_total, truncation);
}

} // namespace ringoam
