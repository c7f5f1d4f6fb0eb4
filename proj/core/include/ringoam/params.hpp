#pragma once

#include "ringoam/errors.hpp"

namespace ringoam {

// Physical and numerical parameters of the two-ring system, in the scaled
// units of the coupled-mode equations: kappa is the inter-ring tunneling
// rate, gamma the per-particle interaction parameter, n_total the total
// particle number N (continuous mean-field normalization), truncation the
// largest retained |m|.
//
// epsilon = gamma*N/2 and lambda = epsilon/kappa are derived on demand and
// never stored.
class SystemParams {
public:
    SystemParams(double kappa, double gamma, double n_total, int truncation);

    double kappa() const { return kappa_; }
    double gamma() const { return gamma_; }
    double n_total() const { return n_total_; }
    int truncation() const { return truncation_; }

    double epsilon() const { return 0.5 * gamma_ * n_total_; }

    // Interaction-to-tunneling ratio; defined only for kappa > 0.
    double lambda() const;

private:
    double kappa_;
    double gamma_;
    double n_total_;
    int truncation_;
};

SystemParams make_params(double kappa, double gamma, double n_total, int truncation);

} // namespace ringoam
