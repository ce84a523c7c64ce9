#pragma once

#include "hydrolim/errors.hpp"

namespace hydrolim {

/// Aspect ratio and the viscosity/diffusivity coefficients of the anisotropic
/// system on the thin domain.  On the fixed domain the vertical coefficients
/// enter divided by eps^2, so the scaled regime yields the unit Laplacian.
struct PhysicalParams {
    double eps;
    double mu_h;
    double mu_z;
    double kappa_h;
    double kappa_z;

    PhysicalParams(double eps_, double mu_h_, double mu_z_, double kappa_h_, double kappa_z_)
        : eps(eps_), mu_h(mu_h_), mu_z(mu_z_), kappa_h(kappa_h_), kappa_z(kappa_z_) {
        if (eps <= 0.0) throw ParameterError("PhysicalParams: eps must be positive");
        if (eps > 1.0) throw ParameterError("PhysicalParams: eps must lie in (0,1]");
        if (mu_h < 0 || mu_z < 0 || kappa_h < 0 || kappa_z < 0)
            throw ParameterError("PhysicalParams: coefficients must be nonnegative");
    }

    /// Scaled regime: mu_h = kappa_h = 1, mu_z = kappa_z = eps^2.
    static PhysicalParams scaled(double eps) {
        return PhysicalParams(eps, 1.0, eps * eps, 1.0, eps * eps);
    }

    /// Effective coefficients of the system transplanted to the fixed domain.
    double mu_z_fixed() const { return mu_z / (eps * eps); }
    double kappa_z_fixed() const { return kappa_z / (eps * eps); }
};

}  // namespace hydrolim
