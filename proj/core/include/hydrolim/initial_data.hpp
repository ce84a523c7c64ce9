#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hydrolim/fourier.hpp"
#include "hydrolim/state.hpp"

namespace hydrolim {

/// Hypotheses of the convergence theorems checked on initial data.
enum class Hypothesis { VParity, ThetaParity, Barotropic, MeanZeroV, MeanZeroTheta };

const char* hypothesis_name(Hypothesis h);

struct Violation {
    Hypothesis hypothesis;
    double residual;   // relative to the field scale
    double tolerance;
    std::vector<std::pair<int, int>> offending_modes;  // horizontal modes, when meaningful
    std::string message;
};

/// Exhaustive validation result: every failed hypothesis is reported, not
/// just the first.
struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct ValidationOptions {
    double tolerance = 1e-10;
    bool require_mean_zero = true;  // theorems assume it; relaxable per config
};

/// Checks (a) v0 even / theta0 odd in z, (b) the barotropic constraint
/// int_{-1}^{1} div_h v0 dz = 0 per horizontal mode, (c) mean-zero over
/// Omega.  Residuals are relative to the field scale.
ValidationReport validate_initial_data(const SpectralField& v1, const SpectralField& v2,
                                       const SpectralField& theta,
                                       const ValidationOptions& opts = {});

/// w(z) = -int_{-1}^{z} div_h v dxi; odd, with w(+-1) = 0.  Raises
/// PeriodicityError if v violates the barotropic constraint.
SpectralField diagnose_w(const SpectralField& v1, const SpectralField& v2);

/// Builds a State from validated (v1, v2, theta): w is diagnosed, parities
/// projected, fields dealiased.
State assemble_state(const SpectralField& v1, const SpectralField& v2,
                     const SpectralField& theta, double time = 0.0);

/// Unknowns of one system as a plain tuple; used by the eps-rescaling maps,
/// which act on raw fields rather than invariant-checked states.
struct FieldBundle {
    SpectralField v1;
    SpectralField v2;
    SpectralField w;
    SpectralField p;
    SpectralField theta;
};

/// Coordinate dilation z -> eps z plus amplitude scalings
///   v_eps = v, w_eps = w/eps, p_eps = p, theta_eps = eps theta
/// in coefficient space (vertical mode m on period 2eps maps to mode m on
/// period 2).  rescale_to_thin is the exact inverse.
FieldBundle rescale_to_fixed(const FieldBundle& thin, double eps);
FieldBundle rescale_to_thin(const FieldBundle& fixed, double eps);

/// Samples a closed-form function on the grid and transforms; exact for
/// band-limited profiles.
SpectralField sample_field(FourierWorkspace& fft,
                           const std::function<double(double, double, double)>& fn,
                           Parity parity = Parity::None);

/// Initial unknowns prior to validation/assembly.
struct InitialData {
    SpectralField v1;
    SpectralField v2;
    SpectralField theta;
};

/// Built-in analytic profiles:
///   zero            all fields zero
///   acceptance      v = A(sin x cos pi z, -sin y cos pi z), th = B sin x sin pi z
///   theta_profile   v = 0, th = B sin(pi z)  (x,y-independent)
///   barotropic_bad  v = (A sin x, 0) z-independent, th = B sin x sin pi z
///   constant_v      v = (A, 0), th = 0
///   parity_bad      v = (A sin x sin pi z, 0), th = B sin x cos pi z
std::vector<std::string> profile_names();
InitialData make_profile(const std::string& name, FourierWorkspace& fft, double amplitude_v,
                         double amplitude_theta);

}  // namespace hydrolim
