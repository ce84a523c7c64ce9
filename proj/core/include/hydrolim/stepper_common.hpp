#pragma once

#include <functional>
#include <optional>

#include "hydrolim/errors.hpp"
#include "hydrolim/fourier.hpp"
#include "hydrolim/state.hpp"

namespace hydrolim {

/// Time-discretization descriptor.  Only one scheme is provided: implicit
/// Crank-Nicolson on the (anisotropic) diffusion, explicit two-stage
/// second-order Runge-Kutta on advection, buoyancy and pressure.
enum class Scheme { ImexCnRk2 };

inline const char* scheme_name(Scheme) { return "imex-cn-rk2"; }

/// Optional forcing, evaluated at a given time; default zero.  Used for
/// manufactured-solution verification.  f_w enters the w-equation in its
/// eps^2-weighted form, i.e. the stepper adds f_w / eps^2 to the w-tendency.
struct ForcingFields {
    SpectralField f_v1;
    SpectralField f_v2;
    SpectralField f_w;
    SpectralField f_theta;
};
using Forcing = std::function<ForcingFields(double t)>;

/// Per-step monitors, measured before the end-of-step parity/divergence
/// cleanup so they report the scheme's own drift.
struct StepDiagnostics {
    double cfl = 0.0;
    double umax = 0.0;
    double divergence_residual = 0.0;  // ||div_h v + d_z w||_2 before cleanup
    double parity_drift = 0.0;         // worst parity residual before cleanup
};

/// Shared knobs for both steppers.
struct StepperOptions {
    double cfl_limit = 0.5;
    double blowup_threshold = 1e6;  // on max pointwise |u|
};

namespace detail {

/// One Crank-Nicolson update per mode: out = ((1 - h K/2) in + h rhs) / (1 + h K/2),
/// with anisotropic diffusion symbol K = mu_h kh^2 + mu_z_fixed (pi m)^2.
void cn_update(const SpectralField& in, const SpectralField& rhs, double h, double mu_h,
               double mu_z_fixed, SpectralField& out);

/// Ring buffer of recent norm history for blow-up reports.
class NormHistory {
  public:
    void push(double t, double umax, double l2);
    std::vector<BlowUpSample> snapshot() const;

  private:
    std::vector<BlowUpSample> ring_;
    std::size_t next_ = 0;
    static constexpr std::size_t kCap = 16;
};

}  // namespace detail

}  // namespace hydrolim
