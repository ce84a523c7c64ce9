#pragma once

#include "hydrolim/params.hpp"
#include "hydrolim/stepper_common.hpp"

namespace hydrolim {

/// Explicit (non-diffusive) tendencies of the scaled system:
///   N_v  = -(v . grad_h) v - w d_z v
///   N_w  = -(v . grad_h w + w d_z w) + theta/eps^2
///   N_th = -v . grad_h theta - w d_z theta
/// All products dealiased; parities (Even, Even, Odd, Odd).
struct Tendency {
    SpectralField n_v1;
    SpectralField n_v2;
    SpectralField n_w;
    SpectralField n_theta;
};

/// Time integrator for the scaled Boussinesq equations on the fixed domain:
///   d_t v - Lap v + (v.grad_h)v + w d_z v + grad_h p = 0
///   eps^2 (d_t w - Lap w + u.grad w) + d_z p - theta = 0
///   d_t th - Lap th + u.grad th = 0
///   div_h v + d_z w = 0.
class BoussinesqStepper {
  public:
    BoussinesqStepper(const Grid& grid, const PhysicalParams& params, double dt,
                      StepperOptions options = {}, Forcing forcing = {});

    const Grid& grid() const { return fft_.grid(); }
    const PhysicalParams& params() const { return params_; }
    double dt() const { return dt_; }
    Scheme scheme() const { return Scheme::ImexCnRk2; }

    /// Explicit tendency at the state's own time (forcing included).
    /// NaN/Inf in the state aborts with a blow-up diagnosis.
    Tendency explicit_tendency(const State& s);

    /// Replaces (N_v, N_w) by their divergence-consistent part and returns
    /// the pressure: solve (Lap_h + eps^-2 d_zz) p = div_h N_v + d_z N_w,
    /// then N_v -= grad_h p, N_w -= eps^-2 d_z p.  Idempotent.
    SpectralField pressure_project(Tendency& n) const;

    /// Advances one step of size dt.  CFL violations raise CflError with a
    /// suggested dt; blow-up raises BlowUpError with the norm history.
    State step(const State& s);

    const StepDiagnostics& last_diagnostics() const { return diag_; }

  private:
    PhysicalParams params_;
    double dt_;
    StepperOptions options_;
    Forcing forcing_;
    FourierWorkspace fft_;
    detail::NormHistory history_;
    StepDiagnostics diag_;

    Tendency tendency_at(const State& s, double t, double* umax_out);
    void check_health(const State& s, double umax);
};

}  // namespace hydrolim
