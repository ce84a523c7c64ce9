#pragma once

#include <vector>

#include "hydrolim/fourier.hpp"
#include "hydrolim/state.hpp"

namespace hydrolim {

/// One sampled row of a trajectory record.  Norms are stored unsquared;
/// accumulated integrals carry squared integrands as written in the energy
/// identities.
struct NormSample {
    double t = 0.0;

    double l2_v = 0.0, l2_theta = 0.0, l2_w = 0.0;
    double l4_v = 0.0, l4_theta = 0.0;
    double l2_dz_v = 0.0, l2_dz_theta = 0.0;
    double l2_grad_v = 0.0, l2_grad_theta = 0.0, l2_grad_w = 0.0;
    double l2_lap_v = 0.0, l2_lap_theta = 0.0;
    double umax = 0.0;
    double cfl = 0.0;

    double int_grad_v_sq = 0.0, int_grad_theta_sq = 0.0, int_grad_w_sq = 0.0;
    double int_theta_w = 0.0;       // accumulated int_Omega theta*w dt (signed)
    double int_theta_gradv = 0.0;   // accumulated ||theta||_2 ||grad v||_2 dt

    double budget_theta_res = 0.0;
    double budget_v_slack = 0.0;
    double budget_combined_res = 0.0;

    double div_res = 0.0;
    double parity_res = 0.0;
    double w_boundary_res = 0.0;
    double barotropic_res = 0.0;
    double hydrostatic_res = 0.0;  // primitive runs only; 0 otherwise
};

/// Norm evaluation engine.  L2-type norms come from coefficient sums; L4
/// norms use physical-space quadrature on a 2x zero-padded grid, which is
/// exact for 2/3-dealiased fields.  One instance per worker thread.
class NormEvaluator {
  public:
    explicit NormEvaluator(const Grid& grid);

    const Grid& grid() const { return base_.grid(); }
    FourierWorkspace& fft() { return base_; }

    double l4_norm(const SpectralField& f);

    /// Max pointwise |u| = sqrt(v1^2+v2^2+w^2) on the collocation grid.
    double velocity_max(const State& s);

    /// Fills the norm block of a sample row (integrals/budgets/monitors are
    /// the record keeper's job).
    NormSample norms(const State& s);

  private:
    FourierWorkspace base_;
    FourierWorkspace padded_;
    std::vector<double> scratch_a_, scratch_b_, scratch_c_;

    SpectralField zero_pad(const SpectralField& f) const;
};

/// Composite norms of the difference unknowns (V, eps W, Phi).
struct DifferenceNorms {
    double l2_sq = 0.0;       // ||V||^2 + eps^2 ||W||^2 + ||Phi||^2
    double grad_sq = 0.0;     // same composite of gradients
    double h1_sq = 0.0;       // l2_sq + grad_sq
    double grad_h1_sq = 0.0;  // grad_sq + composite of Laplacians
    double l2_V_sq = 0.0;     // unweighted per-component pieces
    double l2_W_sq = 0.0;
    double l2_Phi_sq = 0.0;
};

/// Exact spectral evaluation of the theorem composites; W enters weighted by
/// eps as printed.  States must share grid and time.
DifferenceNorms difference_norms(const State& bq, const State& pe, double eps);
DifferenceNorms difference_norms(const DifferenceState& d, double eps);

/// Empirical ratio lhs/(rhs without C) of the first Ladyzhenskaya-type
/// inequality:
///   int_M (int_-1^1 phi dz)(int_-1^1 psi chi dz) dA
///     <= C ||phi||^(1/2) (||phi||^(1/2)+||grad_h phi||^(1/2))
///        ||psi||^(1/2) (||psi||^(1/2)+||grad_h psi||^(1/2)) ||chi||_2.
/// Returns 0 when the lhs vanishes; raises on zero denominator otherwise.
/// Recorded only, never asserted against a fixed constant.
double ladyzhenskaya_ratio(const SpectralField& phi, const SpectralField& psi,
                           const SpectralField& chi);

}  // namespace hydrolim
