#pragma once

#include <iosfwd>
#include <vector>

#include "hydrolim/diagnostics.hpp"

namespace hydrolim {

enum class BudgetKind { Theta, V, CombinedEps };

/// Time series of norms and energy-budget terms sampled along a run.
///
/// Gradient-dissipation and source integrals are accumulated every step from
/// the half-sum state (th^n + th^{n+1})/2, which makes the Crank-Nicolson
/// diffusion part of each budget exact; the remaining residual is the
/// O(dt^2) error of the explicit advection stage.
class TrajectoryRecord {
  public:
    TrajectoryRecord(double eps, double dt) : eps_(eps), dt_(dt) {}

    double eps() const { return eps_; }
    double dt() const { return dt_; }

    /// Call once with the initial state's norms before stepping.
    void set_initial(const NormSample& row);

    /// Call after every step with both endpoint states.
    void accumulate_step(const State& before, const State& after);

    /// Appends a sample row (norm block prefilled); integrals, budget
    /// residuals and eps-weighting are filled in here.
    void add_sample(NormSample row);

    const std::vector<NormSample>& samples() const { return samples_; }
    bool empty() const { return samples_.empty(); }

    double initial_l2_v_sq() const { return l2_v0_sq_; }
    double initial_l2_theta_sq() const { return l2_theta0_sq_; }
    double initial_l2_w_sq() const { return l2_w0_sq_; }

    /// Residual (or slack, for BudgetKind::V) series over the samples.
    /// Requires uniform sampling.
    std::vector<double> budget_series(BudgetKind kind) const;

    /// CSV export with the documented header; full double precision.
    void write_csv(std::ostream& os) const;

    /// Sanity checks: strictly increasing times, nondecreasing accumulated
    /// squared-gradient integrals.  Throws on violation.
    void check_invariants() const;

  private:
    double eps_;
    double dt_;
    bool have_initial_ = false;
    double l2_v0_sq_ = 0.0, l2_theta0_sq_ = 0.0, l2_w0_sq_ = 0.0;

    double int_grad_v_sq_ = 0.0;
    double int_grad_theta_sq_ = 0.0;
    double int_grad_w_sq_ = 0.0;
    double int_theta_w_ = 0.0;
    double int_theta_gradv_ = 0.0;

    std::vector<NormSample> samples_;
};

/// Extracts a budget residual series from a record; see BudgetKind.
/// Errors on non-uniform sampling.
std::vector<double> energy_budget(const TrajectoryRecord& record, BudgetKind kind);

}  // namespace hydrolim
