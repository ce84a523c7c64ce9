#include "hydrolim/record.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace hydrolim {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

void TrajectoryRecord::set_initial(const NormSample& row) {
    l2_v0_sq_ = row.l2_v * row.l2_v;
    l2_theta0_sq_ = row.l2_theta * row.l2_theta;
    l2_w0_sq_ = row.l2_w * row.l2_w;
    have_initial_ = true;
}

void TrajectoryRecord::accumulate_step(const State& before, const State& after) {
    const double h = after.time - before.time;

    auto mid = [](const SpectralField& a, const SpectralField& b) {
        SpectralField m = a;
        m += b;
        m *= 0.5;
        return m;
    };
    const SpectralField v1m = mid(before.v1, after.v1);
    const SpectralField v2m = mid(before.v2, after.v2);
    const SpectralField wm = mid(before.w, after.w);
    const SpectralField thm = mid(before.theta, after.theta);

    const double grad_v_sq = grad_norm_sq(v1m) + grad_norm_sq(v2m);
    const double grad_th_sq = grad_norm_sq(thm);

    int_grad_v_sq_ += h * grad_v_sq;
    int_grad_theta_sq_ += h * grad_th_sq;
    int_grad_w_sq_ += h * grad_norm_sq(wm);
    int_theta_w_ += h * inner_product(thm, wm);
    int_theta_gradv_ += h * thm.l2_norm() * std::sqrt(grad_v_sq);
}

void TrajectoryRecord::add_sample(NormSample row) {
    row.int_grad_v_sq = int_grad_v_sq_;
    row.int_grad_theta_sq = int_grad_theta_sq_;
    row.int_grad_w_sq = int_grad_w_sq_;
    row.int_theta_w = int_theta_w_;
    row.int_theta_gradv = int_theta_gradv_;

    if (!have_initial_) set_initial(row);

    const double e2 = eps_ * eps_;
    const double l2v_sq = row.l2_v * row.l2_v;
    const double l2th_sq = row.l2_theta * row.l2_theta;
    const double l2w_sq = row.l2_w * row.l2_w;

    row.budget_theta_res = l2th_sq + 2.0 * int_grad_theta_sq_ - l2_theta0_sq_;
    row.budget_v_slack = 4.0 * kSqrt2 * int_theta_gradv_ -
                         (l2v_sq - l2_v0_sq_ + 2.0 * int_grad_v_sq_);
    const double energy = l2v_sq + e2 * l2w_sq + l2th_sq;
    const double energy0 = l2_v0_sq_ + e2 * l2_w0_sq_ + l2_theta0_sq_;
    const double dissip = int_grad_v_sq_ + e2 * int_grad_w_sq_ + int_grad_theta_sq_;
    row.budget_combined_res = energy + 2.0 * dissip - energy0 - 2.0 * int_theta_w_;

    samples_.push_back(row);
}

std::vector<double> TrajectoryRecord::budget_series(BudgetKind kind) const {
    if (samples_.size() >= 3) {
        const double h = samples_[1].t - samples_[0].t;
        for (std::size_t i = 2; i < samples_.size(); ++i) {
            const double hi = samples_[i].t - samples_[i - 1].t;
            if (std::abs(hi - h) > 1e-9 * std::max(std::abs(h), 1e-30))
                throw ParameterError("budget_series: non-uniform sampling");
        }
    }
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) {
        switch (kind) {
            case BudgetKind::Theta: out.push_back(s.budget_theta_res); break;
            case BudgetKind::V: out.push_back(s.budget_v_slack); break;
            case BudgetKind::CombinedEps: out.push_back(s.budget_combined_res); break;
        }
    }
    return out;
}

void TrajectoryRecord::check_invariants() const {
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        if (!(samples_[i].t > samples_[i - 1].t))
            throw ParameterError("TrajectoryRecord: sample times not strictly increasing");
        if (samples_[i].int_grad_v_sq < samples_[i - 1].int_grad_v_sq ||
            samples_[i].int_grad_theta_sq < samples_[i - 1].int_grad_theta_sq ||
            samples_[i].int_grad_w_sq < samples_[i - 1].int_grad_w_sq)
            throw ParameterError("TrajectoryRecord: accumulated integral decreased");
    }
}

void TrajectoryRecord::write_csv(std::ostream& os) const {
    os << "t,l2_v,l2_theta,l2_w,l4_v,l4_theta,l2_dz_v,l2_dz_theta,l2_grad_v,l2_grad_theta,"
          "l2_grad_w,l2_lap_v,l2_lap_theta,umax,cfl,int_grad_v_sq,int_grad_theta_sq,"
          "int_grad_w_sq,int_theta_w,int_theta_gradv,budget_theta_res,budget_v_slack,"
          "budget_combined_res,div_res,parity_res,w_boundary_res,barotropic_res,"
          "hydrostatic_res\n";
    char buf[640];
    for (const auto& s : samples_) {
        std::snprintf(
            buf, sizeof(buf),
            "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
            "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
            "%.17g,%.17g\n",
            s.t, s.l2_v, s.l2_theta, s.l2_w, s.l4_v, s.l4_theta, s.l2_dz_v, s.l2_dz_theta,
            s.l2_grad_v, s.l2_grad_theta, s.l2_grad_w, s.l2_lap_v, s.l2_lap_theta, s.umax,
            s.cfl, s.int_grad_v_sq, s.int_grad_theta_sq, s.int_grad_w_sq, s.int_theta_w,
            s.int_theta_gradv, s.budget_theta_res, s.budget_v_slack, s.budget_combined_res,
            s.div_res, s.parity_res, s.w_boundary_res, s.barotropic_res, s.hydrostatic_res);
        os << buf;
    }
}

std::vector<double> energy_budget(const TrajectoryRecord& record, BudgetKind kind) {
    return record.budget_series(kind);
}

}  // namespace hydrolim
