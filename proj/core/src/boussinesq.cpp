#include "hydrolim/boussinesq.hpp"

#include <cmath>
#include <sstream>

namespace hydrolim {

BoussinesqStepper::BoussinesqStepper(const Grid& grid, const PhysicalParams& params, double dt,
                                     StepperOptions options, Forcing forcing)
    : params_(params),
      dt_(dt),
      options_(options),
      forcing_(std::move(forcing)),
      fft_(grid) {
    if (dt <= 0.0) throw ParameterError("BoussinesqStepper: dt must be positive");
}

void BoussinesqStepper::check_health(const State& s, double umax) {
    if (s.has_nan() || !std::isfinite(umax)) {
        throw BlowUpError("boussinesq: NaN/Inf detected, solution blew up", s.time,
                          history_.snapshot());
    }
    if (umax > options_.blowup_threshold) {
        std::ostringstream msg;
        msg << "boussinesq: max |u| = " << umax << " exceeds blow-up threshold "
            << options_.blowup_threshold;
        throw BlowUpError(msg.str(), s.time, history_.snapshot());
    }
}

Tendency BoussinesqStepper::tendency_at(const State& s, double t, double* umax_out) {
    const Grid& g = grid();
    static thread_local std::vector<double> v1p, v2p, wp, gx, gy, gz, prod;

    fft_.to_physical(s.v1, v1p);
    fft_.to_physical(s.v2, v2p);
    fft_.to_physical(s.w, wp);
    if (umax_out) {
        double m = 0.0;
        for (std::size_t i = 0; i < v1p.size(); ++i) {
            const double u2 = v1p[i] * v1p[i] + v2p[i] * v2p[i] + wp[i] * wp[i];
            m = std::max(m, u2);
        }
        *umax_out = std::sqrt(m);
    }

    auto advect = [&](const SpectralField& f) {
        fft_.to_physical(derivative(f, Axis::X), gx);
        fft_.to_physical(derivative(f, Axis::Y), gy);
        fft_.to_physical(derivative(f, Axis::Z), gz);
        prod.resize(g.size());
        for (std::size_t i = 0; i < prod.size(); ++i)
            prod[i] = -(v1p[i] * gx[i] + v2p[i] * gy[i] + wp[i] * gz[i]);
        SpectralField n = fft_.to_spectral(prod);
        dealias_inplace(n);
        return n;
    };

    Tendency n{advect(s.v1), advect(s.v2), advect(s.w), advect(s.theta)};

    // Buoyancy enters the w-tendency as theta/eps^2; the stiff hydrostatic
    // part cancels against eps^-2 d_z p in the projection.
    const double inv_eps2 = 1.0 / (params_.eps * params_.eps);
    n.n_w.axpy(inv_eps2, s.theta);

    if (forcing_) {
        ForcingFields f = forcing_(t);
        n.n_v1 += f.f_v1;
        n.n_v2 += f.f_v2;
        n.n_w.axpy(inv_eps2, f.f_w);
        n.n_theta += f.f_theta;
    }

    n.n_v1 = enforce_parity(n.n_v1, Parity::Even);
    n.n_v2 = enforce_parity(n.n_v2, Parity::Even);
    n.n_w = enforce_parity(n.n_w, Parity::Odd);
    n.n_theta = enforce_parity(n.n_theta, Parity::Odd);
    return n;
}

Tendency BoussinesqStepper::explicit_tendency(const State& s) {
    double umax = 0.0;
    Tendency n = tendency_at(s, s.time, &umax);
    check_health(s, umax);
    return n;
}

SpectralField BoussinesqStepper::pressure_project(Tendency& n) const {
    SpectralField rhs = derivative(n.n_v1, Axis::X);
    rhs += derivative(n.n_v2, Axis::Y);
    rhs += derivative(n.n_w, Axis::Z);
    SpectralField p = poisson_aniso(rhs, params_.eps);
    const double inv_eps2 = 1.0 / (params_.eps * params_.eps);
    n.n_v1 -= derivative(p, Axis::X);
    n.n_v2 -= derivative(p, Axis::Y);
    n.n_w.axpy(-inv_eps2, derivative(p, Axis::Z));
    return p;
}

State BoussinesqStepper::step(const State& s) {
    const double h = dt_;
    const double kmax = grid().max_wavenumber();

    double umax = 0.0;
    Tendency n1 = tendency_at(s, s.time, &umax);
    check_health(s, umax);
    diag_.umax = umax;
    diag_.cfl = umax * h * kmax;
    if (diag_.cfl > options_.cfl_limit) {
        std::ostringstream msg;
        msg << "boussinesq: advective CFL " << diag_.cfl << " exceeds limit "
            << options_.cfl_limit << " at t = " << s.time << "; suggested dt <= "
            << options_.cfl_limit / (umax * kmax);
        throw CflError(msg.str(), options_.cfl_limit / (umax * kmax));
    }
    pressure_project(n1);

    const double mu_h = params_.mu_h, mu_z = params_.mu_z_fixed();
    const double ka_h = params_.kappa_h, ka_z = params_.kappa_z_fixed();

    State mid(grid());
    detail::cn_update(s.v1, n1.n_v1, h, mu_h, mu_z, mid.v1);
    detail::cn_update(s.v2, n1.n_v2, h, mu_h, mu_z, mid.v2);
    detail::cn_update(s.w, n1.n_w, h, mu_h, mu_z, mid.w);
    detail::cn_update(s.theta, n1.n_theta, h, ka_h, ka_z, mid.theta);
    mid.time = s.time + h;

    double umax_mid = 0.0;
    Tendency n2 = tendency_at(mid, mid.time, &umax_mid);
    check_health(mid, umax_mid);
    pressure_project(n2);

    auto average = [](Tendency& a, const Tendency& b) {
        a.n_v1 += b.n_v1;
        a.n_v2 += b.n_v2;
        a.n_w += b.n_w;
        a.n_theta += b.n_theta;
        a.n_v1 *= 0.5;
        a.n_v2 *= 0.5;
        a.n_w *= 0.5;
        a.n_theta *= 0.5;
    };
    average(n1, n2);

    State out(grid());
    detail::cn_update(s.v1, n1.n_v1, h, mu_h, mu_z, out.v1);
    detail::cn_update(s.v2, n1.n_v2, h, mu_h, mu_z, out.v2);
    detail::cn_update(s.w, n1.n_w, h, mu_h, mu_z, out.w);
    detail::cn_update(s.theta, n1.n_theta, h, ka_h, ka_z, out.theta);
    out.time = s.time + h;
    check_health(out, 0.0);

    diag_.divergence_residual = out.divergence_residual();
    diag_.parity_drift = out.parity_residual_max();

    // End-of-step cleanup: scrub roundoff parity/divergence drift.
    out.v1 = enforce_parity(out.v1, Parity::Even);
    out.v2 = enforce_parity(out.v2, Parity::Even);
    out.w = enforce_parity(out.w, Parity::Odd);
    out.theta = enforce_parity(out.theta, Parity::Odd);
    {
        SpectralField div = derivative(out.v1, Axis::X);
        div += derivative(out.v2, Axis::Y);
        div += derivative(out.w, Axis::Z);
        SpectralField q = poisson_aniso(div, params_.eps);
        out.v1 -= derivative(q, Axis::X);
        out.v2 -= derivative(q, Axis::Y);
        out.w.axpy(-1.0 / (params_.eps * params_.eps), derivative(q, Axis::Z));
        out.w.set_parity(Parity::Odd);
        out.v1.set_parity(Parity::Even);
        out.v2.set_parity(Parity::Even);
    }

    history_.push(out.time, std::max(umax, umax_mid),
                  std::sqrt(out.v1.l2_norm_sq() + out.v2.l2_norm_sq()));
    return out;
}

}  // namespace hydrolim
