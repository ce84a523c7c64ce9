#include "hydrolim/primitive.hpp"

#include <cmath>
#include <sstream>

namespace hydrolim {

SpectralField hydrostatic_pressure(const SpectralField& theta, const SpectralField2D& p_nu) {
    require_same_grid(theta.grid(), p_nu.grid(), "hydrostatic_pressure");
    const double res = parity_residual(theta, Parity::Odd);
    if (res > 1e-10 * std::max(theta.l2_norm(), 1.0))
        throw ParameterError("hydrostatic_pressure: theta is not odd in z");
    SpectralField p = vertical_antiderivative(theta, ZAnchor::Zero);
    const Grid& g = p.grid();
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy) p(ix, iy, 0) += p_nu(ix, iy);
    p.set_parity(Parity::Even);
    return p;
}

SpectralField2D surface_pressure(FourierWorkspace& fft, const SpectralField& v1,
                                 const SpectralField& v2, const SpectralField& theta) {
    const Grid& g = v1.grid();
    std::vector<double> a, b, prod(g.size());
    fft.to_physical(v1, a);
    fft.to_physical(v2, b);
    auto product = [&](const std::vector<double>& f, const std::vector<double>& h) {
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = f[i] * h[i];
        SpectralField p = fft.to_spectral(prod);
        dealias_inplace(p);
        return p;
    };
    const SpectralField v11 = product(a, a);
    const SpectralField v12 = product(a, b);
    const SpectralField v22 = product(b, b);

    // div_h (div_h (v (x) v))
    SpectralField d1 = derivative(v11, Axis::X);
    d1 += derivative(v12, Axis::Y);
    SpectralField d2 = derivative(v12, Axis::X);
    d2 += derivative(v22, Axis::Y);
    SpectralField rhs3d = derivative(d1, Axis::X);
    rhs3d += derivative(d2, Axis::Y);

    // Lap_h int_0^z theta
    const SpectralField big_theta = vertical_antiderivative(theta, ZAnchor::Zero);
    rhs3d += derivative(derivative(big_theta, Axis::X), Axis::X);
    rhs3d += derivative(derivative(big_theta, Axis::Y), Axis::Y);

    // (1/2) int_-1^1 ... dz is the z-mean, i.e. the m = 0 coefficient slab.
    return poisson_horizontal(z_mean(rhs3d));
}

SpectralField2D surface_pressure_via_projection(FourierWorkspace& fft, const State& s) {
    const Grid& g = s.grid();
    std::vector<double> v1p, v2p, wp, gx, gy, gz, prod(g.size());
    fft.to_physical(s.v1, v1p);
    fft.to_physical(s.v2, v2p);
    fft.to_physical(s.w, wp);

    auto advect = [&](const SpectralField& f) {
        fft.to_physical(derivative(f, Axis::X), gx);
        fft.to_physical(derivative(f, Axis::Y), gy);
        fft.to_physical(derivative(f, Axis::Z), gz);
        for (std::size_t i = 0; i < prod.size(); ++i)
            prod[i] = -(v1p[i] * gx[i] + v2p[i] * gy[i] + wp[i] * gz[i]);
        SpectralField n = fft.to_spectral(prod);
        dealias_inplace(n);
        return n;
    };

    SpectralField n1 = advect(s.v1);
    SpectralField n2 = advect(s.v2);
    const SpectralField big_theta = vertical_antiderivative(s.theta, ZAnchor::Zero);
    n1 -= derivative(big_theta, Axis::X);
    n2 -= derivative(big_theta, Axis::Y);

    // p_nu makes the z-averaged tendency divergence-free:
    //   Lap_h p_nu = div_h zbar(N_v)  =>  -Lap_h p_nu = -div_h zbar(N_v).
    SpectralField2D rhs = z_mean(derivative(n1, Axis::X) + derivative(n2, Axis::Y));
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs.data()[i] = -rhs.data()[i];
    return poisson_horizontal(rhs);
}

PrimitiveStepper::PrimitiveStepper(const Grid& grid, double dt, StepperOptions options,
                                   Forcing forcing)
    : dt_(dt), options_(options), forcing_(std::move(forcing)), fft_(grid) {
    if (dt <= 0.0) throw ParameterError("PrimitiveStepper: dt must be positive");
}

void PrimitiveStepper::check_health(const State& s, double umax) {
    if (s.has_nan() || !std::isfinite(umax) || umax > options_.blowup_threshold) {
        std::ostringstream msg;
        msg << "primitive: blow-up detected at t = " << s.time
            << " (max |u| = " << umax
            << "); the primitive equations are globally regular, so this indicates a "
               "numerical fault (dt too large or corrupted state), not a physical blow-up";
        throw BlowUpError(msg.str(), s.time, history_.snapshot());
    }
}

PrimitiveStepper::VTendency PrimitiveStepper::tendency_at(const State& s, double t,
                                                          double* umax_out) {
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

    VTendency n{advect(s.v1), advect(s.v2), advect(s.theta)};

    // Baroclinic gradient grad_h int_0^z theta.
    const SpectralField big_theta = vertical_antiderivative(s.theta, ZAnchor::Zero);
    n.n_v1 -= derivative(big_theta, Axis::X);
    n.n_v2 -= derivative(big_theta, Axis::Y);

    if (forcing_) {
        ForcingFields f = forcing_(t);
        n.n_v1 += f.f_v1;
        n.n_v2 += f.f_v2;
        n.n_theta += f.f_theta;
    }

    // Surface-pressure projection: remove the divergent part of the
    // z-averaged tendency so the barotropic constraint is preserved.
    {
        SpectralField2D rhs = z_mean(derivative(n.n_v1, Axis::X) + derivative(n.n_v2, Axis::Y));
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs.data()[i] = -rhs.data()[i];
        const SpectralField2D p_nu = poisson_horizontal(rhs);
        const Grid& gg = grid();
        for (int ix = 0; ix < gg.nx(); ++ix)
            for (int iy = 0; iy < gg.ny(); ++iy) {
                const Complex ikx{0.0, static_cast<double>(gg.kx(ix))};
                const Complex iky{0.0, static_cast<double>(gg.ky(iy))};
                n.n_v1(ix, iy, 0) -= ikx * p_nu(ix, iy);
                n.n_v2(ix, iy, 0) -= iky * p_nu(ix, iy);
            }
    }

    n.n_v1 = enforce_parity(n.n_v1, Parity::Even);
    n.n_v2 = enforce_parity(n.n_v2, Parity::Even);
    n.n_theta = enforce_parity(n.n_theta, Parity::Odd);
    return n;
}

double PrimitiveStepper::hydrostatic_residual(const State& s) {
    const SpectralField2D p_nu = surface_pressure_via_projection(fft_, s);
    const SpectralField p = hydrostatic_pressure(s.theta, p_nu);
    SpectralField r = derivative(p, Axis::Z);
    r -= s.theta;
    return r.max_abs_coeff();
}

State PrimitiveStepper::step(const State& s) {
    const double h = dt_;
    const double kmax = grid().max_wavenumber();

    // w must already be the diagnostic one.
    {
        SpectralField wd = diagnose_w(s.v1, s.v2);
        wd -= s.w;
        if (wd.l2_norm() > 1e-10 * std::max(1.0, s.grad_v_norm()))
            throw ParameterError("primitive: state w inconsistent with diagnose_w(v)");
    }

    double umax = 0.0;
    VTendency n1 = tendency_at(s, s.time, &umax);
    check_health(s, umax);
    diag_.umax = umax;
    diag_.cfl = umax * h * kmax;
    if (diag_.cfl > options_.cfl_limit) {
        std::ostringstream msg;
        msg << "primitive: advective CFL " << diag_.cfl << " exceeds limit "
            << options_.cfl_limit << " at t = " << s.time << "; suggested dt <= "
            << options_.cfl_limit / (umax * kmax);
        throw CflError(msg.str(), options_.cfl_limit / (umax * kmax));
    }

    State mid(grid());
    detail::cn_update(s.v1, n1.n_v1, h, 1.0, 1.0, mid.v1);
    detail::cn_update(s.v2, n1.n_v2, h, 1.0, 1.0, mid.v2);
    detail::cn_update(s.theta, n1.n_theta, h, 1.0, 1.0, mid.theta);
    mid.w = diagnose_w(mid.v1, mid.v2);
    mid.time = s.time + h;

    double umax_mid = 0.0;
    VTendency n2 = tendency_at(mid, mid.time, &umax_mid);
    check_health(mid, umax_mid);

    n1.n_v1 += n2.n_v1;
    n1.n_v2 += n2.n_v2;
    n1.n_theta += n2.n_theta;
    n1.n_v1 *= 0.5;
    n1.n_v2 *= 0.5;
    n1.n_theta *= 0.5;

    State out(grid());
    detail::cn_update(s.v1, n1.n_v1, h, 1.0, 1.0, out.v1);
    detail::cn_update(s.v2, n1.n_v2, h, 1.0, 1.0, out.v2);
    detail::cn_update(s.theta, n1.n_theta, h, 1.0, 1.0, out.theta);
    out.w = diagnose_w(out.v1, out.v2);
    out.time = s.time + h;
    check_health(out, 0.0);

    diag_.divergence_residual = out.divergence_residual();
    diag_.parity_drift = out.parity_residual_max();

    out.v1 = enforce_parity(out.v1, Parity::Even);
    out.v2 = enforce_parity(out.v2, Parity::Even);
    out.theta = enforce_parity(out.theta, Parity::Odd);
    // Barotropic cleanup: remove roundoff divergence of the z-mean of v.
    {
        SpectralField2D rhs = z_mean(derivative(out.v1, Axis::X) + derivative(out.v2, Axis::Y));
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs.data()[i] = -rhs.data()[i];
        const SpectralField2D q = poisson_horizontal(rhs);
        const Grid& g = grid();
        for (int ix = 0; ix < g.nx(); ++ix)
            for (int iy = 0; iy < g.ny(); ++iy) {
                const Complex ikx{0.0, static_cast<double>(g.kx(ix))};
                const Complex iky{0.0, static_cast<double>(g.ky(iy))};
                out.v1(ix, iy, 0) -= ikx * q(ix, iy);
                out.v2(ix, iy, 0) -= iky * q(ix, iy);
            }
    }
    out.w = diagnose_w(out.v1, out.v2);

    history_.push(out.time, std::max(umax, umax_mid),
                  std::sqrt(out.v1.l2_norm_sq() + out.v2.l2_norm_sq()));
    return out;
}

}  // namespace hydrolim
