#include "hydrolim/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hydrolim {

const char* hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::VParity: return "v parity (even in z)";
        case Hypothesis::ThetaParity: return "theta parity (odd in z)";
        case Hypothesis::Barotropic: return "barotropic constraint";
        case Hypothesis::MeanZeroV: return "mean-zero v";
        case Hypothesis::MeanZeroTheta: return "mean-zero theta";
    }
    return "?";
}

namespace {

double norm_scale(const SpectralField& f) { return std::max(f.l2_norm(), 1e-30); }

void check_parity(const SpectralField& f1, const SpectralField* f2, Parity parity,
                  Hypothesis hyp, double tol, std::vector<Violation>& out) {
    double n2 = f1.l2_norm_sq();
    double r2 = parity_residual(f1, parity);
    r2 *= r2;
    if (f2) {
        n2 += f2->l2_norm_sq();
        const double r = parity_residual(*f2, parity);
        r2 += r * r;
    }
    const double res = std::sqrt(r2) / std::max(std::sqrt(n2), 1e-30);
    if (res > tol) {
        std::ostringstream msg;
        msg << hypothesis_name(hyp) << " violated: relative projection residual " << res;
        out.push_back({hyp, res, tol, {}, msg.str()});
    }
}

}  // namespace

ValidationReport validate_initial_data(const SpectralField& v1, const SpectralField& v2,
                                       const SpectralField& theta,
                                       const ValidationOptions& opts) {
    require_same_grid(v1.grid(), v2.grid(), "validate_initial_data");
    require_same_grid(v1.grid(), theta.grid(), "validate_initial_data");
    const Grid& g = v1.grid();
    const double tol = opts.tolerance;

    ValidationReport report;
    check_parity(v1, &v2, Parity::Even, Hypothesis::VParity, tol, report.violations);
    check_parity(theta, nullptr, Parity::Odd, Hypothesis::ThetaParity, tol, report.violations);

    // Barotropic: div_h of the z-mean slab must vanish per horizontal mode.
    {
        double s = 0.0;
        std::vector<std::pair<double, std::pair<int, int>>> worst;
        for (int ix = 0; ix < g.nx(); ++ix)
            for (int iy = 0; iy < g.ny(); ++iy) {
                const Complex d =
                    Complex{0.0, static_cast<double>(g.kx(ix))} * v1(ix, iy, 0) +
                    Complex{0.0, static_cast<double>(g.ky(iy))} * v2(ix, iy, 0);
                const double a = std::abs(d);
                s += a * a;
                if (a > 0.0) worst.push_back({a, {g.kx(ix), g.ky(iy)}});
            }
        const double scale = std::max(std::sqrt(grad_norm_sq(v1) + grad_norm_sq(v2)), 1e-30);
        const double res = std::sqrt(Grid::area() * s) / scale;
        if (res > tol) {
            std::sort(worst.begin(), worst.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            std::vector<std::pair<int, int>> modes;
            for (std::size_t i = 0; i < worst.size() && i < 8; ++i)
                modes.push_back(worst[i].second);
            std::ostringstream msg;
            msg << hypothesis_name(Hypothesis::Barotropic)
                << " violated: ||div_h of z-averaged v|| relative residual " << res
                << "; offending (kx,ky):";
            for (auto [kx, ky] : modes) msg << " (" << kx << "," << ky << ")";
            report.violations.push_back(
                {Hypothesis::Barotropic, res, tol, std::move(modes), msg.str()});
        }
    }

    if (opts.require_mean_zero) {
        const double mv = std::hypot(std::abs(v1.mean()), std::abs(v2.mean()));
        const double sv = std::max(std::sqrt(v1.l2_norm_sq() + v2.l2_norm_sq()), 1e-30);
        if (mv / sv > tol) {
            std::ostringstream msg;
            msg << hypothesis_name(Hypothesis::MeanZeroV)
                << " violated: |mean(v)| relative residual " << mv / sv;
            report.violations.push_back({Hypothesis::MeanZeroV, mv / sv, tol, {}, msg.str()});
        }
        const double mt = std::abs(theta.mean());
        if (mt / norm_scale(theta) > tol) {
            std::ostringstream msg;
            msg << hypothesis_name(Hypothesis::MeanZeroTheta)
                << " violated: |mean(theta)| relative residual " << mt / norm_scale(theta);
            report.violations.push_back(
                {Hypothesis::MeanZeroTheta, mt / norm_scale(theta), tol, {}, msg.str()});
        }
    }
    return report;
}

SpectralField diagnose_w(const SpectralField& v1, const SpectralField& v2) {
    require_same_grid(v1.grid(), v2.grid(), "diagnose_w");
    SpectralField div = derivative(v1, Axis::X);
    div += derivative(v2, Axis::Y);
    SpectralField w = vertical_antiderivative(div, ZAnchor::MinusOne);
    w *= -1.0;
    w.set_parity(Parity::Odd);
    return w;
}

State assemble_state(const SpectralField& v1, const SpectralField& v2,
                     const SpectralField& theta, double time) {
    State s(v1.grid());
    s.v1 = dealias(enforce_parity(v1, Parity::Even));
    s.v2 = dealias(enforce_parity(v2, Parity::Even));
    s.theta = dealias(enforce_parity(theta, Parity::Odd));
    s.w = diagnose_w(s.v1, s.v2);
    s.time = time;
    return s;
}

namespace {

FieldBundle scale_bundle(const FieldBundle& in, double w_factor, double theta_factor) {
    FieldBundle out = in;
    out.w *= w_factor;
    out.theta *= theta_factor;
    return out;
}

}  // namespace

FieldBundle rescale_to_fixed(const FieldBundle& thin, double eps) {
    if (eps <= 0.0) throw ParameterError("rescale_to_fixed: eps must be positive");
    return scale_bundle(thin, 1.0 / eps, eps);
}

FieldBundle rescale_to_thin(const FieldBundle& fixed, double eps) {
    if (eps <= 0.0) throw ParameterError("rescale_to_thin: eps must be positive");
    return scale_bundle(fixed, eps, 1.0 / eps);
}

SpectralField sample_field(FourierWorkspace& fft,
                           const std::function<double(double, double, double)>& fn,
                           Parity parity) {
    const Grid& g = fft.grid();
    std::vector<double> values(g.size());
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz)
                values[g.index(ix, iy, iz)] = fn(g.x(ix), g.y(iy), g.z(iz));
    return fft.to_spectral(values, parity);
}

std::vector<std::string> profile_names() {
    return {"zero", "acceptance", "theta_profile", "barotropic_bad", "constant_v", "parity_bad"};
}

InitialData make_profile(const std::string& name, FourierWorkspace& fft, double A, double B) {
    const Grid& g = fft.grid();
    auto zero = [](double, double, double) { return 0.0; };
    if (name == "zero") {
        return {SpectralField(g, Parity::Even), SpectralField(g, Parity::Even),
                SpectralField(g, Parity::Odd)};
    }
    if (name == "acceptance") {
        return {sample_field(
                    fft, [A](double x, double, double z) { return A * std::sin(x) * std::cos(kPi * z); },
                    Parity::Even),
                sample_field(
                    fft, [A](double, double y, double z) { return -A * std::sin(y) * std::cos(kPi * z); },
                    Parity::Even),
                sample_field(
                    fft, [B](double x, double, double z) { return B * std::sin(x) * std::sin(kPi * z); },
                    Parity::Odd)};
    }
    if (name == "theta_profile") {
        return {sample_field(fft, zero, Parity::Even), sample_field(fft, zero, Parity::Even),
                sample_field(
                    fft, [B](double, double, double z) { return B * std::sin(kPi * z); },
                    Parity::Odd)};
    }
    if (name == "barotropic_bad") {
        return {sample_field(
                    fft, [A](double x, double, double) { return A * std::sin(x); }, Parity::Even),
                sample_field(fft, zero, Parity::Even),
                sample_field(
                    fft, [B](double x, double, double z) { return B * std::sin(x) * std::sin(kPi * z); },
                    Parity::Odd)};
    }
    if (name == "constant_v") {
        return {sample_field(fft, [A](double, double, double) { return A; }, Parity::Even),
                sample_field(fft, zero, Parity::Even), sample_field(fft, zero, Parity::Odd)};
    }
    if (name == "parity_bad") {
        return {sample_field(
                    fft, [A](double x, double, double z) { return A * std::sin(x) * std::sin(kPi * z); },
                    Parity::None),
                sample_field(fft, zero, Parity::Even),
                sample_field(
                    fft, [B](double x, double, double z) { return B * std::sin(x) * std::cos(kPi * z); },
                    Parity::None)};
    }
    throw ParameterError("unknown initial-data profile: " + name);
}

}  // namespace hydrolim
