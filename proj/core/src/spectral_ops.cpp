#include "hydrolim/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hydrolim/fourier.hpp"

namespace hydrolim {

namespace {

double coeff_scale(const SpectralField& f) { return std::max(f.max_abs_coeff(), 1.0); }

}  // namespace

SpectralField enforce_parity(const SpectralField& f, Parity parity) {
    if (parity == Parity::None) {
        SpectralField out = f;
        out.set_parity(Parity::None);
        return out;
    }
    const Grid& g = f.grid();
    SpectralField out(g, parity);
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                const Complex a = f(ix, iy, iz);
                const Complex b = f(ix, iy, g.reflect_z(iz));
                out(ix, iy, iz) = 0.5 * (a + sign * b);
            }
    return out;
}

double parity_residual(const SpectralField& f, Parity parity) {
    if (parity == Parity::None) return 0.0;
    SpectralField p = enforce_parity(f, parity);
    p -= f;
    return p.l2_norm();
}

SpectralField derivative(const SpectralField& f, Axis axis) {
    const Grid& g = f.grid();
    SpectralField out(g, axis == Axis::Z ? flip(f.parity()) : f.parity());
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                double k;
                switch (axis) {
                    case Axis::X: k = g.kx(ix); break;
                    case Axis::Y: k = g.ky(iy); break;
                    default: k = kPi * g.mz(iz); break;
                }
                out(ix, iy, iz) = Complex{0.0, k} * f(ix, iy, iz);
            }
    return out;
}

SpectralField dealias(const SpectralField& f) {
    SpectralField out = f;
    dealias_inplace(out);
    return out;
}

void dealias_inplace(SpectralField& f) {
    const Grid& g = f.grid();
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz)
                if (!g.retained(ix, iy, iz)) f(ix, iy, iz) = Complex{0.0, 0.0};
}

SpectralField poisson_aniso(const SpectralField& rhs, double eps) {
    if (eps <= 0.0) throw ParameterError("poisson_aniso: eps must be positive");
    if (std::abs(rhs.mean()) > 1e-12 * coeff_scale(rhs))
        throw GaugeError("poisson_aniso: rhs has nonzero mean, zero-mean gauge violated");
    const Grid& g = rhs.grid();
    const double inv_eps2 = 1.0 / (eps * eps);
    SpectralField p(g, rhs.parity());
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                const double kx = g.kx(ix), ky = g.ky(iy), kz = kPi * g.mz(iz);
                const double denom = -(kx * kx + ky * ky) - inv_eps2 * kz * kz;
                if (denom == 0.0)
                    p(ix, iy, iz) = Complex{0.0, 0.0};  // (0,0,0): gauge
                else
                    p(ix, iy, iz) = rhs(ix, iy, iz) / denom;
            }
    return p;
}

SpectralField2D poisson_horizontal(const SpectralField2D& rhs) {
    double scale = 1.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) scale = std::max(scale, std::abs(rhs.data()[i]));
    if (std::abs(rhs.mean()) > 1e-12 * scale)
        throw GaugeError("poisson_horizontal: rhs has nonzero mean over M");
    const Grid& g = rhs.grid();
    SpectralField2D p(g);
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy) {
            const double kx = g.kx(ix), ky = g.ky(iy);
            const double kh2 = kx * kx + ky * ky;
            p(ix, iy) = (kh2 == 0.0) ? Complex{0.0, 0.0} : rhs(ix, iy) / kh2;
        }
    return p;
}

SpectralField vertical_antiderivative(const SpectralField& f, ZAnchor anchor) {
    const Grid& g = f.grid();
    const double tol = 1e-10 * coeff_scale(f);

    std::vector<std::pair<int, int>> bad;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            if (std::abs(f(ix, iy, 0)) > tol && bad.size() < 8)
                bad.emplace_back(g.kx(ix), g.ky(iy));
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "vertical_antiderivative: nonzero z-mean, antiderivative would not be "
               "periodic; offending (kx,ky) modes:";
        for (auto [kx, ky] : bad) msg << " (" << kx << "," << ky << ")";
        throw PeriodicityError(msg.str(), std::move(bad));
    }

    SpectralField out(g, flip(f.parity()));
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy) {
            Complex at_anchor{0.0, 0.0};
            for (int iz = 1; iz < g.nz(); ++iz) {
                const int m = g.mz(iz);
                const Complex F = f(ix, iy, iz) / Complex{0.0, kPi * m};
                out(ix, iy, iz) = F;
                // Basis value exp(i pi m (z0+1)): 1 at z0 = -1, (-1)^m at z0 = 0.
                const double phase = (anchor == ZAnchor::MinusOne) ? 1.0 : (m % 2 ? -1.0 : 1.0);
                at_anchor += phase * F;
            }
            out(ix, iy, 0) = -at_anchor;
        }
    return out;
}

SpectralField2D z_mean(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField2D out(g);
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy) out(ix, iy) = f(ix, iy, 0);
    return out;
}

double inner_product(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f.grid(), g.grid(), "inner_product");
    double s = 0.0;
    const Complex* a = f.data();
    const Complex* b = g.data();
    for (std::size_t i = 0; i < f.size(); ++i)
        s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return Grid::volume() * s;
}

namespace {

template <typename Symbol>
double weighted_coeff_sum(const SpectralField& f, Symbol symbol) {
    const Grid& g = f.grid();
    double s = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                const double kx = g.kx(ix), ky = g.ky(iy), kz = kPi * g.mz(iz);
                s += symbol(kx, ky, kz) * std::norm(f(ix, iy, iz));
            }
    return Grid::volume() * s;
}

}  // namespace

double grad_norm_sq(const SpectralField& f) {
    return weighted_coeff_sum(
        f, [](double kx, double ky, double kz) { return kx * kx + ky * ky + kz * kz; });
}

double laplacian_norm_sq(const SpectralField& f) {
    return weighted_coeff_sum(f, [](double kx, double ky, double kz) {
        const double k2 = kx * kx + ky * ky + kz * kz;
        return k2 * k2;
    });
}

double dz_norm_sq(const SpectralField& f) {
    return weighted_coeff_sum(f, [](double, double, double kz) { return kz * kz; });
}

double grad_h_norm_sq(const SpectralField& f) {
    return weighted_coeff_sum(f, [](double kx, double ky, double) { return kx * kx + ky * ky; });
}

double conjugate_symmetry_residual(const SpectralField& f) {
    const Grid& g = f.grid();
    double s = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                const int jx = ix == 0 ? 0 : g.nx() - ix;
                const int jy = iy == 0 ? 0 : g.ny() - iy;
                const int jz = g.reflect_z(iz);
                const Complex d = f(ix, iy, iz) - std::conj(f(jx, jy, jz));
                s += std::norm(d) * 0.25;
            }
    return std::sqrt(Grid::volume() * s);
}

double boundary_plane_max(const SpectralField& f, FourierWorkspace& fft) {
    const Grid& g = f.grid();
    SpectralField2D plane(g);
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy) {
            Complex s{0.0, 0.0};
            for (int iz = 0; iz < g.nz(); ++iz) s += f(ix, iy, iz);
            plane(ix, iy) = s;
        }
    std::vector<double> values;
    fft.to_physical_2d(plane, values);
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace hydrolim
