#include "hydrolim/diagnostics.hpp"

#include <cmath>

namespace hydrolim {

namespace {

Grid padded_grid(const Grid& g) { return Grid(2 * g.nx(), 2 * g.ny(), 2 * g.nz()); }

}  // namespace

NormEvaluator::NormEvaluator(const Grid& grid) : base_(grid), padded_(padded_grid(grid)) {}

SpectralField NormEvaluator::zero_pad(const SpectralField& f) const {
    const Grid& g = f.grid();
    const Grid& p = padded_.grid();
    SpectralField out(p, f.parity());
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                const int kx = g.kx(ix), ky = g.ky(iy), m = g.mz(iz);
                const int px = kx >= 0 ? kx : kx + p.nx();
                const int py = ky >= 0 ? ky : ky + p.ny();
                const int pz = m >= 0 ? m : m + p.nz();
                out(px, py, pz) = f(ix, iy, iz);
            }
    return out;
}

double NormEvaluator::l4_norm(const SpectralField& f) {
    const SpectralField fp = zero_pad(f);
    padded_.to_physical(fp, scratch_a_);
    const Grid& p = padded_.grid();
    const double weight = Grid::volume() / static_cast<double>(p.size());
    double s = 0.0;
    for (double v : scratch_a_) {
        const double v2 = v * v;
        s += v2 * v2;
    }
    return std::pow(weight * s, 0.25);
}

double NormEvaluator::velocity_max(const State& s) {
    base_.to_physical(s.v1, scratch_a_);
    base_.to_physical(s.v2, scratch_b_);
    base_.to_physical(s.w, scratch_c_);
    double m = 0.0;
    for (std::size_t i = 0; i < scratch_a_.size(); ++i) {
        const double u2 = scratch_a_[i] * scratch_a_[i] + scratch_b_[i] * scratch_b_[i] +
                          scratch_c_[i] * scratch_c_[i];
        m = std::max(m, u2);
    }
    return std::sqrt(m);
}

NormSample NormEvaluator::norms(const State& s) {
    NormSample row;
    row.t = s.time;
    row.l2_v = std::sqrt(s.v1.l2_norm_sq() + s.v2.l2_norm_sq());
    row.l2_theta = s.theta.l2_norm();
    row.l2_w = s.w.l2_norm();
    // Vector L4 norm: (int |v|^4)^(1/4) with |v|^2 = v1^2 + v2^2.
    {
        const SpectralField p1 = zero_pad(s.v1);
        const SpectralField p2 = zero_pad(s.v2);
        padded_.to_physical(p1, scratch_a_);
        padded_.to_physical(p2, scratch_b_);
        const double weight = Grid::volume() / static_cast<double>(padded_.grid().size());
        double sum = 0.0;
        for (std::size_t i = 0; i < scratch_a_.size(); ++i) {
            const double m2 = scratch_a_[i] * scratch_a_[i] + scratch_b_[i] * scratch_b_[i];
            sum += m2 * m2;
        }
        row.l4_v = std::pow(weight * sum, 0.25);
    }
    row.l4_theta = l4_norm(s.theta);
    row.l2_dz_v = std::sqrt(dz_norm_sq(s.v1) + dz_norm_sq(s.v2));
    row.l2_dz_theta = std::sqrt(dz_norm_sq(s.theta));
    row.l2_grad_v = std::sqrt(grad_norm_sq(s.v1) + grad_norm_sq(s.v2));
    row.l2_grad_theta = std::sqrt(grad_norm_sq(s.theta));
    row.l2_grad_w = std::sqrt(grad_norm_sq(s.w));
    row.l2_lap_v = std::sqrt(laplacian_norm_sq(s.v1) + laplacian_norm_sq(s.v2));
    row.l2_lap_theta = std::sqrt(laplacian_norm_sq(s.theta));
    row.umax = velocity_max(s);
    return row;
}

DifferenceNorms difference_norms(const State& bq, const State& pe, double eps) {
    return difference_norms(difference(bq, pe), eps);
}

DifferenceNorms difference_norms(const DifferenceState& d, double eps) {
    const double e2 = eps * eps;
    DifferenceNorms n;
    n.l2_V_sq = d.V1.l2_norm_sq() + d.V2.l2_norm_sq();
    n.l2_W_sq = d.W.l2_norm_sq();
    n.l2_Phi_sq = d.Phi.l2_norm_sq();
    n.l2_sq = n.l2_V_sq + e2 * n.l2_W_sq + n.l2_Phi_sq;
    n.grad_sq = grad_norm_sq(d.V1) + grad_norm_sq(d.V2) + e2 * grad_norm_sq(d.W) +
                grad_norm_sq(d.Phi);
    n.h1_sq = n.l2_sq + n.grad_sq;
    n.grad_h1_sq = n.grad_sq + laplacian_norm_sq(d.V1) + laplacian_norm_sq(d.V2) +
                   e2 * laplacian_norm_sq(d.W) + laplacian_norm_sq(d.Phi);
    return n;
}

double ladyzhenskaya_ratio(const SpectralField& phi, const SpectralField& psi,
                           const SpectralField& chi) {
    require_same_grid(phi.grid(), psi.grid(), "ladyzhenskaya_ratio");
    require_same_grid(phi.grid(), chi.grid(), "ladyzhenskaya_ratio");

    // lhs on the padded grid: products and the horizontal integral of a
    // product of z-integrals are exact there.
    FourierWorkspace pad(padded_grid(phi.grid()));
    std::vector<double> a, b, c;
    const Grid& g = phi.grid();
    const Grid& p = pad.grid();
    auto pad_field = [&](const SpectralField& f) {
        SpectralField out(p, f.parity());
        for (int ix = 0; ix < g.nx(); ++ix)
            for (int iy = 0; iy < g.ny(); ++iy)
                for (int iz = 0; iz < g.nz(); ++iz) {
                    const int kx = g.kx(ix), ky = g.ky(iy), m = g.mz(iz);
                    out(kx >= 0 ? kx : kx + p.nx(), ky >= 0 ? ky : ky + p.ny(),
                        m >= 0 ? m : m + p.nz()) = f(ix, iy, iz);
                }
        return out;
    };
    pad.to_physical(pad_field(phi), a);
    pad.to_physical(pad_field(psi), b);
    pad.to_physical(pad_field(chi), c);

    const double dz = 2.0 / p.nz();
    const double dA = Grid::area() / static_cast<double>(p.size_2d());
    double lhs = 0.0;
    for (int ix = 0; ix < p.nx(); ++ix)
        for (int iy = 0; iy < p.ny(); ++iy) {
            double int_phi = 0.0, int_psichi = 0.0;
            for (int iz = 0; iz < p.nz(); ++iz) {
                const std::size_t idx = p.index(ix, iy, iz);
                int_phi += a[idx];
                int_psichi += b[idx] * c[idx];
            }
            lhs += (int_phi * dz) * (int_psichi * dz);
        }
    lhs = std::abs(lhs * dA);
    if (lhs == 0.0) return 0.0;

    auto half_factor = [](const SpectralField& f) {
        const double l2 = f.l2_norm();
        const double gh = std::sqrt(std::sqrt(grad_h_norm_sq(f)));
        return std::sqrt(l2) * (std::sqrt(l2) + gh);
    };
    const double rhs = half_factor(phi) * half_factor(psi) * chi.l2_norm();
    if (rhs == 0.0) throw ParameterError("ladyzhenskaya_ratio: zero denominator");
    return lhs / rhs;
}

}  // namespace hydrolim
