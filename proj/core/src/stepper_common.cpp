#include "hydrolim/stepper_common.hpp"

namespace hydrolim::detail {

void cn_update(const SpectralField& in, const SpectralField& rhs, double h, double mu_h,
               double mu_z_fixed, SpectralField& out) {
    const Grid& g = in.grid();
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                const double kx = g.kx(ix), ky = g.ky(iy), kz = kPi * g.mz(iz);
                const double K = mu_h * (kx * kx + ky * ky) + mu_z_fixed * kz * kz;
                const double a = 0.5 * h * K;
                out(ix, iy, iz) =
                    ((1.0 - a) * in(ix, iy, iz) + h * rhs(ix, iy, iz)) / (1.0 + a);
            }
    out.set_parity(in.parity());
}

void NormHistory::push(double t, double umax, double l2) {
    if (ring_.size() < kCap) {
        ring_.push_back({t, umax, l2});
    } else {
        ring_[next_] = {t, umax, l2};
        next_ = (next_ + 1) % kCap;
    }
}

std::vector<BlowUpSample> NormHistory::snapshot() const {
    std::vector<BlowUpSample> out(ring_.begin() + next_, ring_.end());
    out.insert(out.end(), ring_.begin(), ring_.begin() + next_);
    return out;
}

}  // namespace hydrolim::detail
