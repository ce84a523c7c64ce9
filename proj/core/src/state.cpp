#include "hydrolim/state.hpp"

#include <cmath>

namespace hydrolim {

double State::divergence_residual() const {
    const Grid& g = grid();
    double s = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy)
            for (int iz = 0; iz < g.nz(); ++iz) {
                const Complex d = Complex{0.0, static_cast<double>(g.kx(ix))} * v1(ix, iy, iz) +
                                  Complex{0.0, static_cast<double>(g.ky(iy))} * v2(ix, iy, iz) +
                                  Complex{0.0, kPi * g.mz(iz)} * w(ix, iy, iz);
                s += std::norm(d);
            }
    return std::sqrt(Grid::volume() * s);
}

double State::grad_v_norm() const {
    return std::sqrt(grad_norm_sq(v1) + grad_norm_sq(v2));
}

double State::parity_residual_max() const {
    double r = parity_residual(v1, Parity::Even);
    r = std::max(r, parity_residual(v2, Parity::Even));
    r = std::max(r, parity_residual(w, Parity::Odd));
    r = std::max(r, parity_residual(theta, Parity::Odd));
    return r;
}

double State::barotropic_residual() const {
    const Grid& g = grid();
    double s = 0.0;
    for (int ix = 0; ix < g.nx(); ++ix)
        for (int iy = 0; iy < g.ny(); ++iy) {
            const Complex d = Complex{0.0, static_cast<double>(g.kx(ix))} * v1(ix, iy, 0) +
                              Complex{0.0, static_cast<double>(g.ky(iy))} * v2(ix, iy, 0);
            s += std::norm(d);
        }
    return std::sqrt(Grid::area() * s);
}

DifferenceState difference(const State& bq, const State& pe) {
    require_same_grid(bq.grid(), pe.grid(), "difference");
    if (std::abs(bq.time - pe.time) > 1e-12 * std::max(1.0, std::abs(bq.time)))
        throw GridMismatchError("difference: states sampled at different times");
    DifferenceState d{bq.v1, bq.v2, bq.w, bq.theta, bq.time};
    d.V1 -= pe.v1;
    d.V2 -= pe.v2;
    d.W -= pe.w;
    d.Phi -= pe.theta;
    return d;
}

}  // namespace hydrolim
