#include "hydrolim/bounds.hpp"

#include <cmath>

namespace hydrolim {

namespace {
double sq(double x) { return x * x; }
}  // namespace

std::array<double, 8> alpha_all(double t, const BoundConfig& cfg) {
    cfg.validate();
    if (t < 0.0) throw ParameterError("alpha: t must be nonnegative");
    const double C = cfg.C;
    const double v1 = sq(cfg.v0_h1), th1 = sq(cfg.theta0_h1);
    const double v2 = sq(cfg.v0_h2), th2 = sq(cfg.theta0_h2);

    std::array<double, 8> a{};
    a[0] = (8.0 * t + 1.0) * (v1 + th1);
    a[1] = (t + 2.0) * std::exp(C * (t + 2.0) * (sq(a[0]) + a[0] + 1.0)) *
           (sq(v1) + sq(th1) + a[0]);
    a[2] = C * std::exp(C * t * sq(a[1])) * (v1 + t * a[0]);
    a[3] = C * std::exp(C * t * (1.0 + sq(a[1]))) *
           (th1 + (std::sqrt(a[1]) + t * sq(a[1]) + 1.0) * a[2]);
    a[4] = C * std::exp(C * (sq(a[0]) + sq(a[2]))) * (v1 + a[0]);
    a[5] = C * std::exp(C * (sq(a[0]) + sq(a[2]))) * (th1 + sq(a[3]) + sq(a[4]));
    a[6] = C * (t + 1.0) * std::exp(C * sq(a[4])) * (v2 + a[5]);
    a[7] = C * std::exp(C * sq(a[4])) * (th2 + sq(a[5]) + sq(a[6]));
    return a;
}

double alpha(int i, double t, const BoundConfig& cfg) {
    if (i < 1 || i > 8) throw ParameterError("alpha: index must lie in 1..8");
    return alpha_all(t, cfg)[i - 1];
}

double beta(int which, double t, const BoundConfig& cfg, double eps) {
    cfg.validate();
    if (t < 0.0) throw ParameterError("beta: t must be nonnegative");
    if (eps < 0.0) throw ParameterError("beta: eps must be nonnegative");
    const double C = cfg.C;
    const auto a = alpha_all(t, cfg);
    if (which == 1) {
        const double data = sq(cfg.v0_l2) + eps * eps * sq(cfg.w0_l2) + t * sq(cfg.theta0_l2);
        return C * std::exp(C * (t + sq(a[4]) + sq(a[5]))) * (a[4] + sq(a[4]) + sq(data));
    }
    if (which == 2) {
        const double eps4 = sq(sq(eps));
        return C * std::exp(C * (t + sq(a[7]) + (1.0 + eps4) * sq(a[6]))) * (a[6] + sq(a[6]));
    }
    throw ParameterError("beta: which must be 1 or 2");
}

}  // namespace hydrolim
