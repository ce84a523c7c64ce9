#pragma once

#include <array>

#include "hydrolim/errors.hpp"

namespace hydrolim {

/// Generic constant and initial-data norms entering the closed-form bound
/// functions.  The constant C is user-set and reported, never asserted.
struct BoundConfig {
    double C = 1.0;
    double v0_h1 = 0.0;      // ||v0||_{H1}
    double theta0_h1 = 0.0;  // ||theta0||_{H1}
    double v0_h2 = 0.0;      // ||v0||_{H2}
    double theta0_h2 = 0.0;  // ||theta0||_{H2}
    double w0_l2 = 0.0;      // ||w0||_2
    double v0_l2 = 0.0;      // ||v0||_2
    double theta0_l2 = 0.0;  // ||theta0||_2

    void validate() const {
        if (C <= 0.0) throw ParameterError("BoundConfig: C must be positive");
        for (double n : {v0_h1, theta0_h1, v0_h2, theta0_h2, w0_l2, v0_l2, theta0_l2})
            if (n < 0.0) throw ParameterError("BoundConfig: norms must be nonnegative");
    }
};

/// alpha_i(t), i in 1..8: the nested closed-form upper-bound functions of the
/// a priori estimates.  Nondecreasing in t and in every initial norm.
double alpha(int i, double t, const BoundConfig& cfg);

/// All eight values at once (shares the evaluation of the chain).
std::array<double, 8> alpha_all(double t, const BoundConfig& cfg);

/// beta_1 (basic energy estimate) and beta_2 (first-order energy estimate).
/// beta_1 carries the eps^2 ||w0||_2^2 term of its bracket; beta_2 the
/// (1+eps^4) weight on alpha_7^2.
double beta(int which, double t, const BoundConfig& cfg, double eps);

}  // namespace hydrolim
