#pragma once

#include <cmath>

namespace xyq::detail {

// Below this the dispersion is treated as degenerate and the guarded limit
// forms take over.
inline constexpr double gamma_eps = 1e-12;

// Below this value of beta*Gamma the ratio tanh(beta*Gamma)/Gamma is
// replaced by its limit beta.
inline constexpr double tanh_eps = 1e-8;

// sin(a*g)/g with the second-order series a*(1 - (a*g)^2/6) once g falls
// below the guard; the series error is under machine noise there.
inline double sin_ratio(double a, double g) {
    if (g > gamma_eps) return std::sin(a * g) / g;
    const double x = a * g;
    return a * (1.0 - x * x / 6.0);
}

// True when the initial-state dispersion is degenerate at zero temperature;
// callers switch to the documented limit (equal mixture / dropped terms).
inline bool degenerate_mode(double beta, double gamma0) {
    return std::isinf(beta) && gamma0 <= gamma_eps;
}

// (1 - e^{-4*beta*g}) / (4*g); tends to beta as g -> 0 and to 1/(4g) at
// infinite beta.  Callers must handle the degenerate case separately.
inline double boltzmann_ratio(double beta, double g) {
    if (std::isinf(beta)) return 1.0 / (4.0 * g);
    const double x = 4.0 * beta * g;
    if (x < tanh_eps) return beta * (1.0 - 0.5 * x);
    return -std::expm1(-x) / (4.0 * g);
}

// tanh(beta*g)/g; tends to beta as g -> 0 and to 1/g at infinite beta.
// Callers must handle the degenerate case separately.
inline double tanh_ratio(double beta, double g) {
    if (std::isinf(beta)) return 1.0 / g;
    const double x = beta * g;
    if (x < tanh_eps) return beta;
    return std::tanh(x) / g;
}

// e^{-2*beta*g} with the zero-temperature limit 0.
inline double exp_neg2(double beta, double g) {
    if (std::isinf(beta)) return 0.0;
    return std::exp(-2.0 * beta * g);
}

}  // namespace xyq::detail
