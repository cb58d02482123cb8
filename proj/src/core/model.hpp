#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "core/errors.hpp"

namespace xyq {

// beta value representing the zero-temperature limit.
inline constexpr double beta_infinite = std::numeric_limits<double>::infinity();

/// Full physical configuration of a step quench: the chain starts in the
/// thermal state of (j0, h0) and evolves under (j1, h1) for t >= 0.
struct QuenchParams {
    double gamma = 1.0;  // anisotropy, in [0, 1]
    double j0 = 1.0;     // exchange coupling before the quench
    double j1 = 1.0;     // exchange coupling after the quench
    double h0 = 1.0;     // transverse field before the quench
    double h1 = 1.0;     // transverse field after the quench
    double beta = beta_infinite;  // inverse temperature, >= 0 or infinite
    int n_spins = 1000;  // even, >= 4

    // Interfaces take the temperature kt; kt == 0 maps to beta_infinite.
    static QuenchParams from_kt(double gamma, double j0, double j1, double h0,
                                double h1, double kt, int n_spins);

    void validate() const;

    bool zero_temperature() const { return std::isinf(beta); }
    double kt() const { return zero_temperature() ? 0.0 : 1.0 / beta; }
};

/// One momentum mode: phi = 2*pi*p / n_spins for p in 1..n_spins/2.
struct ModeAngle {
    int p;
    double phi;
};

/// The n_spins/2 mode angles covering (0, pi]; the last one is exactly pi.
std::vector<ModeAngle> mode_angles(int n_spins);

/// Dispersion: sqrt((j*cos(phi) + h)^2 + gamma^2 j^2 sin^2(phi)).
double dispersion(double j, double h, double gamma, double phi);

struct AlphaDelta {
    double alpha;  // -2 j cos(phi) - 2 h
    double delta;  // 2 gamma sin(phi)
};

AlphaDelta alpha_delta(double j, double h, double gamma, double phi);

// Step schedules; the convention theta(0) = 1 makes t = 0 use the
// post-quench values while the initial state is built from (j0, h0).
double coupling_at(const QuenchParams& params, double t);
double field_at(const QuenchParams& params, double t);

}  // namespace xyq
