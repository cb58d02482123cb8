#include "core/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xyq {

QuenchParams QuenchParams::from_kt(double gamma, double j0, double j1,
                                   double h0, double h1, double kt,
                                   int n_spins) {
    if (!(kt >= 0.0) || !std::isfinite(kt))
        throw usage_error("kt must be a finite nonnegative real");
    QuenchParams p;
    p.gamma = gamma;
    p.j0 = j0;
    p.j1 = j1;
    p.h0 = h0;
    p.h1 = h1;
    p.beta = kt == 0.0 ? beta_infinite : 1.0 / kt;
    p.n_spins = n_spins;
    p.validate();
    return p;
}

void QuenchParams::validate() const {
    if (n_spins % 2 != 0) throw usage_error("n_spins must be even");
    if (n_spins < 4) throw usage_error("n_spins must be >= 4");
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw usage_error("gamma must lie in [0, 1]");
    if (!std::isfinite(j0) || !std::isfinite(j1) || !std::isfinite(h0) ||
        !std::isfinite(h1))
        throw usage_error("couplings and fields must be finite");
    if (std::isnan(beta) || beta < 0.0)
        throw usage_error("beta must be >= 0 or infinite");
}

std::vector<ModeAngle> mode_angles(int n_spins) {
    if (n_spins % 2 != 0) throw usage_error("n_spins must be even");
    if (n_spins < 4) throw usage_error("n_spins must be >= 4");
    const int half = n_spins / 2;
    std::vector<ModeAngle> modes;
    modes.reserve(half);
    for (int p = 1; p < half; ++p)
        modes.push_back({p, 2.0 * std::numbers::pi * p / n_spins});
    modes.push_back({half, std::numbers::pi});  // p = N/2 is exactly pi
    return modes;
}

double dispersion(double j, double h, double gamma, double phi) {
    const double a = j * std::cos(phi) + h;
    const double b = gamma * j * std::sin(phi);
    return std::hypot(a, b);
}

AlphaDelta alpha_delta(double j, double h, double gamma, double phi) {
    return {-2.0 * j * std::cos(phi) - 2.0 * h, 2.0 * gamma * std::sin(phi)};
}

double coupling_at(const QuenchParams& params, double t) {
    return t < 0.0 ? params.j0 : params.j1;
}

double field_at(const QuenchParams& params, double t) {
    return t < 0.0 ? params.h0 : params.h1;
}

}  // namespace xyq
