#include "core/correlators.hpp"

#include <cmath>
#include <numbers>

#include "core/guards.hpp"

namespace xyq {

namespace {

using cd = std::complex<double>;

// Shared per-mode factors of the closed-form sums.
struct ModeFactors {
    double c0;      // j0 cos(phi) + h0
    double delta;   // 2 gamma sin(phi)
    double tau;     // tanh(beta Gamma0)/Gamma0, 0 for a degenerate mode
    double s2;      // sin^2(2 t Gamma1)/Gamma1^2   (1/(2 Gamma1^2) asympt.)
    double s4;      // sin(4 t Gamma1)/Gamma1       (0 asymptotically)
};

ModeFactors mode_factors(const QuenchParams& pr, const TimeSpec& when,
                         double phi) {
    ModeFactors mf{};
    mf.c0 = pr.j0 * std::cos(phi) + pr.h0;
    mf.delta = 2.0 * pr.gamma * std::sin(phi);
    const double g0 = dispersion(pr.j0, pr.h0, pr.gamma, phi);
    // At a zero-temperature degenerate mode every bracket multiplied by tau
    // vanishes identically, so the product is resolved to 0.
    mf.tau = detail::degenerate_mode(pr.beta, g0)
                 ? 0.0
                 : detail::tanh_ratio(pr.beta, g0);
    const double g1 = dispersion(pr.j1, pr.h1, pr.gamma, phi);
    if (when.asymptotic) {
        mf.s2 = g1 > detail::gamma_eps ? 0.5 / (g1 * g1) : 0.0;
        mf.s4 = 0.0;
    } else {
        const double sr = detail::sin_ratio(2.0 * when.t, g1);
        mf.s2 = sr * sr;
        mf.s4 = detail::sin_ratio(4.0 * when.t, g1);
    }
    return mf;
}

// Walks the momentum grid phi_p = 2 pi p / N, p = 1..N/2, plus the phi = 0
// endpoint, with trapezoidal weights (1/2 at both endpoints).  The integrands
// are even about phi = 0 and phi = pi, so this is the full-circle trapezoid
// rule and converges spectrally for smooth integrands.
template <class Kernel>
void mode_sum(const QuenchParams& pr, const TimeSpec& when, Kernel&& kernel) {
    const int half = pr.n_spins / 2;
    const double step = 2.0 * std::numbers::pi / pr.n_spins;
    kernel(mode_factors(pr, when, 0.0), 0.0, 0.5);
    for (int p = 1; p < half; ++p) {
        const double phi = step * p;
        kernel(mode_factors(pr, when, phi), phi, 1.0);
    }
    kernel(mode_factors(pr, when, std::numbers::pi), std::numbers::pi, 0.5);
}

}  // namespace

ContractionSet::ContractionSet(int r_max, std::vector<cd> q, std::vector<cd> g,
                               std::vector<cd> f)
    : r_max_(r_max), q_(std::move(q)), g_(std::move(g)), f_(std::move(f)) {}

cd ContractionSet::q(int r) const {
    if (r < 0 || r > r_max_) throw usage_error("separation out of range");
    return q_[static_cast<std::size_t>(r)];
}

cd ContractionSet::g(int r) const {
    if (r < 0 || r > r_max_) throw usage_error("separation out of range");
    return g_[static_cast<std::size_t>(r)];
}

cd ContractionSet::f(int r) const {
    if (r < -r_max_ || r > r_max_) throw usage_error("separation out of range");
    return f_[static_cast<std::size_t>(r + r_max_)];
}

double magnetization(const QuenchParams& params, const TimeSpec& when) {
    params.validate();
    const double d = params.j0 * params.h1 - params.j1 * params.h0;
    double sum = 0.0;
    mode_sum(params, when, [&](const ModeFactors& mf, double, double weight) {
        const double bracket =
            2.0 * params.j1 * d * mf.delta * mf.delta * mf.s2 + 4.0 * mf.c0;
        sum += weight * mf.tau * bracket;
    });
    return sum / (4.0 * params.n_spins);
}

ContractionSet contractions(const QuenchParams& params, const TimeSpec& when,
                            int r_max) {
    params.validate();
    if (r_max < 1) throw usage_error("r_max must be >= 1");
    const double d = params.j0 * params.h1 - params.j1 * params.h0;
    const std::size_t n = static_cast<std::size_t>(r_max) + 1;
    std::vector<cd> q(n), g(n), f(2 * n - 1);

    mode_sum(params, when, [&](const ModeFactors& mf, double phi,
                               double weight) {
        const double c1 = params.j1 * std::cos(phi) + params.h1;
        // Coefficient of i sin(r phi) shared by q and g.
        const double qg_odd = -d * mf.delta * mf.tau * mf.s4;
        // cos / sin coefficients of f.
        const double f_even =
            mf.tau *
            (params.j1 * d * mf.delta * mf.delta * mf.s2 + 2.0 * mf.c0);
        const double f_odd =
            mf.tau * mf.delta * (params.j0 - 2.0 * d * c1 * mf.s2);

        const double cphi = std::cos(phi);
        double cr = 1.0, cr_prev = cphi;  // cos(0), cos(-phi)
        double sr = 0.0, sr_prev = -std::sin(phi);
        for (int r = 0; r <= r_max; ++r) {
            q[static_cast<std::size_t>(r)] +=
                weight * cd(2.0 * cr, qg_odd * sr);
            g[static_cast<std::size_t>(r)] +=
                weight * cd(-2.0 * cr, qg_odd * sr);
            f[static_cast<std::size_t>(r_max + r)] +=
                weight * cd(f_even * cr + f_odd * sr, 0.0);
            if (r > 0)
                f[static_cast<std::size_t>(r_max - r)] +=
                    weight * cd(f_even * cr - f_odd * sr, 0.0);
            // Chebyshev-style recurrence for cos/sin of (r+1) phi.
            const double cn = 2.0 * cphi * cr - cr_prev;
            const double sn = 2.0 * cphi * sr - sr_prev;
            cr_prev = cr;
            sr_prev = sr;
            cr = cn;
            sr = sn;
        }
    });

    const double inv_n = 1.0 / params.n_spins;
    for (auto& v : q) v *= inv_n;
    for (auto& v : g) v *= inv_n;
    for (auto& v : f) v *= inv_n;
    return ContractionSet(r_max, std::move(q), std::move(g), std::move(f));
}

}  // namespace xyq
