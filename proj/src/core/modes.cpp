#include "core/modes.hpp"

#include <cmath>
#include <complex>

#include "core/guards.hpp"

namespace xyq {

namespace {

using cd = std::complex<double>;

void require_nonnegative_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw usage_error("time must be a finite nonnegative real");
}

}  // namespace

ModeMatrix mode_hamiltonian(double j, double h, double gamma,
                            const ModeAngle& mode) {
    const double c = std::cos(mode.phi);
    const double delta = 2.0 * gamma * std::sin(mode.phi);
    ModeMatrix m = ModeMatrix::Zero();
    m(0, 0) = 2.0 * h;
    m(0, 1) = cd(0.0, -j * delta);
    m(1, 0) = cd(0.0, j * delta);
    m(1, 1) = -4.0 * j * c - 2.0 * h;
    m(2, 2) = -2.0 * j * c;
    m(3, 3) = -2.0 * j * c;
    return m;
}

ModeMatrix initial_density(const QuenchParams& params, const ModeAngle& mode) {
    const double g0 = dispersion(params.j0, params.h0, params.gamma, mode.phi);
    if (detail::degenerate_mode(params.beta, g0)) {
        // The whole mode space is degenerate at this point (the 2x2 block
        // collapses to a multiple of the identity and the single-occupation
        // levels coincide with it), so the zero-temperature limit is the
        // maximally mixed mode state.
        return ModeMatrix::Identity() / 4.0;
    }
    const double c0 = params.j0 * std::cos(mode.phi) + params.h0;
    const double delta = 2.0 * params.gamma * std::sin(mode.phi);
    const double w = detail::boltzmann_ratio(params.beta, g0);
    const double e2 = detail::exp_neg2(params.beta, g0);

    ModeMatrix m = ModeMatrix::Zero();
    m(0, 0) = 1.0 - 2.0 * w * (g0 + c0);
    m(1, 1) = 1.0 - 2.0 * w * (g0 - c0);
    m(0, 1) = cd(0.0, delta * params.j0 * w);
    m(1, 0) = std::conj(m(0, 1));
    m(2, 2) = e2;
    m(3, 3) = e2;
    return m / (m(0, 0).real() + m(1, 1).real() + 2.0 * e2);
}

ModeMatrix propagator(const QuenchParams& params, const ModeAngle& mode,
                      double t) {
    require_nonnegative_time(t);
    const double c = std::cos(mode.phi);
    const double c1 = params.j1 * c + params.h1;
    const double delta = 2.0 * params.gamma * std::sin(mode.phi);
    const double g1 = dispersion(params.j1, params.h1, params.gamma, mode.phi);

    // sin(2 t Gamma)/Gamma and cos(2 t Gamma), guarded at small Gamma.
    const double sr = detail::sin_ratio(2.0 * t, g1);
    const double cs = g1 > detail::gamma_eps
                          ? std::cos(2.0 * t * g1)
                          : 1.0 - 2.0 * t * t * g1 * g1;
    const cd phase = std::polar(1.0, 2.0 * t * params.j1 * c);

    ModeMatrix u = ModeMatrix::Zero();
    u(0, 0) = phase * (cd(cs, -c1 * sr));
    u(0, 1) = phase * cd(-params.j1 * delta * sr / 2.0, 0.0);
    u(1, 0) = phase * cd(params.j1 * delta * sr / 2.0, 0.0);
    u(1, 1) = phase * (cd(cs, c1 * sr));
    u(2, 2) = phase;
    u(3, 3) = phase;
    return u;
}

ModeMatrix evolved_density(const QuenchParams& params, const ModeAngle& mode,
                           double t) {
    require_nonnegative_time(t);
    const double g0 = dispersion(params.j0, params.h0, params.gamma, mode.phi);
    if (detail::degenerate_mode(params.beta, g0)) {
        return ModeMatrix::Identity() / 4.0;  // invariant under any unitary
    }
    const double c0 = params.j0 * std::cos(mode.phi) + params.h0;
    const double c1 = params.j1 * std::cos(mode.phi) + params.h1;
    const double delta = 2.0 * params.gamma * std::sin(mode.phi);
    const double g1 = dispersion(params.j1, params.h1, params.gamma, mode.phi);
    const double d = params.j0 * params.h1 - params.j1 * params.h0;
    const double w = detail::boltzmann_ratio(params.beta, g0);
    const double e2 = detail::exp_neg2(params.beta, g0);

    // sin^2(2 t Gamma1)/Gamma1^2 and sin(4 t Gamma1)/Gamma1 stay finite at
    // small Gamma1 through the guarded ratio.
    const double sr = detail::sin_ratio(2.0 * t, g1);
    const double s2 = sr * sr;
    const double s4 = detail::sin_ratio(4.0 * t, g1);

    const double osc = w * params.j1 * d * delta * delta * s2;

    ModeMatrix m = ModeMatrix::Zero();
    m(0, 0) = 1.0 - 2.0 * w * (g0 + c0) - osc;
    m(1, 1) = 1.0 - 2.0 * w * (g0 - c0) + osc;
    m(0, 1) = delta * w * cd(d * s4, params.j0 - 2.0 * d * c1 * s2);
    m(1, 0) = std::conj(m(0, 1));
    m(2, 2) = e2;
    m(3, 3) = e2;
    return m / (m(0, 0).real() + m(1, 1).real() + 2.0 * e2);
}

}  // namespace xyq
