#include "core/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace xyq {

namespace {

constexpr double trace_tol = 1e-8;
constexpr double clamp_tol = 1e-10;

// Roundoff may push a structurally nonnegative value slightly below zero;
// anything beyond the clamp window indicates a pipeline bug.
double clamped(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v >= -clamp_tol) return 0.0;
    throw numeric_error(std::string(what) + " negative beyond tolerance");
}

}  // namespace

TwoSiteState two_site_density(double mz, double sx, double sy, double sz) {
    TwoSiteState s{};
    s.r11 = mz + sz + 0.25;
    s.r22 = 0.25 - sz;
    s.r33 = 0.25 - sz;
    s.r44 = -mz + sz + 0.25;
    s.r23 = sx + sy;
    s.r14 = sx - sy;
    const double trace = s.r11 + s.r22 + s.r33 + s.r44;
    if (std::abs(trace - 1.0) > trace_tol)
        throw numeric_error("two-site state trace deviates from 1");
    return s;
}

double concurrence(const TwoSiteState& state) {
    const double uu = clamped(state.r11, "rho_11") * clamped(state.r44, "rho_44");
    const double ww = clamped(state.r22, "rho_22") * clamped(state.r33, "rho_33");
    const double u = std::sqrt(clamped(uu, "rho_11*rho_44"));
    const double w = std::sqrt(clamped(ww, "rho_22*rho_33"));
    const double v = std::abs(state.r14);
    const double x = std::abs(state.r23);

    std::array<double, 4> lambda = {u + v, w + x, std::abs(u - v),
                                    std::abs(w - x)};
    std::sort(lambda.begin(), lambda.end(), std::greater<double>());
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::max(0.0, c);
}

double concurrence_at(const QuenchParams& params, const TimeSpec& when,
                      int r) {
    if (r < 1) throw usage_error("separation must be >= 1");
    const double mz = magnetization(params, when);
    const ContractionSet cs = contractions(params, when, r);
    const SpinCorrelators sc = spin_correlators(cs, r);
    return concurrence(two_site_density(mz, sc.sx, sc.sy, sc.sz));
}

}  // namespace xyq
