#pragma once

#include <complex>
#include <vector>

#include "core/model.hpp"

namespace xyq {

/// Either a finite evaluation time or the dephased t -> infinity limit.
struct TimeSpec {
    bool asymptotic = false;
    double t = 0.0;

    static TimeSpec at_time(double t) {
        if (!(t >= 0.0) || !std::isfinite(t))
            throw usage_error("time must be a finite nonnegative real");
        return {false, t};
    }
    static TimeSpec infinite() { return {true, 0.0}; }
};

/// Wick contraction values between the Majorana-like operators
/// A = b^dag + b and B = b^dag - b, as functions of the site separation.
/// f is kept over the symmetric range [-r_max, r_max] because
/// <B_l A_m> is not even in m - l; <A_l B_m> follows by anticommutation
/// as -f(-(m-l)).
class ContractionSet {
public:
    ContractionSet(int r_max, std::vector<std::complex<double>> q,
                   std::vector<std::complex<double>> g,
                   std::vector<std::complex<double>> f);

    int r_max() const { return r_max_; }

    /// <A_l A_{l+r}>, r in [0, r_max]; q(0) = 1 by the operator identity.
    std::complex<double> q(int r) const;
    /// <B_l B_{l+r}>, r in [0, r_max]; g(0) = -1.
    std::complex<double> g(int r) const;
    /// <B_l A_{l+r}>, r in [-r_max, r_max].
    std::complex<double> f(int r) const;
    /// <A_l B_{l+r}> = -f(-r), r in [-r_max, r_max].
    std::complex<double> p(int r) const { return -f(-r); }

private:
    int r_max_;
    std::vector<std::complex<double>> q_;  // index r
    std::vector<std::complex<double>> g_;  // index r
    std::vector<std::complex<double>> f_;  // index r + r_max
};

/// Magnetization per spin along z, in [-1/2, 1/2].
double magnetization(const QuenchParams& params, const TimeSpec& when);

/// All contraction values up to separation r_max (>= 1).
ContractionSet contractions(const QuenchParams& params, const TimeSpec& when,
                            int r_max);

}  // namespace xyq
