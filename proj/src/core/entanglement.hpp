#pragma once

#include "core/correlators.hpp"
#include "core/pfaffian.hpp"

namespace xyq {

/// The six independent real entries of the two-site reduced density matrix
/// (X form): nonzero elements sit on the diagonal and the anti-diagonal.
struct TwoSiteState {
    double r11, r22, r33, r44;  // diagonal
    double r23, r14;            // anti-diagonal
};

/// Builds the X-form state from the magnetization and the spin correlators
/// of a translation-invariant chain.
TwoSiteState two_site_density(double mz, double sx, double sy, double sz);

/// Wootters concurrence of an X state, in [0, 1].
double concurrence(const TwoSiteState& state);

/// Full pipeline: C(i, i+r) for the given parameters and time spec.
double concurrence_at(const QuenchParams& params, const TimeSpec& when, int r);

}  // namespace xyq
