#pragma once

#include <Eigen/Dense>

#include "core/model.hpp"

namespace xyq {

/// 4x4 complex matrix over one momentum mode in the fixed basis
/// {vac, pair, single_p, single_-p}.  Used for the sub-Hamiltonian, the
/// propagator, and the (normalized) mode density matrices.
using ModeMatrix = Eigen::Matrix4cd;

/// Sub-Hamiltonian of one mode: a Hermitian 2x2 block over {vac, pair}
/// plus the two decoupled single-occupation levels.
ModeMatrix mode_hamiltonian(double j, double h, double gamma,
                            const ModeAngle& mode);

/// Thermal state of the pre-quench sub-Hamiltonian, normalized to unit
/// trace.  At zero temperature a degenerate mode (dispersion below the
/// guard) collapses to the equal mixture over its ground space.
ModeMatrix initial_density(const QuenchParams& params, const ModeAngle& mode);

/// Closed-form propagator under the post-quench parameters; unitary.
ModeMatrix propagator(const QuenchParams& params, const ModeAngle& mode,
                      double t);

/// Closed-form evolved mode state, normalized to unit trace; equals
/// propagator * initial_density * propagator^dagger.
ModeMatrix evolved_density(const QuenchParams& params, const ModeAngle& mode,
                           double t);

}  // namespace xyq
