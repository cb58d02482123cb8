#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "core/modes.hpp"

namespace xyq::oracle {

/// Propagator obtained by numerically exponentiating the post-quench
/// sub-Hamiltonian (scaling and squaring with a Taylor series); serves as
/// the independent check of the closed-form propagator.
ModeMatrix integrate_mode_propagator(const QuenchParams& params,
                                     const ModeAngle& mode, double t);

/// Matrix exponential used by the mode oracle; exposed for tests.
Eigen::Matrix4cd expm(const Eigen::Matrix4cd& a);

/// Matrix-free application of the periodic-chain spin Hamiltonian on the
/// full 2^n space; the ED routines below are built on it.
class SpinChainOp {
public:
    SpinChainOp(double gamma, double j, double h, int n);

    std::int64_t dim() const { return dim_; }
    void apply(const std::complex<double>* x, std::complex<double>* y) const;
    void apply(const double* x, double* y) const;
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

    /// Upper bound on the spectral radius (Gershgorin).
    double norm_bound() const;

    Eigen::MatrixXd dense() const;

private:
    int n_;
    double j_, gamma_;
    std::int64_t dim_;
    std::vector<double> diag_;
};

/// Orthonormal basis of the ground space (all eigenvectors within deg_tol
/// of the lowest eigenvalue), via deflated Lanczos with full
/// reorthogonalization.  Returns the basis and the ground energy.
std::pair<std::vector<Eigen::VectorXd>, double> ground_space(
    const SpinChainOp& op, double deg_tol = 1e-9);

/// e^{-i H t} psi by Krylov (Lanczos) propagation with sub-stepping;
/// accurate to machine precision for the sizes used here.
Eigen::VectorXcd krylov_propagate(const SpinChainOp& op, Eigen::VectorXcd psi,
                                  double t);

/// Two-site reduced density matrix of sites (1, 1+r) from full exact
/// diagonalization: thermal state of (j0, h0), evolved under (j1, h1).
Eigen::Matrix4cd ed_two_site_density(double gamma, double j0, double j1,
                                     double h0, double h1, double beta, int n,
                                     double t, int r);

/// Concurrence from the ED pipeline; n is limited to 12 (the state space
/// is 2^n and the thermal branch diagonalizes densely).
double ed_concurrence(double gamma, double j0, double j1, double h0, double h1,
                      double beta, int n, double t, int r);

/// Generic Wootters concurrence of an arbitrary two-qubit density matrix
/// (eigenvalues of rho * rho_tilde); the independent route checked against
/// the X-state closed form.
double wootters_general(const Eigen::Matrix4cd& rho);

struct SuiteReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;
};

/// Named self-check suites: "mode-propagator", "ed-small-n",
/// "wootters-xstate".
SuiteReport run_suite(const std::string& name);

std::vector<std::string> suite_names();

}  // namespace xyq::oracle
