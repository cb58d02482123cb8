#include "core/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "core/entanglement.hpp"

namespace xyq::oracle {

namespace {

using cd = std::complex<double>;

void check_ed_args(int n, double beta, double t, int r) {
    if (n < 4) throw usage_error("ed chain needs n >= 4");
    if (n > 12) throw resource_error("ed state space is 2^n; n <= 12 required");
    if (r < 1 || r >= n / 2)
        throw usage_error("ed separation must satisfy 1 <= r < n/2");
    if (!(t >= 0.0) || !std::isfinite(t))
        throw usage_error("time must be a finite nonnegative real");
    if (std::isnan(beta) || beta < 0.0)
        throw usage_error("beta must be >= 0 or infinite");
}

}  // namespace

Eigen::Matrix4cd expm(const Eigen::Matrix4cd& a) {
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5)
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Eigen::Matrix4cd scaled = a / std::pow(2.0, squarings);

    Eigen::Matrix4cd result = Eigen::Matrix4cd::Identity();
    Eigen::Matrix4cd term = Eigen::Matrix4cd::Identity();
    for (int k = 1; k <= 32; ++k) {
        term = (term * scaled / static_cast<double>(k)).eval();
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-20) break;
    }
    for (int i = 0; i < squarings; ++i) result = (result * result).eval();
    return result;
}

ModeMatrix integrate_mode_propagator(const QuenchParams& params,
                                     const ModeAngle& mode, double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw usage_error("time must be a finite nonnegative real");
    const ModeMatrix h =
        mode_hamiltonian(params.j1, params.h1, params.gamma, mode);
    return expm(cd(0.0, -t) * h);
}

// ---------------------------------------------------------------------------
// Matrix-free spin Hamiltonian

SpinChainOp::SpinChainOp(double gamma, double j, double h, int n)
    : n_(n), j_(j), gamma_(gamma) {
    if (n < 2) throw usage_error("SpinChainOp requires n >= 2");
    if (n > 12) throw resource_error("SpinChainOp limited to n <= 12");
    dim_ = std::int64_t(1) << n;
    diag_.resize(static_cast<std::size_t>(dim_));
    for (std::int64_t b = 0; b < dim_; ++b) {
        // bit 0 means spin up (sigma^z = +1); site 0 is the top bit.
        int ups = 0;
        for (int s = 0; s < n; ++s)
            if (((b >> (n - 1 - s)) & 1) == 0) ++ups;
        diag_[static_cast<std::size_t>(b)] = -h * (2.0 * ups - n);
    }
}

template <class Scalar>
static void apply_impl(const std::vector<double>& diag, int n, double j,
                       double gamma, std::int64_t dim, const Scalar* x,
                       Scalar* y) {
    for (std::int64_t b = 0; b < dim; ++b)
        y[b] = diag[static_cast<std::size_t>(b)] * x[b];
    // Each bond flips its two bits; the matrix element is -J when the bits
    // differ and -J*gamma when they are equal.
    for (int s = 0; s < n; ++s) {
        const int s2 = (s + 1) % n;
        const std::int64_t m1 = std::int64_t(1) << (n - 1 - s);
        const std::int64_t m2 = std::int64_t(1) << (n - 1 - s2);
        const std::int64_t mask = m1 | m2;
        for (std::int64_t b = 0; b < dim; ++b) {
            const bool equal_bits = ((b & m1) != 0) == ((b & m2) != 0);
            y[b ^ mask] += (equal_bits ? -j * gamma : -j) * x[b];
        }
    }
}

void SpinChainOp::apply(const cd* x, cd* y) const {
    apply_impl(diag_, n_, j_, gamma_, dim_, x, y);
}

void SpinChainOp::apply(const double* x, double* y) const {
    apply_impl(diag_, n_, j_, gamma_, dim_, x, y);
}

Eigen::VectorXd SpinChainOp::apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y(dim_);
    apply(x.data(), y.data());
    return y;
}

double SpinChainOp::norm_bound() const {
    double dmax = 0.0;
    for (const double d : diag_) dmax = std::max(dmax, std::abs(d));
    return dmax + n_ * std::max(std::abs(j_), std::abs(j_ * gamma_));
}

Eigen::MatrixXd SpinChainOp::dense() const {
    Eigen::MatrixXd m(dim_, dim_);
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(dim_);
    for (std::int64_t c = 0; c < dim_; ++c) {
        unit[c] = 1.0;
        m.col(c) = apply(unit);
        unit[c] = 0.0;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Deflated Lanczos for the ground space

namespace {

// Lowest eigenpair of op restricted to the complement of `deflate`.
// Full reorthogonalization keeps the basis clean at these sizes.
std::pair<double, Eigen::VectorXd> lanczos_lowest(
    const SpinChainOp& op, const std::vector<Eigen::VectorXd>& deflate,
    std::mt19937_64& rng) {
    const std::int64_t dim = op.dim();
    const int max_steps = static_cast<int>(
        std::min<std::int64_t>(dim - static_cast<std::int64_t>(deflate.size()),
                               400));
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta;
    Eigen::VectorXd v(dim);
    for (std::int64_t i = 0; i < dim; ++i) v[i] = gauss(rng);
    for (const auto& d : deflate) v -= d.dot(v) * d;
    v.normalize();
    basis.push_back(v);

    auto ritz = [&](Eigen::VectorXd* vec) {
        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                t(i, i + 1) = beta[static_cast<std::size_t>(i)];
                t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        if (vec) {
            vec->setZero(dim);
            for (int i = 0; i < m; ++i)
                *vec += es.eigenvectors()(i, 0) * basis[static_cast<std::size_t>(i)];
            vec->normalize();
        }
        return es.eigenvalues()[0];
    };

    double prev = std::numeric_limits<double>::max();
    for (int step = 0; step < max_steps; ++step) {
        Eigen::VectorXd w = op.apply(basis.back());
        alpha.push_back(basis.back().dot(w));
        // Full reorthogonalization against the Krylov basis and the
        // deflated directions.
        for (const auto& d : deflate) w -= d.dot(w) * d;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) w -= q.dot(w) * q;
        const double b = w.norm();
        if (step >= 4 && step % 5 == 0) {
            const double theta = ritz(nullptr);
            if (std::abs(prev - theta) <
                1e-13 * std::max(1.0, std::abs(theta)))
                break;
            prev = theta;
        }
        if (b < 1e-12) break;  // invariant subspace exhausted
        beta.push_back(b);
        basis.push_back(w / b);
    }

    Eigen::VectorXd ground;
    const double theta = ritz(&ground);
    return {theta, ground};
}

}  // namespace

std::pair<std::vector<Eigen::VectorXd>, double> ground_space(
    const SpinChainOp& op, double deg_tol) {
    std::mt19937_64 rng(0xE1D5EEDULL);
    std::vector<Eigen::VectorXd> found;
    double e0 = 0.0;
    for (int round = 0; round < 16; ++round) {
        auto [theta, vec] = lanczos_lowest(op, found, rng);
        const double scale = std::max(1.0, std::abs(theta));
        if (found.empty()) {
            e0 = theta;
        } else if (theta < e0 - deg_tol * scale) {
            // A deflation round uncovered a lower state: restart the
            // collection from it.
            found.clear();
            e0 = theta;
        } else if (theta - e0 > deg_tol * scale) {
            break;  // ground space complete
        }
        for (const auto& d : found) vec -= d.dot(vec) * d;
        const double norm = vec.norm();
        if (norm < 1e-8) break;
        found.push_back(vec / norm);
        if (static_cast<std::int64_t>(found.size()) >= op.dim()) break;
    }
    return {std::move(found), e0};
}

// ---------------------------------------------------------------------------
// Krylov propagation

Eigen::VectorXcd krylov_propagate(const SpinChainOp& op, Eigen::VectorXcd psi,
                                  double t) {
    if (t == 0.0) return psi;
    constexpr int max_m = 60;
    const int substeps =
        std::max(1, static_cast<int>(std::ceil(op.norm_bound() * t / 15.0)));
    const double dt = t / substeps;
    const std::int64_t dim = op.dim();

    for (int step = 0; step < substeps; ++step) {
        const double norm0 = psi.norm();
        if (norm0 == 0.0) return psi;
        std::vector<Eigen::VectorXcd> basis;
        basis.push_back(psi / norm0);
        std::vector<double> alpha, beta;
        const int m_limit =
            static_cast<int>(std::min<std::int64_t>(dim, max_m));
        for (int jstep = 0; jstep < m_limit; ++jstep) {
            Eigen::VectorXcd w(dim);
            op.apply(basis.back().data(), w.data());
            alpha.push_back(basis.back().dot(w).real());
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& q : basis) w -= q.dot(w) * q;
            const double b = w.norm();
            if (b < 1e-13 || jstep + 1 == m_limit) break;  // happy breakdown
            beta.push_back(b);
            basis.push_back(w / b);
        }
        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            tmat(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                tmat(i, i + 1) = beta[static_cast<std::size_t>(i)];
                tmat(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tmat);
        Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(m);
        for (int i = 0; i < m; ++i) {
            cd acc(0.0, 0.0);
            for (int k = 0; k < m; ++k)
                acc += es.eigenvectors()(i, k) *
                       std::polar(1.0, -es.eigenvalues()[k] * dt) *
                       es.eigenvectors()(0, k);
            coeff[i] = acc;
        }
        psi.setZero();
        for (int i = 0; i < m; ++i)
            psi += norm0 * coeff[i] * basis[static_cast<std::size_t>(i)];
    }
    return psi;
}

// ---------------------------------------------------------------------------
// Thermal two-site RDM

namespace {

// Accumulates weight * partial trace of |psi><psi| over all sites except
// (0, r) into rdm; site 0 is the most significant bit.
void accumulate_pair_rdm(Eigen::Matrix4cd& rdm, const Eigen::VectorXcd& psi,
                         int n, int r, double weight) {
    const int pos1 = n - 1 - r;  // bit position of site r
    const std::int64_t rest_dim = std::int64_t(1) << (n - 2);
    const std::int64_t lo_mask = (std::int64_t(1) << pos1) - 1;
    for (std::int64_t rest = 0; rest < rest_dim; ++rest) {
        const std::int64_t hi = rest >> pos1;
        const std::int64_t lo = rest & lo_mask;
        std::int64_t idx[4];
        for (int a0 = 0; a0 < 2; ++a0)
            for (int a1 = 0; a1 < 2; ++a1)
                idx[2 * a0 + a1] = (std::int64_t(a0) << (n - 1)) |
                                   (hi << (pos1 + 1)) |
                                   (std::int64_t(a1) << pos1) | lo;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                rdm(a, b) += weight * psi[idx[a]] * std::conj(psi[idx[b]]);
    }
}

}  // namespace

Eigen::Matrix4cd ed_two_site_density(double gamma, double j0, double j1,
                                     double h0, double h1, double beta, int n,
                                     double t, int r) {
    check_ed_args(n, beta, t, r);
    const SpinChainOp h_initial(gamma, j0, h0, n);
    const bool evolve = t > 0.0 && !(j0 == j1 && h0 == h1);

    std::vector<Eigen::VectorXcd> states;
    std::vector<double> weights;
    if (std::isinf(beta)) {
        auto [vectors, e0] = ground_space(h_initial);
        (void)e0;
        for (auto& v : vectors) {
            states.push_back(v.cast<cd>());
            weights.push_back(1.0 / static_cast<double>(vectors.size()));
        }
    } else {
        // Full thermal ensemble needs the whole spectrum; dense
        // diagonalization is exact and affordable at these sizes.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h_initial.dense());
        const Eigen::VectorXd& e = es.eigenvalues();
        double z = 0.0;
        for (Eigen::Index k = 0; k < e.size(); ++k)
            z += std::exp(-beta * (e[k] - e[0]));
        for (Eigen::Index k = 0; k < e.size(); ++k) {
            const double w = std::exp(-beta * (e[k] - e[0])) / z;
            if (w > 1e-16) {
                states.push_back(es.eigenvectors().col(k).cast<cd>());
                weights.push_back(w);
            }
        }
    }

    Eigen::Matrix4cd rdm = Eigen::Matrix4cd::Zero();
    const SpinChainOp h_final(gamma, j1, h1, n);
    for (std::size_t k = 0; k < states.size(); ++k) {
        const Eigen::VectorXcd psi =
            evolve ? krylov_propagate(h_final, states[k], t) : states[k];
        accumulate_pair_rdm(rdm, psi, n, r, weights[k]);
    }
    return rdm;
}

double ed_concurrence(double gamma, double j0, double j1, double h0, double h1,
                      double beta, int n, double t, int r) {
    return wootters_general(
        ed_two_site_density(gamma, j0, j1, h0, h1, beta, n, t, r));
}

double wootters_general(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
        throw usage_error("wootters_general: input is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 ||
        std::abs(rho.trace().imag()) > 1e-8)
        throw usage_error("wootters_general: input trace is not 1");
    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
    if (es.eigenvalues().minCoeff() < -1e-8)
        throw usage_error("wootters_general: input is not positive");

    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();  // sigma_y x sigma_y
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const Eigen::Matrix4cd prod = herm * flip * herm.conjugate() * flip;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> ces(prod);

    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i)
        lambda[static_cast<std::size_t>(i)] =
            std::sqrt(std::max(0.0, ces.eigenvalues()[i].real()));
    std::sort(lambda.begin(), lambda.end(), std::greater<double>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

// ---------------------------------------------------------------------------
// Self-check suites

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

SuiteReport suite_mode_propagator() {
    SuiteReport rep;
    rep.name = "mode-propagator";
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> coupling(-2.0, 2.0);
    std::uniform_real_distribution<double> time(0.0, 10.0);

    double max_u = 0.0, max_rho = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        QuenchParams p;
        p.gamma = u01(rng);
        p.j0 = coupling(rng);
        p.j1 = coupling(rng);
        p.h0 = coupling(rng);
        p.h1 = coupling(rng);
        p.beta = trial % 4 == 0 ? beta_infinite : 3.0 * u01(rng);
        p.n_spins = 1000;
        const ModeAngle mode{1, u01(rng) * std::numbers::pi * 0.999 + 1e-3};
        const double t = time(rng);

        const ModeMatrix closed = propagator(p, mode, t);
        const ModeMatrix integrated = integrate_mode_propagator(p, mode, t);
        max_u = std::max(max_u, (closed - integrated).cwiseAbs().maxCoeff());

        const ModeMatrix direct = evolved_density(p, mode, t);
        const ModeMatrix conjugated =
            closed * initial_density(p, mode) * closed.adjoint();
        max_rho =
            std::max(max_rho, (direct - conjugated).cwiseAbs().maxCoeff());
    }
    rep.pass = max_u < 1e-10 && max_rho < 1e-10;
    rep.lines.push_back("closed-form vs integrated propagator: max deviation " +
                        fmt(max_u) + " (tolerance 1e-10)");
    rep.lines.push_back("closed-form vs conjugated density: max deviation " +
                        fmt(max_rho) + " (tolerance 1e-10)");
    return rep;
}

SuiteReport suite_wootters_xstate() {
    SuiteReport rep;
    rep.name = "wootters-xstate";
    std::mt19937_64 rng(77150331);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    double max_dev = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        double d[4];
        double sum = 0.0;
        for (double& v : d) {
            v = u01(rng) + 1e-6;
            sum += v;
        }
        for (double& v : d) v /= sum;
        const double r23 =
            (2.0 * u01(rng) - 1.0) * std::sqrt(d[1] * d[2]) * 0.999;
        const double r14 =
            (2.0 * u01(rng) - 1.0) * std::sqrt(d[0] * d[3]) * 0.999;

        const TwoSiteState state{d[0], d[1], d[2], d[3], r23, r14};
        Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
        rho(0, 0) = d[0];
        rho(1, 1) = d[1];
        rho(2, 2) = d[2];
        rho(3, 3) = d[3];
        rho(1, 2) = rho(2, 1) = r23;
        rho(0, 3) = rho(3, 0) = r14;

        const double closed = concurrence(state);
        const double generic = wootters_general(rho);
        max_dev = std::max(max_dev, std::abs(closed - generic));
    }
    rep.pass = max_dev < 1e-10;
    rep.lines.push_back(
        "X-state closed form vs generic Wootters: max deviation " +
        fmt(max_dev) + " (tolerance 1e-10)");
    return rep;
}

SuiteReport suite_ed_small_n() {
    SuiteReport rep;
    rep.name = "ed-small-n";
    QuenchParams p;  // gamma=1, static J=h=1, zero temperature
    const double analytic = concurrence_at(p, TimeSpec::infinite(), 1);
    const double ed6 =
        ed_concurrence(1.0, 1.0, 1.0, 1.0, 1.0, beta_infinite, 6, 0.0, 1);
    const double ed10 =
        ed_concurrence(1.0, 1.0, 1.0, 1.0, 1.0, beta_infinite, 10, 0.0, 1);
    const double dev6 = std::abs(ed6 - analytic);
    const double dev10 = std::abs(ed10 - analytic);
    rep.pass = dev10 < dev6 && dev10 < 0.05;
    rep.lines.push_back("analytic C(i,i+1) = " + fmt(analytic));
    rep.lines.push_back("|ED(n=6) - analytic| = " + fmt(dev6));
    rep.lines.push_back("|ED(n=10) - analytic| = " + fmt(dev10) +
                        " (must shrink with n and stay below 5e-2)");
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"mode-propagator", "ed-small-n", "wootters-xstate"};
}

SuiteReport run_suite(const std::string& name) {
    if (name == "mode-propagator") return suite_mode_propagator();
    if (name == "ed-small-n") return suite_ed_small_n();
    if (name == "wootters-xstate") return suite_wootters_xstate();
    throw usage_error("unknown oracle suite '" + name +
                      "'; valid: mode-propagator, ed-small-n, wootters-xstate");
}

}  // namespace xyq::oracle
