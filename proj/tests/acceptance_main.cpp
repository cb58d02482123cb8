// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Tolerances are pinned in code next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "core/entanglement.hpp"
#include "core/oracle.hpp"
#include "core/pfaffian.hpp"

using namespace xyq;
using cd = std::complex<double>;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %02d %-36s %s\n", pass ? "PASS" : "FAIL", id, name,
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

std::string fmt(const char* spec, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), spec, a, b, c);
    return buf;
}

double static_concurrence(double gamma, double lambda, double kt, int r = 1,
                          int n = 1000) {
    const auto p =
        QuenchParams::from_kt(gamma, lambda, lambda, 1.0, 1.0, kt, n);
    return concurrence_at(p, TimeSpec::infinite(), r);
}

// --------------------------------------------------------------------------

void criterion_1_mode_oracle() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
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
        const ModeAngle mode{1, 1e-3 + u01(rng) * (std::numbers::pi - 1e-3)};
        const double t = time(rng);
        const ModeMatrix closed = propagator(p, mode, t);
        max_u = std::max(
            max_u, (closed - oracle::integrate_mode_propagator(p, mode, t))
                       .cwiseAbs()
                       .maxCoeff());
        max_rho = std::max(
            max_rho,
            (evolved_density(p, mode, t) -
             closed * initial_density(p, mode) * closed.adjoint())
                .cwiseAbs()
                .maxCoeff());
    }
    const double elapsed = seconds_since(start);
    report(1, "mode-oracle equivalence",
           max_u < 1e-10 && max_rho < 1e-10 && elapsed < 5.0,
           fmt("max dev U %.2e, rho %.2e, %.2fs", max_u, max_rho, elapsed));
}

void criterion_2_ratio_only() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const double gamma : {0.0, 0.5, 1.0}) {
        for (int i = 0; i <= 300; ++i) {
            const double lambda = 0.01 * i;
            const auto a =
                QuenchParams::from_kt(gamma, lambda, lambda, 1, 1, 0, 1000);
            const auto b = QuenchParams::from_kt(gamma, 4 * lambda, 4 * lambda,
                                                 4, 4, 0, 1000);
            worst = std::max(
                worst, std::abs(concurrence_at(a, TimeSpec::infinite(), 1) -
                                concurrence_at(b, TimeSpec::infinite(), 1)));
        }
    }
    const double elapsed = seconds_since(start);
    report(2, "ratio-only T=0 law", worst < 1e-8 && elapsed < 30.0,
           fmt("max |C(J,h)-C(4J,4h)| = %.2e, %.1fs", worst, elapsed));
}

void criterion_3_ising_peak() {
    double best = -1.0, arg = 0.0;
    for (int i = 0; i <= 300; ++i) {
        const double lambda = 0.01 * i;
        const double c = static_concurrence(1.0, lambda, 0.0);
        if (c > best) {
            best = c;
            arg = lambda;
        }
    }
    const bool pass = arg >= 0.9 && arg <= 1.2;
    report(3, "Ising peak location in [0.9, 1.2]", pass,
           fmt("argmax = %.2f (C = %.4f)", arg, best) +
               (pass ? ""
                     : "; the model's peak verified against the n=8..12 ED"
                       " oracle sits below this window"));
}

void criterion_4_map_maximum() {
    // Asymptotic C(i,i+1) over (J0, J1) in [0,4]^2, step 0.04.
    double best = -1.0, bj0 = 0.0, bj1 = 0.0;
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            QuenchParams p;
            p.j0 = 0.04 * i;
            p.j1 = 0.04 * j;
            const double c = concurrence_at(p, TimeSpec::infinite(), 1);
            if (c > best) {
                best = c;
                bj0 = p.j0;
                bj1 = p.j1;
            }
        }
    }
    const bool pass = std::abs(best - 0.26) <= 0.03 &&
                      std::abs(bj0 - 0.88) <= 0.08 &&
                      std::abs(bj1 - 0.88) <= 0.08;
    report(4, "coupling-map maximum 0.26@(0.88,0.88)", pass,
           fmt("max %.4f at (%.2f, %.2f)", best, bj0, bj1));
}

void criterion_5_range3() {
    double worst = 0.0;
    for (int i = 0; i <= 50; ++i)
        worst = std::max(worst, static_concurrence(1.0, 0.1 * i, 0.0, 3));
    report(5, "C(i,i+3) vanishes at T=0", worst == 0.0,
           fmt("max over grid = %.2e", worst));
}

void criterion_6_partial_anisotropy() {
    std::vector<double> c(301);
    for (int i = 0; i <= 300; ++i)
        c[static_cast<std::size_t>(i)] = static_concurrence(0.5, 0.01 * i, 0.0);
    // interior local extrema of the sampled curve
    double max_loc = -1.0, min_loc = -1.0;
    for (int i = 1; i < 300; ++i) {
        const auto v = c[static_cast<std::size_t>(i)];
        if (v > c[static_cast<std::size_t>(i - 1)] &&
            v >= c[static_cast<std::size_t>(i + 1)] && max_loc < 0 &&
            0.01 * i > 0.3)
            max_loc = 0.01 * i;
        if (max_loc > 0 && v < c[static_cast<std::size_t>(i - 1)] &&
            v <= c[static_cast<std::size_t>(i + 1)] && min_loc < 0)
            min_loc = 0.01 * i;
    }
    double plateau_min = 1.0;
    for (int i = 200; i <= 300; ++i)
        plateau_min = std::min(plateau_min, c[static_cast<std::size_t>(i)]);
    const bool pass = std::abs(max_loc - 0.9) <= 0.1 &&
                      std::abs(min_loc - 1.1) <= 0.1 && plateau_min > 0.01;
    report(6, "gamma=0.5 critical structure", pass,
           fmt("max at %.2f, min at %.2f, plateau >= %.3f", max_loc, min_loc,
               plateau_min));
}

void criterion_7_isotropic_frozen() {
    double worst = 0.0;
    for (const auto& [j0, kt] : {std::pair{1.2, 0.0}, std::pair{0.7, 0.3}}) {
        const auto base = QuenchParams::from_kt(0.0, j0, j0, 1, 1, kt, 1000);
        const double ref = concurrence_at(base, TimeSpec::at_time(0.0), 1);
        for (const double j1 : {0.1, 1.0, 5.0}) {
            for (const double h1 : {0.1, 1.0, 5.0}) {
                QuenchParams p = base;
                p.j1 = j1;
                p.h1 = h1;
                for (const double t : {0.0, 1.0, 7.0}) {
                    worst = std::max(
                        worst,
                        std::abs(concurrence_at(p, TimeSpec::at_time(t), 1) -
                                 ref));
                }
            }
        }
    }
    report(7, "isotropic frozen dynamics", worst < 1e-8,
           fmt("max spread over (J1, h1, t) = %.2e", worst));
}

void criterion_8_thermal_revival() {
    double peak = -1.0, peak_kt = 0.0;
    double tail = 0.0;
    for (int i = 0; i <= 240; ++i) {
        const double kt = 0.005 * i;
        const double c = static_concurrence(0.0, 1.0, kt);
        if (c > peak) {
            peak = c;
            peak_kt = kt;
        }
        if (kt >= 1.0) tail = std::max(tail, c);
    }
    // At exactly kT = 0 the value is a pure boundary-mode artifact of the
    // finite grid; it must vanish with the chain length.
    const double cold_1000 = static_concurrence(0.0, 1.0, 0.0, 1, 1000);
    const double cold_4000 = static_concurrence(0.0, 1.0, 0.0, 1, 4000);
    const bool pass = cold_1000 < 5e-3 && cold_4000 < cold_1000 / 2.0 &&
                      std::abs(peak_kt - 0.3) <= 0.1 && tail == 0.0;
    report(8, "isotropic thermal revival", pass,
           fmt("C(kT=0) %.1e->%.1e (N 1000->4000)", cold_1000, cold_4000) +
               fmt(", peak %.3f at kT=%.2f, tail max %.1e", peak, peak_kt,
                   tail));
}

void criterion_9_nonergodicity() {
    QuenchParams quench;
    quench.j0 = 0.5;
    quench.j1 = 1.0;
    const double c_quench = concurrence_at(quench, TimeSpec::infinite(), 1);
    const double c_half = static_concurrence(1.0, 0.5, 0.0);
    const double c_one = static_concurrence(1.0, 1.0, 0.0);
    const double d1 = std::abs(c_quench - c_half);
    const double d2 = std::abs(c_quench - c_one);
    report(9, "nonergodic asymptotics", d1 > 0.01 && d2 > 0.01,
           fmt("C_quench %.4f vs statics %.4f / %.4f", c_quench, c_half,
               c_one));
}

void criterion_10_property_suites() {
    bool pass = true;
    std::string detail;

    {  // Pf^2 = det, dims 2..12
        std::mt19937_64 rng(1010);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0;
        for (int dim = 2; dim <= 12; dim += 2) {
            for (int trial = 0; trial < 10; ++trial) {
                Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
                for (int i = 0; i < dim; ++i)
                    for (int j = i + 1; j < dim; ++j) {
                        m(i, j) = cd(u(rng), u(rng));
                        m(j, i) = -m(i, j);
                    }
                const cd pf = pfaffian(m);
                const cd det = m.determinant();
                worst = std::max(worst, std::abs(pf * pf - det) /
                                            std::max(1.0, std::abs(det)));
            }
        }
        pass = pass && worst < 1e-8;
        detail += fmt("pf2-det %.1e", worst);
    }

    {  // unitarity, trace, positivity
        std::mt19937_64 rng(1011);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::uniform_real_distribution<double> coupling(-2.0, 2.0);
        double worst_u = 0.0, worst_tr = 0.0, worst_psd = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            QuenchParams p;
            p.gamma = u01(rng);
            p.j0 = coupling(rng);
            p.j1 = coupling(rng);
            p.h0 = coupling(rng);
            p.h1 = coupling(rng);
            p.beta = trial % 5 == 0   ? beta_infinite
                     : trial % 5 == 1 ? 0.0
                                      : 3.0 * u01(rng);
            const ModeAngle m{1, 1e-3 + u01(rng) * (std::numbers::pi - 1e-3)};
            const double t = 8.0 * u01(rng);
            const ModeMatrix uu = propagator(p, m, t);
            worst_u = std::max(worst_u, (uu * uu.adjoint() -
                                         ModeMatrix::Identity())
                                            .cwiseAbs()
                                            .maxCoeff());
            const ModeMatrix rho = evolved_density(p, m, t);
            worst_tr =
                std::max(worst_tr, std::abs(rho.trace().real() - 1.0) +
                                       std::abs(rho.trace().imag()));
            Eigen::SelfAdjointEigenSolver<ModeMatrix> es(rho);
            worst_psd =
                std::max(worst_psd, std::max(0.0, -es.eigenvalues().minCoeff()));
        }
        pass = pass && worst_u < 1e-12 && worst_tr < 1e-8 && worst_psd < 1e-10;
        detail += fmt(", unit %.1e, tr %.1e, psd %.1e", worst_u, worst_tr,
                      worst_psd);
    }

    {  // X-state closed form vs generic Wootters
        std::mt19937_64 rng(1012);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        double worst = 0.0;
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
            Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
            rho(0, 0) = d[0];
            rho(1, 1) = d[1];
            rho(2, 2) = d[2];
            rho(3, 3) = d[3];
            rho(1, 2) = rho(2, 1) = r23;
            rho(0, 3) = rho(3, 0) = r14;
            worst = std::max(
                worst,
                std::abs(concurrence({d[0], d[1], d[2], d[3], r23, r14}) -
                         oracle::wootters_general(rho)));
        }
        pass = pass && worst < 1e-10;
        detail += fmt(", xstate %.1e", worst);
    }

    {  // asymptotic vs long-time average over t in [100, 200], step 0.01
        double worst = 0.0;
        const std::vector<QuenchParams> sets = {
            QuenchParams::from_kt(1.0, 0.5, 1.0, 1.0, 1.0, 0.0, 1000),
            QuenchParams::from_kt(1.0, 2.0, 1.0, 1.0, 1.0, 0.0, 1000),
            QuenchParams::from_kt(0.7, 1.5, 0.6, 0.8, 1.2, 0.25, 1000),
        };
        for (const auto& p : sets) {
            const double am = magnetization(p, TimeSpec::infinite());
            const double ac = concurrence_at(p, TimeSpec::infinite(), 1);
            double sm = 0.0, sc = 0.0;
            int count = 0;
            for (int i = 0; i <= 10000; ++i) {
                const TimeSpec when = TimeSpec::at_time(100.0 + 0.01 * i);
                sm += magnetization(p, when);
                sc += concurrence_at(p, when, 1);
                ++count;
            }
            worst = std::max(worst, std::abs(sm / count - am));
            worst = std::max(worst, std::abs(sc / count - ac));
        }
        pass = pass && worst < 1e-3;
        detail += fmt(", time-avg %.1e", worst);
    }

    {  // N = 1000 vs N = 2000
        double worst = 0.0;
        const std::vector<std::array<double, 6>> sets = {
            {1.0, 0.5, 2.0, 1.0, 1.0, 0.0},
            {0.5, 1.0, 0.7, 1.0, 1.0, 0.5},
            {0.0, 0.5, 0.5, 1.0, 1.0, 0.0},
        };
        for (const auto& s : sets) {
            const auto a =
                QuenchParams::from_kt(s[0], s[1], s[2], s[3], s[4], s[5], 1000);
            auto b = a;
            b.n_spins = 2000;
            for (const TimeSpec when :
                 {TimeSpec::at_time(3.0), TimeSpec::infinite()}) {
                worst = std::max(worst,
                                 std::abs(concurrence_at(a, when, 1) -
                                          concurrence_at(b, when, 1)));
                worst = std::max(worst, std::abs(magnetization(a, when) -
                                                 magnetization(b, when)));
            }
        }
        pass = pass && worst < 1e-6;
        detail += fmt(", N-conv %.1e", worst);
    }

    report(10, "property suites", pass, detail);
}

void criterion_11_ed_cross_check() {
    const auto start = std::chrono::steady_clock::now();
    QuenchParams p;  // gamma=1, static J=h=1, kT=0
    const double analytic = concurrence_at(p, TimeSpec::infinite(), 1);
    const double ed8 =
        oracle::ed_concurrence(1, 1, 1, 1, 1, beta_infinite, 8, 0.0, 1);
    const double ed12 =
        oracle::ed_concurrence(1, 1, 1, 1, 1, beta_infinite, 12, 0.0, 1);
    const double dev8 = std::abs(ed8 - analytic);
    const double dev12 = std::abs(ed12 - analytic);
    const double elapsed = seconds_since(start);
    report(11, "ED cross-check", dev12 < 0.03 && dev12 < dev8 && elapsed < 60.0,
           fmt("|ED12-a| %.4f < |ED8-a| %.4f, %.1fs", dev12, dev8, elapsed));
}

void criterion_12_gamma_maps() {
    double best1 = -1.0, gamma1 = -1.0;
    double best2 = -1.0, gamma2 = -1.0;
    for (int gi = 0; gi <= 40; ++gi) {
        const double gamma = gi / 40.0;
        for (int li = 0; li <= 60; ++li) {
            const double lambda1 = 3.0 * li / 60.0;
            const auto p =
                QuenchParams::from_kt(gamma, 1.0, lambda1, 1.0, 1.0, 0.0, 1000);
            const double c1 = concurrence_at(p, TimeSpec::infinite(), 1);
            const double c2 = concurrence_at(p, TimeSpec::infinite(), 2);
            if (c1 > best1) {
                best1 = c1;
                gamma1 = gamma;
            }
            if (c2 > best2) {
                best2 = c2;
                gamma2 = gamma;
            }
        }
    }
    const bool pass = gamma1 >= 0.95 && std::abs(gamma2 - 0.3) <= 0.15;
    report(12, "anisotropy maps (qualitative)", pass,
           fmt("C_r1 max at gamma=%.2f, C_r2 max at gamma=%.2f", gamma1,
               gamma2));
}

}  // namespace

int main() {
    std::printf("xyquench acceptance suite\n");
    const auto start = std::chrono::steady_clock::now();
    criterion_1_mode_oracle();
    criterion_2_ratio_only();
    criterion_3_ising_peak();
    criterion_4_map_maximum();
    criterion_5_range3();
    criterion_6_partial_anisotropy();
    criterion_7_isotropic_frozen();
    criterion_8_thermal_revival();
    criterion_9_nonergodicity();
    criterion_10_property_suites();
    criterion_11_ed_cross_check();
    criterion_12_gamma_maps();
    std::printf("%d criterion(s) failed; total %.1fs\n", g_failures,
                seconds_since(start));
    return g_failures == 0 ? 0 : 1;
}
