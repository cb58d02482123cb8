#include "core/presets.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "core/csv.hpp"
#include "core/parallel.hpp"
#include "core/sweep.hpp"

namespace xyq {

namespace {

constexpr int default_n = 1000;
constexpr double dyn_t_max = 20.0;
constexpr int dyn_steps = 400;
constexpr int sweep_steps = 301;
constexpr int map_steps = 101;  // default resolution of the 2-D maps

struct Curve {
    std::string label;
    QuenchParams params;
};

QuenchParams with(double gamma, double j0, double j1, double h0, double h1,
                  double kt, int n) {
    return QuenchParams::from_kt(gamma, j0, j1, h0, h1, kt, n);
}

// Shared engine for the multi-curve figures: one axis column plus one
// column per (curve, observable) pair.
void family_columns(std::ostream& out, const std::string& comment,
                    const std::string& axis_label,
                    const std::vector<double>& axis_values,
                    const std::vector<Curve>& curves,
                    const std::vector<Observable>& observables,
                    const std::function<void(QuenchParams&, TimeSpec&, double)>&
                        apply_axis) {
    const std::size_t nv = axis_values.size();
    const std::size_t nc = curves.size();
    std::vector<std::vector<double>> results(nv * nc);
    detail::parallel_for(nv * nc, [&](std::size_t idx) {
        const std::size_t iv = idx / nc;
        const std::size_t ic = idx % nc;
        QuenchParams p = curves[ic].params;
        TimeSpec when = TimeSpec::infinite();
        apply_axis(p, when, axis_values[iv]);
        results[idx] = evaluate(p, when, observables, 1);
    });

    detail::csv_comment(out, std::string("xyquench ") + tool_version);
    detail::csv_comment(out, comment);
    for (const Curve& c : curves)
        detail::csv_comment(out, "curve " + c.label + ": " +
                                     describe(c.params, 1));
    std::vector<std::string> header = {axis_label};
    for (const Curve& c : curves)
        for (const Observable o : observables)
            header.push_back(observable_name(o) + "(" + c.label + ")");
    detail::csv_row(out, header);
    for (std::size_t iv = 0; iv < nv; ++iv) {
        std::vector<std::string> cells = {detail::fmt12(axis_values[iv])};
        for (std::size_t ic = 0; ic < nc; ++ic)
            for (const double v : results[iv * nc + ic])
                cells.push_back(detail::fmt12(v));
        detail::csv_row(out, cells);
    }
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        v[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
    return v;
}

void dynamics_figure(std::ostream& out, const std::string& comment,
                     const std::vector<Curve>& curves,
                     const std::vector<Observable>& observables) {
    family_columns(out, comment, "t", linspace(0.0, dyn_t_max, dyn_steps + 1),
                   curves, observables,
                   [](QuenchParams&, TimeSpec& when, double t) {
                       when = TimeSpec::at_time(t);
                   });
}

enum class LambdaMode { scale_j, scale_h };

// lambda family at fixed temperature: scale_j sets J = lambda * h at fixed
// h; scale_h sets h = J / lambda at fixed J (lambda > 0 in that mode).
void lambda_figure(std::ostream& out, const std::string& comment,
                   const std::vector<Curve>& curves, LambdaMode mode,
                   const std::vector<Observable>& observables) {
    const std::vector<double> axis = mode == LambdaMode::scale_j
                                         ? linspace(0.0, 3.0, sweep_steps)
                                         : linspace(0.05, 3.0, 296);
    family_columns(out, comment, "lambda", axis, curves, observables,
                   [mode](QuenchParams& p, TimeSpec&, double v) {
                       if (mode == LambdaMode::scale_j) {
                           p.j0 = v * p.h0;
                           p.j1 = v * p.h1;
                       } else {
                           p.h0 = p.j0 / v;
                           p.h1 = p.j1 / v;
                       }
                   });
}

void map_figure(std::ostream& out, const std::string& comment,
                const QuenchParams& base, const std::string& x_name,
                double x_lo, double x_hi, const std::string& y_name,
                double y_lo, double y_hi, Observable obs, bool asymptotic,
                int y_steps = map_steps) {
    detail::csv_comment(out, comment);
    const SweepAxis x{x_name, x_lo, x_hi, map_steps};
    const SweepAxis y{y_name, y_lo, y_hi, y_steps};
    run_sweep(base, x, std::optional<SweepAxis>(y), {obs}, 1, asymptotic, 0.0,
              out);
}

std::vector<Curve> j_quench_curves(double gamma, double kt, double h, int n,
                                   const std::vector<std::pair<double, double>>& js) {
    std::vector<Curve> curves;
    for (const auto& [j0, j1] : js) {
        std::ostringstream label;
        label << "J0=" << j0 << ";J1=" << j1;
        if (kt != 0.0) label << ";kT=" << kt;
        curves.push_back({label.str(), with(gamma, j0, j1, h, h, kt, n)});
    }
    return curves;
}

std::vector<Curve> h_quench_curves(double gamma, double kt, double j, int n,
                                   const std::vector<std::pair<double, double>>& hs) {
    std::vector<Curve> curves;
    for (const auto& [h0, h1] : hs) {
        std::ostringstream label;
        label << "h0=" << h0 << ";h1=" << h1;
        if (kt != 0.0) label << ";kT=" << kt;
        curves.push_back({label.str(), with(gamma, j, j, h0, h1, kt, n)});
    }
    return curves;
}

std::vector<Curve> fixed_h_family(double gamma, double kt, int n,
                                  const std::vector<double>& hs) {
    std::vector<Curve> curves;
    for (const double h : hs) {
        std::ostringstream label;
        label << "h=" << h;
        curves.push_back({label.str(), with(gamma, h, h, h, h, kt, n)});
    }
    return curves;
}

std::vector<Curve> fixed_j_family(double gamma, double kt, int n,
                                  const std::vector<double>& js) {
    std::vector<Curve> curves;
    for (const double j : js) {
        std::ostringstream label;
        label << "J=" << j;
        curves.push_back({label.str(), with(gamma, j, j, j, j, kt, n)});
    }
    return curves;
}

const std::vector<std::pair<double, double>> step_05_1 = {
    {1.0, 1.0}, {0.5, 0.5}, {0.5, 1.0}, {1.0, 0.5}};
const std::vector<std::pair<double, double>> step_05_2 = {
    {0.5, 0.5}, {2.0, 2.0}, {0.5, 2.0}, {2.0, 0.5}};

}  // namespace

std::vector<std::string> figure_ids() {
    std::vector<std::string> ids;
    const auto add_quad = [&](int n) {
        for (const char* s : {"a", "b", "c", "d"})
            ids.push_back(std::to_string(n) + s);
    };
    add_quad(1);
    add_quad(2);
    add_quad(3);
    add_quad(4);
    ids.insert(ids.end(), {"5a", "5b", "6"});
    add_quad(7);
    add_quad(8);
    add_quad(9);
    ids.insert(ids.end(), {"10a", "10b", "11", "12a", "12b"});
    add_quad(13);
    ids.insert(ids.end(), {"14a", "14b", "15a", "15b", "16", "17a", "17b"});
    return ids;
}

void reproduce(const std::string& id, int n_spins, std::ostream& out) {
    const int n = n_spins <= 0 ? default_n : n_spins;
    const std::vector<Observable> c1 = {Observable::concurrence_r1};
    const std::vector<Observable> c2 = {Observable::concurrence_r2};
    const std::vector<Observable> mag = {Observable::magnetization};
    const std::vector<Observable> szz = {Observable::sz};
    const std::string fig = "figure " + id;

    // --- gamma = 1 ---
    if (id == "1a") {
        dynamics_figure(out, fig + ": C(i,i+1) dynamics, J quench at h=1",
                        j_quench_curves(1.0, 0.0, 1.0, n, step_05_1), c1);
    } else if (id == "1b") {
        dynamics_figure(out, fig + ": C(i,i+1) dynamics, h quench at J=1",
                        h_quench_curves(1.0, 0.0, 1.0, n, step_05_1), c1);
    } else if (id == "1c") {
        dynamics_figure(out, fig + ": magnetization dynamics, J quench at h=1",
                        j_quench_curves(1.0, 0.0, 1.0, n, step_05_1), mag);
    } else if (id == "1d") {
        dynamics_figure(out, fig + ": S^z correlator dynamics, J quench at h=1",
                        j_quench_curves(1.0, 0.0, 1.0, n, step_05_1), szz);
    } else if (id == "2a") {
        detail::csv_comment(out, fig + ": static C(i,i+1) vs lambda, kT=0");
        run_sweep(with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n),
                  {"lambda", 0.0, 3.0, sweep_steps}, std::nullopt, c1, 1, true,
                  0.0, out);
    } else if (id == "2b") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=1, fixed h",
                      fixed_h_family(1.0, 1.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_j, c1);
    } else if (id == "2c") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=1, fixed J",
                      fixed_j_family(1.0, 1.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_h, c1);
    } else if (id == "2d") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=3, fixed h",
                      fixed_h_family(1.0, 3.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_j, c1);
    } else if (id == "3a") {
        map_figure(out, fig + ": C(i,i+1) over (lambda1, t), J0=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "t", 0.0, dyn_t_max, Observable::concurrence_r1, false);
    } else if (id == "3b") {
        map_figure(out, fig + ": C(i,i+1) over (lambda1, t), J0=5",
                   with(1.0, 5.0, 5.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "t", 0.0, dyn_t_max, Observable::concurrence_r1, false);
    } else if (id == "3c") {
        family_columns(out, fig + ": asymptotic C(i,i+1) vs lambda1",
                       "lambda1", linspace(0.0, 3.0, sweep_steps),
                       {{"J0=0.5", with(1.0, 0.5, 0.5, 1.0, 1.0, 0.0, n)},
                        {"J0=1", with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n)},
                        {"J0=2", with(1.0, 2.0, 2.0, 1.0, 1.0, 0.0, n)}},
                       c1, [](QuenchParams& p, TimeSpec&, double v) {
                           p.j1 = v * p.h1;
                       });
    } else if (id == "3d") {
        dynamics_figure(out, fig + ": C(i,i+1) dynamics with J switched off",
                        j_quench_curves(1.0, 0.0, 1.0, n,
                                        {{1.0, 0.0}, {2.0, 0.0}}),
                        c1);
    } else if (id == "4a") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (J0, J1), h=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "j0", 0.0, 4.0, "j1",
                   0.0, 4.0, Observable::concurrence_r1, true);
    } else if (id == "4b") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (h0, h1), J=2",
                   with(1.0, 2.0, 2.0, 1.0, 1.0, 0.0, n), "h0", 0.0, 5.0, "h1",
                   0.0, 5.0, Observable::concurrence_r1, true);
    } else if (id == "4c") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (h0, J0), h1=J1=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "h0", 0.0, 4.0, "j0",
                   0.0, 4.0, Observable::concurrence_r1, true);
    } else if (id == "4d") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (h1, J1), h0=J0=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "h1", 0.0, 4.0, "j1",
                   0.0, 4.0, Observable::concurrence_r1, true);
    } else if (id == "5a") {
        map_figure(out, fig + ": static C(i,i+1) over (lambda, kT), h=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda", 0.0, 3.0,
                   "kt", 0.0, 2.0, Observable::concurrence_r1, true);
    } else if (id == "5b") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (lambda1, kT), J0=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "kt", 0.0, 2.0, Observable::concurrence_r1, true);
    } else if (id == "6") {
        dynamics_figure(
            out, fig + ": C(i,i+2) dynamics, J quench at h=1",
            [&] {
                auto curves = j_quench_curves(1.0, 0.0, 1.0, n,
                                              {{1.0, 0.5}, {0.5, 1.0}});
                auto warm = j_quench_curves(1.0, 0.1, 1.0, n,
                                            {{1.0, 0.5}, {0.5, 1.0}});
                curves.insert(curves.end(), warm.begin(), warm.end());
                return curves;
            }(),
            c2);
    }
    // --- gamma = 0.5 ---
    else if (id == "7a") {
        dynamics_figure(out, fig + ": C(i,i+1) dynamics, J quench at h=1",
                        j_quench_curves(0.5, 0.0, 1.0, n, step_05_2), c1);
    } else if (id == "7b") {
        dynamics_figure(out, fig + ": C(i,i+1) dynamics, h quench at J=1",
                        h_quench_curves(0.5, 0.0, 1.0, n, step_05_2), c1);
    } else if (id == "7c") {
        dynamics_figure(out, fig + ": magnetization dynamics, J quench at h=1",
                        j_quench_curves(0.5, 0.0, 1.0, n, step_05_2), mag);
    } else if (id == "7d") {
        dynamics_figure(out, fig + ": S^z correlator dynamics, J quench at h=1",
                        j_quench_curves(0.5, 0.0, 1.0, n, step_05_2), szz);
    } else if (id == "8a") {
        detail::csv_comment(out, fig + ": static C(i,i+1) vs lambda, kT=0");
        run_sweep(with(0.5, 1.0, 1.0, 1.0, 1.0, 0.0, n),
                  {"lambda", 0.0, 3.0, sweep_steps}, std::nullopt, c1, 1, true,
                  0.0, out);
    } else if (id == "8b") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=1, fixed h",
                      fixed_h_family(0.5, 1.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_j, c1);
    } else if (id == "8c") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=1, fixed J",
                      fixed_j_family(0.5, 1.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_h, c1);
    } else if (id == "8d") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=3, fixed h",
                      fixed_h_family(0.5, 3.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_j, c1);
    } else if (id == "9a") {
        map_figure(out, fig + ": C(i,i+1) over (lambda1, t), J0=1",
                   with(0.5, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "t", 0.0, dyn_t_max, Observable::concurrence_r1, false);
    } else if (id == "9b") {
        map_figure(out, fig + ": C(i,i+1) over (lambda1, t), J0=5",
                   with(0.5, 5.0, 5.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "t", 0.0, dyn_t_max, Observable::concurrence_r1, false);
    } else if (id == "9c") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (J0, J1), h=1",
                   with(0.5, 1.0, 1.0, 1.0, 1.0, 0.0, n), "j0", 0.0, 4.0, "j1",
                   0.0, 4.0, Observable::concurrence_r1, true);
    } else if (id == "9d") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (h0, h1), J=1",
                   with(0.5, 1.0, 1.0, 1.0, 1.0, 0.0, n), "h0", 0.0, 4.0, "h1",
                   0.0, 4.0, Observable::concurrence_r1, true);
    } else if (id == "10a") {
        map_figure(out, fig + ": static C(i,i+1) over (lambda, kT), h=1",
                   with(0.5, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda", 0.0, 3.0,
                   "kt", 0.0, 2.0, Observable::concurrence_r1, true);
    } else if (id == "10b") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (lambda1, kT), J0=1",
                   with(0.5, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "kt", 0.0, 2.0, Observable::concurrence_r1, true);
    } else if (id == "11") {
        dynamics_figure(
            out, fig + ": C(i,i+2) dynamics, J quench at h=1",
            [&] {
                auto curves = j_quench_curves(0.5, 0.0, 1.0, n,
                                              {{0.5, 2.0}, {2.0, 0.5}});
                auto warm = j_quench_curves(0.5, 0.25, 1.0, n,
                                            {{0.5, 2.0}, {2.0, 0.5}});
                curves.insert(curves.end(), warm.begin(), warm.end());
                return curves;
            }(),
            c2);
    }
    // --- gamma = 0 ---
    else if (id == "12a") {
        dynamics_figure(out, fig + ": C(i,i+1) dynamics",
                        {{"J0=2;J1=2", with(0.0, 2.0, 2.0, 1.0, 1.0, 0.0, n)},
                         {"J0=0.5;J1=2", with(0.0, 0.5, 2.0, 1.0, 1.0, 0.0, n)},
                         {"h0=2;h1=2", with(0.0, 1.0, 1.0, 2.0, 2.0, 0.0, n)},
                         {"h0=0.5;h1=2", with(0.0, 1.0, 1.0, 0.5, 2.0, 0.0, n)}},
                        c1);
    } else if (id == "12b") {
        dynamics_figure(out,
                        fig + ": magnetization and S^z correlator dynamics",
                        j_quench_curves(0.0, 0.0, 1.0, n,
                                        {{2.0, 2.0}, {0.5, 2.0}}),
                        {Observable::magnetization, Observable::sz});
    } else if (id == "13a") {
        detail::csv_comment(out, fig + ": static C(i,i+1) vs lambda, kT=0");
        run_sweep(with(0.0, 1.0, 1.0, 1.0, 1.0, 0.0, n),
                  {"lambda", 0.0, 3.0, sweep_steps}, std::nullopt, c1, 1, true,
                  0.0, out);
    } else if (id == "13b") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=1, fixed h",
                      fixed_h_family(0.0, 1.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_j, c1);
    } else if (id == "13c") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=1, fixed J",
                      fixed_j_family(0.0, 1.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_h, c1);
    } else if (id == "13d") {
        lambda_figure(out, fig + ": C(i,i+1) vs lambda at kT=3, fixed h",
                      fixed_h_family(0.0, 3.0, n, {0.25, 1.0, 4.0}),
                      LambdaMode::scale_j, c1);
    } else if (id == "14a") {
        map_figure(out, fig + ": C(i,i+1) over (lambda1, t), J0=5",
                   with(0.0, 5.0, 5.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "t", 0.0, dyn_t_max, Observable::concurrence_r1, false);
    } else if (id == "14b") {
        map_figure(out, fig + ": C(i,i+1) over (lambda0, t), J1=5",
                   with(0.0, 5.0, 5.0, 1.0, 1.0, 0.0, n), "lambda0", 0.0, 3.0,
                   "t", 0.0, dyn_t_max, Observable::concurrence_r1, false);
    } else if (id == "15a") {
        map_figure(out, fig + ": asymptotic C(i,i+1) over (lambda0, kT), J1=1",
                   with(0.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda0", 0.0, 3.0,
                   "kt", 0.0, 1.5, Observable::concurrence_r1, true);
    } else if (id == "15b") {
        detail::csv_comment(out, fig + ": C(i,i+1) vs kT at J=h=1");
        run_sweep(with(0.0, 1.0, 1.0, 1.0, 1.0, 0.0, n),
                  {"kt", 0.0, 1.2, 241}, std::nullopt, c1, 1, true, 0.0, out);
    } else if (id == "16") {
        dynamics_figure(
            out, fig + ": C(i,i+2) dynamics, J quench at h=1",
            [&] {
                auto curves = j_quench_curves(0.0, 0.0, 1.0, n,
                                              {{2.0, 2.0}, {0.5, 2.0}});
                auto warm = j_quench_curves(0.0, 0.1, 1.0, n,
                                            {{2.0, 2.0}, {0.5, 2.0}});
                curves.insert(curves.end(), warm.begin(), warm.end());
                return curves;
            }(),
            c2);
    } else if (id == "17a") {
        map_figure(out,
                   fig + ": asymptotic C(i,i+1) over (lambda1, gamma), J0=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "gamma", 0.0, 1.0, Observable::concurrence_r1, true);
    } else if (id == "17b") {
        map_figure(out,
                   fig + ": asymptotic C(i,i+2) over (lambda1, gamma), J0=1",
                   with(1.0, 1.0, 1.0, 1.0, 1.0, 0.0, n), "lambda1", 0.0, 3.0,
                   "gamma", 0.0, 1.0, Observable::concurrence_r2, true);
    } else {
        std::string valid;
        for (const std::string& v : figure_ids()) {
            if (!valid.empty()) valid += ", ";
            valid += v;
        }
        throw usage_error("unknown figure id '" + id + "'; valid ids: " +
                          valid);
    }
}

}  // namespace xyq
