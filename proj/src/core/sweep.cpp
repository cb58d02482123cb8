#include "core/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "core/csv.hpp"
#include "core/entanglement.hpp"
#include "core/parallel.hpp"

namespace xyq {

namespace {

const char* const axis_names[] = {"gamma",  "j0",      "j1",      "h0", "h1",
                                  "kt",     "lambda",  "lambda0", "lambda1",
                                  "t"};

bool known_axis(const std::string& name) {
    return std::find(std::begin(axis_names), std::end(axis_names), name) !=
           std::end(axis_names);
}

void require_nonzero(double h, const std::string& axis) {
    if (h == 0.0)
        throw usage_error("axis '" + axis +
                          "' needs the paired field to be nonzero");
}

// Applies one axis value; a "t" axis overrides the time spec instead.
void apply_axis_value(QuenchParams& p, TimeSpec& when, const std::string& name,
                      double v) {
    if (name == "gamma") {
        p.gamma = v;
    } else if (name == "j0") {
        p.j0 = v;
    } else if (name == "j1") {
        p.j1 = v;
    } else if (name == "h0") {
        p.h0 = v;
    } else if (name == "h1") {
        p.h1 = v;
    } else if (name == "kt") {
        if (v < 0.0) throw usage_error("kt must be >= 0");
        p.beta = v == 0.0 ? beta_infinite : 1.0 / v;
    } else if (name == "lambda") {
        require_nonzero(p.h0, name);
        require_nonzero(p.h1, name);
        p.j0 = v * p.h0;
        p.j1 = v * p.h1;
    } else if (name == "lambda0") {
        require_nonzero(p.h0, name);
        p.j0 = v * p.h0;
    } else if (name == "lambda1") {
        require_nonzero(p.h1, name);
        p.j1 = v * p.h1;
    } else if (name == "t") {
        when = TimeSpec::at_time(v);
    } else {
        throw usage_error("unknown sweep parameter '" + name + "'");
    }
}

}  // namespace

std::string describe(const QuenchParams& p, int separation) {
    std::ostringstream os;
    os << "gamma=" << detail::fmt12(p.gamma) << " j0=" << detail::fmt12(p.j0)
       << " j1=" << detail::fmt12(p.j1) << " h0=" << detail::fmt12(p.h0)
       << " h1=" << detail::fmt12(p.h1) << " kt=" << detail::fmt12(p.kt())
       << " n_spins=" << p.n_spins << " separation=" << separation;
    return os.str();
}

Observable parse_observable(const std::string& name) {
    if (name == "concurrence_r1") return Observable::concurrence_r1;
    if (name == "concurrence_r2") return Observable::concurrence_r2;
    if (name == "magnetization") return Observable::magnetization;
    if (name == "sx") return Observable::sx;
    if (name == "sy") return Observable::sy;
    if (name == "sz") return Observable::sz;
    throw usage_error(
        "unknown observable '" + name +
        "'; valid: concurrence_r1, concurrence_r2, magnetization, sx, sy, sz");
}

std::vector<Observable> parse_observable_list(const std::string& csv) {
    std::vector<Observable> out;
    std::string token;
    std::istringstream is(csv);
    while (std::getline(is, token, ',')) {
        if (!token.empty()) out.push_back(parse_observable(token));
    }
    if (out.empty()) throw usage_error("no observables requested");
    return out;
}

std::string observable_name(Observable o) {
    switch (o) {
        case Observable::concurrence_r1: return "concurrence_r1";
        case Observable::concurrence_r2: return "concurrence_r2";
        case Observable::magnetization: return "magnetization";
        case Observable::sx: return "sx";
        case Observable::sy: return "sy";
        case Observable::sz: return "sz";
    }
    return "?";
}

SweepAxis parse_axis(const std::string& spec) {
    SweepAxis axis;
    std::istringstream is(spec);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(is, field, ':')) fields.push_back(field);
    if (fields.size() != 4)
        throw usage_error("axis spec must be name:min:max:steps, got '" +
                          spec + "'");
    axis.name = fields[0];
    if (!known_axis(axis.name))
        throw usage_error("unknown sweep parameter '" + axis.name + "'");
    try {
        axis.lo = std::stod(fields[1]);
        axis.hi = std::stod(fields[2]);
        axis.steps = std::stoi(fields[3]);
    } catch (const std::exception&) {
        throw usage_error("malformed axis spec '" + spec + "'");
    }
    if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi))
        throw usage_error("axis bounds must be finite");
    if (axis.steps < 2) throw usage_error("axis needs at least 2 steps");
    return axis;
}

std::vector<double> evaluate(const QuenchParams& params, const TimeSpec& when,
                             const std::vector<Observable>& observables,
                             int separation) {
    params.validate();
    if (separation < 1) throw usage_error("separation must be >= 1");

    int r_max = 0;
    bool need_mag = false;
    bool need_spin = false;
    for (const Observable o : observables) {
        switch (o) {
            case Observable::concurrence_r1:
                r_max = std::max(r_max, 1);
                need_mag = true;
                break;
            case Observable::concurrence_r2:
                r_max = std::max(r_max, 2);
                need_mag = true;
                break;
            case Observable::magnetization:
                need_mag = true;
                break;
            default:
                r_max = std::max(r_max, separation);
                need_spin = true;
                break;
        }
    }

    const double mz = need_mag ? magnetization(params, when) : 0.0;
    std::optional<ContractionSet> cs;
    if (r_max > 0) cs.emplace(contractions(params, when, r_max));
    std::optional<SpinCorrelators> at_sep;
    if (need_spin) at_sep.emplace(spin_correlators(*cs, separation));

    std::vector<double> out;
    out.reserve(observables.size());
    for (const Observable o : observables) {
        switch (o) {
            case Observable::concurrence_r1:
            case Observable::concurrence_r2: {
                const int r = o == Observable::concurrence_r1 ? 1 : 2;
                const SpinCorrelators sc = spin_correlators(*cs, r);
                out.push_back(
                    concurrence(two_site_density(mz, sc.sx, sc.sy, sc.sz)));
                break;
            }
            case Observable::magnetization: out.push_back(mz); break;
            case Observable::sx: out.push_back(at_sep->sx); break;
            case Observable::sy: out.push_back(at_sep->sy); break;
            case Observable::sz: out.push_back(at_sep->sz); break;
        }
    }
    return out;
}

void run_dynamics(const QuenchParams& params, double t_max, int t_steps,
                  const std::vector<Observable>& observables, int separation,
                  std::ostream& out) {
    params.validate();
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw usage_error("t_max must be positive and finite");
    if (t_steps < 1) throw usage_error("t_steps must be >= 1");
    if (observables.empty()) throw usage_error("no observables requested");

    const std::size_t rows = static_cast<std::size_t>(t_steps) + 1;
    std::vector<std::vector<double>> results(rows);
    detail::parallel_for(rows, [&](std::size_t i) {
        const double t = t_max * static_cast<double>(i) / t_steps;
        results[i] = evaluate(params, TimeSpec::at_time(t), observables,
                              separation);
    });

    detail::csv_comment(out, std::string("xyquench ") + tool_version);
    detail::csv_comment(out, describe(params, separation));
    detail::csv_comment(out, "t_max=" + detail::fmt12(t_max) +
                                 " t_steps=" + std::to_string(t_steps));
    std::vector<std::string> header = {"t"};
    for (const Observable o : observables) header.push_back(observable_name(o));
    detail::csv_row(out, header);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::string> cells = {
            detail::fmt12(t_max * static_cast<double>(i) / t_steps)};
        for (const double v : results[i]) cells.push_back(detail::fmt12(v));
        detail::csv_row(out, cells);
    }
}

void run_sweep(const QuenchParams& base, const SweepAxis& axis_x,
               const std::optional<SweepAxis>& axis_y,
               const std::vector<Observable>& observables, int separation,
               bool asymptotic, double t, std::ostream& out) {
    base.validate();
    if (observables.empty()) throw usage_error("no observables requested");
    const bool x_is_time = axis_x.name == "t";
    const bool y_is_time = axis_y && axis_y->name == "t";
    if (x_is_time && y_is_time)
        throw usage_error("only one axis may sweep t");
    if ((x_is_time || y_is_time) && asymptotic)
        throw usage_error("a t axis is unused with --asymptotic");
    if (axis_y && axis_y->name == axis_x.name)
        throw usage_error("sweep axes must differ");

    const TimeSpec base_when =
        asymptotic ? TimeSpec::infinite() : TimeSpec::at_time(t);

    const std::size_t nx = static_cast<std::size_t>(axis_x.steps);
    const std::size_t ny =
        axis_y ? static_cast<std::size_t>(axis_y->steps) : 1;
    std::vector<std::vector<double>> results(nx * ny);
    detail::parallel_for(nx * ny, [&](std::size_t idx) {
        const int ix = static_cast<int>(idx / ny);
        const int iy = static_cast<int>(idx % ny);
        QuenchParams p = base;
        TimeSpec when = base_when;
        apply_axis_value(p, when, axis_x.name, axis_x.value(ix));
        if (axis_y) apply_axis_value(p, when, axis_y->name, axis_y->value(iy));
        results[idx] = evaluate(p, when, observables, separation);
    });

    detail::csv_comment(out, std::string("xyquench ") + tool_version);
    detail::csv_comment(out, describe(base, separation));
    std::ostringstream axes;
    axes << "axis-x " << axis_x.name << ":" << detail::fmt12(axis_x.lo) << ":"
         << detail::fmt12(axis_x.hi) << ":" << axis_x.steps;
    if (axis_y)
        axes << "  axis-y " << axis_y->name << ":" << detail::fmt12(axis_y->lo)
             << ":" << detail::fmt12(axis_y->hi) << ":" << axis_y->steps;
    detail::csv_comment(out, axes.str());
    detail::csv_comment(out, asymptotic ? "time: asymptotic"
                        : x_is_time || y_is_time
                            ? "time: swept axis"
                            : "time: t=" + detail::fmt12(t));

    std::vector<std::string> header = {axis_x.name};
    if (axis_y) header.push_back(axis_y->name);
    for (const Observable o : observables) header.push_back(observable_name(o));
    detail::csv_row(out, header);

    for (std::size_t ix = 0; ix < nx; ++ix) {
        for (std::size_t iy = 0; iy < ny; ++iy) {
            std::vector<std::string> cells = {
                detail::fmt12(axis_x.value(static_cast<int>(ix)))};
            if (axis_y)
                cells.push_back(
                    detail::fmt12(axis_y->value(static_cast<int>(iy))));
            for (const double v : results[ix * ny + iy])
                cells.push_back(detail::fmt12(v));
            detail::csv_row(out, cells);
        }
    }
}

}  // namespace xyq
