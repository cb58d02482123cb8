#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "core/correlators.hpp"

namespace xyq {

inline constexpr const char* tool_version = "1.0.0";

enum class Observable {
    concurrence_r1,
    concurrence_r2,
    magnetization,
    sx,
    sy,
    sz,
};

Observable parse_observable(const std::string& name);
std::vector<Observable> parse_observable_list(const std::string& csv);
std::string observable_name(Observable o);

/// One-line "key=value" description of a parameter set, used in CSV
/// comment headers.
std::string describe(const QuenchParams& params, int separation);

/// One sweep axis: "name:min:max:steps".  Valid names: gamma, j0, j1, h0,
/// h1, kt, lambda, lambda0, lambda1, t.  lambda-type axes scale the
/// coupling(s) by the corresponding fixed field, which must be nonzero.
struct SweepAxis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int steps = 0;

    double value(int i) const {
        return lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(steps - 1);
    }
};

SweepAxis parse_axis(const std::string& spec);

/// Evaluates the requested observables at one parameter point; sx/sy/sz use
/// `separation`.  The mode sums run sequentially in ascending p so repeated
/// calls are bit-stable.
std::vector<double> evaluate(const QuenchParams& params, const TimeSpec& when,
                             const std::vector<Observable>& observables,
                             int separation);

/// Uniform time series on [0, t_max] with t_steps intervals; one CSV row
/// per sample, one column per observable.
void run_dynamics(const QuenchParams& params, double t_max, int t_steps,
                  const std::vector<Observable>& observables, int separation,
                  std::ostream& out);

/// Rectangular sweep; grid points are evaluated in parallel, rows are
/// emitted in deterministic x-then-y order.
void run_sweep(const QuenchParams& base, const SweepAxis& axis_x,
               const std::optional<SweepAxis>& axis_y,
               const std::vector<Observable>& observables, int separation,
               bool asymptotic, double t, std::ostream& out);

}  // namespace xyq
