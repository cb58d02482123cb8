#include "xyquench.h"

#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "core/entanglement.hpp"
#include "core/oracle.hpp"
#include "core/presets.hpp"
#include "core/sweep.hpp"

struct xyq_params {
    xyq::QuenchParams value;
};

namespace {

thread_local std::string g_last_error;

int map_exception() {
    try {
        throw;
    } catch (const xyq::usage_error& e) {
        g_last_error = e.what();
        return XYQ_ERR_USAGE;
    } catch (const xyq::numeric_error& e) {
        g_last_error = e.what();
        return XYQ_ERR_NUMERIC;
    } catch (const xyq::resource_error& e) {
        g_last_error = e.what();
        return XYQ_ERR_RESOURCE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return XYQ_ERR_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return XYQ_ERR_NUMERIC;
    } catch (...) {
        g_last_error = "unknown error";
        return XYQ_ERR_NUMERIC;
    }
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return XYQ_OK;
    } catch (...) {
        return map_exception();
    }
}

// Runs fn against stdout or a freshly created file.
template <class Fn>
void with_output(const char* out_path, Fn&& fn) {
    if (out_path == nullptr || std::string(out_path) == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        throw xyq::resource_error(std::string("cannot open '") + out_path +
                                  "' for writing");
    fn(file);
}

xyq::TimeSpec make_timespec(int asymptotic, double t) {
    return asymptotic ? xyq::TimeSpec::infinite() : xyq::TimeSpec::at_time(t);
}

}  // namespace

extern "C" {

const char* xyq_version(void) { return xyq::tool_version; }

const char* xyq_last_error(void) { return g_last_error.c_str(); }

xyq_params* xyq_params_new(double gamma, double j0, double j1, double h0,
                           double h1, double kt, int n_spins) {
    try {
        return new xyq_params{
            xyq::QuenchParams::from_kt(gamma, j0, j1, h0, h1, kt, n_spins)};
    } catch (...) {
        map_exception();
        return nullptr;
    }
}

void xyq_params_free(xyq_params* p) { delete p; }

int xyq_magnetization(const xyq_params* p, int asymptotic, double t,
                      double* out) {
    return guarded([&] {
        if (!p || !out) throw xyq::usage_error("null argument");
        *out = xyq::magnetization(p->value, make_timespec(asymptotic, t));
    });
}

int xyq_spin_correlators(const xyq_params* p, int asymptotic, double t,
                         int separation, double* sx, double* sy, double* sz) {
    return guarded([&] {
        if (!p || !sx || !sy || !sz) throw xyq::usage_error("null argument");
        const xyq::ContractionSet cs = xyq::contractions(
            p->value, make_timespec(asymptotic, t), separation);
        const xyq::SpinCorrelators sc = xyq::spin_correlators(cs, separation);
        *sx = sc.sx;
        *sy = sc.sy;
        *sz = sc.sz;
    });
}

int xyq_concurrence(const xyq_params* p, int asymptotic, double t,
                    int separation, double* out) {
    return guarded([&] {
        if (!p || !out) throw xyq::usage_error("null argument");
        *out = xyq::concurrence_at(p->value, make_timespec(asymptotic, t),
                                   separation);
    });
}

int xyq_run_dynamics(const xyq_params* p, double t_max, int t_steps,
                     const char* observables, int separation,
                     const char* out_path) {
    return guarded([&] {
        if (!p || !observables) throw xyq::usage_error("null argument");
        const auto obs = xyq::parse_observable_list(observables);
        with_output(out_path, [&](std::ostream& os) {
            xyq::run_dynamics(p->value, t_max, t_steps, obs, separation, os);
        });
    });
}

int xyq_run_sweep(const xyq_params* base, const char* axis_x,
                  const char* axis_y, const char* observables, int separation,
                  int asymptotic, double t, const char* out_path) {
    return guarded([&] {
        if (!base || !axis_x || !observables)
            throw xyq::usage_error("null argument");
        const xyq::SweepAxis x = xyq::parse_axis(axis_x);
        std::optional<xyq::SweepAxis> y;
        if (axis_y && *axis_y) y = xyq::parse_axis(axis_y);
        const auto obs = xyq::parse_observable_list(observables);
        with_output(out_path, [&](std::ostream& os) {
            xyq::run_sweep(base->value, x, y, obs, separation,
                           asymptotic != 0, t, os);
        });
    });
}

int xyq_reproduce(const char* figure_id, int n_spins, const char* out_path) {
    return guarded([&] {
        if (!figure_id) throw xyq::usage_error("null figure id");
        with_output(out_path, [&](std::ostream& os) {
            xyq::reproduce(figure_id, n_spins, os);
        });
    });
}

int xyq_oracle_check(const char* suite, const char* out_path) {
    try {
        if (!suite) throw xyq::usage_error("null suite name");
        xyq::oracle::SuiteReport report = xyq::oracle::run_suite(suite);
        with_output(out_path, [&](std::ostream& os) {
            os << "suite " << report.name << "\n";
            for (const std::string& line : report.lines)
                os << "  " << line << "\n";
            os << (report.pass ? "PASS" : "FAIL") << "\n";
        });
        if (!report.pass) {
            g_last_error = "oracle suite '" + report.name +
                           "' exceeded its tolerances";
            return XYQ_ERR_NUMERIC;
        }
        return XYQ_OK;
    } catch (...) {
        return map_exception();
    }
}

}  // extern "C"
