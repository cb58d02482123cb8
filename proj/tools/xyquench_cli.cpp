// Command-line front end for the xyquench shared library.  Everything goes
// through the C API in xyquench.h; results are CSV on stdout or --out FILE.

#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "xyquench.h"

namespace {

struct ParamFlags {
    double gamma = 1.0;
    double j0 = 1.0, j1 = 1.0;
    double h0 = 1.0, h1 = 1.0;
    double kt = 0.0;
    int n_spins = 1000;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--gamma", p.gamma, "anisotropy in [0, 1]")
        ->capture_default_str();
    cmd->add_option("--j0", p.j0, "coupling before the quench")
        ->capture_default_str();
    cmd->add_option("--j1", p.j1, "coupling after the quench")
        ->capture_default_str();
    cmd->add_option("--h0", p.h0, "field before the quench")
        ->capture_default_str();
    cmd->add_option("--h1", p.h1, "field after the quench")
        ->capture_default_str();
    cmd->add_option("--kt", p.kt, "temperature; 0 selects kT = 0 exactly")
        ->capture_default_str();
    cmd->add_option("--n-spins", p.n_spins, "chain length (even)")
        ->capture_default_str();
}

using ParamsPtr = std::unique_ptr<xyq_params, decltype(&xyq_params_free)>;

ParamsPtr make_params(const ParamFlags& p) {
    return ParamsPtr(xyq_params_new(p.gamma, p.j0, p.j1, p.h0, p.h1, p.kt,
                                    p.n_spins),
                     &xyq_params_free);
}

int report(int rc) {
    if (rc != XYQ_OK) std::fprintf(stderr, "error: %s\n", xyq_last_error());
    return rc;
}

const char* out_or_stdout(const std::string& out) {
    return out.empty() ? nullptr : out.c_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact quench dynamics of entanglement, magnetization and spin "
        "correlators in the transverse-field anisotropic XY chain"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(xyq_version()));

    // dynamics ------------------------------------------------------------
    ParamFlags dyn_params;
    double t_max = 20.0;
    int t_steps = 200;
    std::string dyn_obs = "concurrence_r1";
    int dyn_sep = 1;
    std::string dyn_out;
    CLI::App* dynamics =
        app.add_subcommand("dynamics", "time series of observables (CSV)");
    add_param_flags(dynamics, dyn_params);
    dynamics->add_option("--t-max", t_max, "end of the time grid")
        ->capture_default_str();
    dynamics->add_option("--t-steps", t_steps, "number of time intervals")
        ->capture_default_str();
    dynamics->add_option("--observable", dyn_obs,
                         "comma-separated observable list")
        ->capture_default_str();
    dynamics->add_option("--separation", dyn_sep, "site separation for sx/sy/sz")
        ->capture_default_str();
    dynamics->add_option("--out", dyn_out, "output file (default stdout)");

    // sweep ---------------------------------------------------------------
    ParamFlags sw_params;
    std::string sweep_x, sweep_y;
    std::string sw_obs = "concurrence_r1";
    int sw_sep = 1;
    bool asymptotic = false;
    double at_t = 0.0;
    std::string sw_out;
    CLI::App* sweep =
        app.add_subcommand("sweep", "1-D or 2-D parameter sweep (CSV)");
    add_param_flags(sweep, sw_params);
    sweep->add_option("--sweep-x", sweep_x, "axis spec name:min:max:steps")
        ->required();
    sweep->add_option("--sweep-y", sweep_y, "optional second axis");
    sweep->add_option("--observable", sw_obs,
                      "comma-separated observable list")
        ->capture_default_str();
    sweep->add_option("--separation", sw_sep, "site separation for sx/sy/sz")
        ->capture_default_str();
    sweep->add_flag("--asymptotic", asymptotic,
                    "evaluate the dephased t -> infinity limit");
    sweep->add_option("--t", at_t, "evaluation time when not asymptotic")
        ->capture_default_str();
    sweep->add_option("--out", sw_out, "output file (default stdout)");

    // reproduce -----------------------------------------------------------
    std::string figure_id;
    int rep_n = 0;
    std::string rep_out;
    CLI::App* rep = app.add_subcommand(
        "reproduce", "emit the CSV for a bundled figure preset");
    rep->add_option("figure", figure_id, "figure id, e.g. 4a")->required();
    rep->add_option("--n-spins", rep_n, "chain length (default 1000)");
    rep->add_option("--out", rep_out, "output file (default stdout)");

    // oracle-check ----------------------------------------------------------
    std::string suite;
    std::string orc_out;
    CLI::App* orc = app.add_subcommand(
        "oracle-check",
        "run a self-check suite: mode-propagator | ed-small-n | "
        "wootters-xstate");
    orc->add_option("suite", suite, "suite name")->required();
    orc->add_option("--out", orc_out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return XYQ_ERR_USAGE;
    }

    if (dynamics->parsed()) {
        ParamsPtr p = make_params(dyn_params);
        if (!p) return report(XYQ_ERR_USAGE);
        return report(xyq_run_dynamics(p.get(), t_max, t_steps,
                                       dyn_obs.c_str(), dyn_sep,
                                       out_or_stdout(dyn_out)));
    }
    if (sweep->parsed()) {
        ParamsPtr p = make_params(sw_params);
        if (!p) return report(XYQ_ERR_USAGE);
        return report(xyq_run_sweep(
            p.get(), sweep_x.c_str(), sweep_y.empty() ? nullptr : sweep_y.c_str(),
            sw_obs.c_str(), sw_sep, asymptotic ? 1 : 0, at_t,
            out_or_stdout(sw_out)));
    }
    if (rep->parsed())
        return report(xyq_reproduce(figure_id.c_str(), rep_n,
                                    out_or_stdout(rep_out)));
    if (orc->parsed())
        return report(xyq_oracle_check(suite.c_str(), out_or_stdout(orc_out)));
    return XYQ_ERR_USAGE;
}
