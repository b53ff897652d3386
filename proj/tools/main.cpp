// Copyright 2026 The gmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "gmagic/errors.hpp"
#include "gmagic/runio.hpp"

namespace {

void add_common(CLI::App *cmd, gmagic::cli::CommonConfig *common) {
    cmd->add_option("--seed", common->seed, "master random seed (all streams derive from it)");
    cmd->add_option("--out", common->out, "output path (extension added if missing)");
    cmd->add_option("--workers", common->workers,
                    "worker thread count (default: GMAGIC_WORKERS or hardware)")
        ->envname("GMAGIC_WORKERS");
    cmd->add_flag("--json", common->json, "emit one structured JSON document instead of CSV");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"nonlocal-magic toolkit for fermionic Gaussian states"};
    app.set_version_flag("--version", std::string("gmagic ") + gmagic::kVersion);
    app.set_config("--config", "", "plain-text key=value configuration file (flags override)");
    app.require_subcommand(1);

    gmagic::cli::AnnealConfig anneal_cfg;
    CLI::App *anneal = app.add_subcommand(
        "anneal", "benchmark the nonlocal-magic bound by annealing over the local orbit");
    add_common(anneal, &anneal_cfg.common);
    anneal->add_option("--L", anneal_cfg.sites, "number of sites");
    anneal->add_option("--m", anneal_cfg.m, "sites in subsystem A");
    anneal->add_option("--beta0", anneal_cfg.schedule.beta0, "initial inverse temperature");
    anneal->add_option("--d-beta", anneal_cfg.schedule.d_beta, "inverse-temperature increment");
    anneal->add_option("--stages", anneal_cfg.schedule.stages, "number of annealing stages");
    anneal->add_option("--steps-per-stage", anneal_cfg.schedule.steps_per_stage,
                       "Metropolis proposals per stage");
    anneal->add_option("--eps0", anneal_cfg.schedule.eps0,
                       "base proposal step (scaled by beta^-1/2)");
    anneal->add_option("--polish-sweeps", anneal_cfg.schedule.polish_sweeps,
                       "final line-minimization sweeps");
    anneal->add_option("--cap", anneal_cfg.site_cap, "exact-SRE system-size cap");

    gmagic::cli::EnsembleConfig ensemble_cfg;
    CLI::App *ensemble = app.add_subcommand(
        "ensemble", "average nonlocal-magic density over Haar-random Gaussian states");
    add_common(ensemble, &ensemble_cfg.common);
    ensemble->add_option("--sizes", ensemble_cfg.sizes, "system sizes")->delimiter(',');
    ensemble->add_option("--ells", ensemble_cfg.ells, "bipartition fractions")->delimiter(',');
    ensemble->add_option("--samples", ensemble_cfg.samples, "Haar samples per grid point");

    gmagic::cli::KitaevConfig kitaev_cfg;
    CLI::App *kitaev = app.add_subcommand(
        "kitaev", "ground-state nonlocal magic of the Kitaev chain (mu scan + ell scan)");
    add_common(kitaev, &kitaev_cfg.common);
    kitaev->add_option("--t", kitaev_cfg.t, "hopping amplitude");
    kitaev->add_option("--delta", kitaev_cfg.delta, "pairing amplitude");
    kitaev->add_option("--mu-min", kitaev_cfg.mu_min, "chemical-potential grid start");
    kitaev->add_option("--mu-max", kitaev_cfg.mu_max, "chemical-potential grid end");
    kitaev->add_option("--mu-step", kitaev_cfg.mu_step, "chemical-potential grid step");
    kitaev->add_option("--sizes", kitaev_cfg.sizes, "system sizes")->delimiter(',');
    kitaev->add_option("--critical-mu", kitaev_cfg.critical_mu,
                       "coupling for the cut-fraction scan");
    kitaev->add_option("--ells", kitaev_cfg.ells, "cut fractions for the second file")
        ->delimiter(',');
    kitaev->add_flag("--open", kitaev_cfg.open_bc, "open boundary conditions (default periodic)");
    kitaev->add_flag("--perturb", kitaev_cfg.perturb_degenerate,
                     "retry degenerate points with mu + 1e-8 instead of skipping");

    gmagic::cli::CircuitRunConfig circuit_cfg;
    CLI::App *circuit = app.add_subcommand(
        "circuit", "nonlocal magic growth in random brick-wall matchgate circuits");
    add_common(circuit, &circuit_cfg.common);
    circuit->add_option("--L", circuit_cfg.sites, "number of sites (even)");
    circuit->add_option("--t-max", circuit_cfg.t_max, "circuit depth in brick-wall periods");
    circuit->add_option("--realizations", circuit_cfg.realizations, "independent circuits");
    circuit->add_option("--alphas", circuit_cfg.alphas, "Renyi indices (integers >= 2)")
        ->delimiter(',');

    gmagic::cli::QuenchConfig quench_cfg;
    CLI::App *quench = app.add_subcommand(
        "quench", "Neel-state quench under the XY chain: nonlocal magic vs entanglement");
    add_common(quench, &quench_cfg.common);
    quench->add_option("--L", quench_cfg.sites, "number of sites (even)");
    quench->add_option("--gammas", quench_cfg.gammas, "anisotropies")->delimiter(',');
    quench->add_option("--t-max", quench_cfg.t_max, "final time (default L/4)");
    quench->add_option("--dt", quench_cfg.dt, "time step");
    quench->add_flag("--periodic", quench_cfg.periodic_bc,
                     "periodic boundary conditions (default open)");

    CLI::App *selftest =
        app.add_subcommand("selftest", "oracle-equivalence and closed-form checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (anneal->parsed()) gmagic::cli::cmd_anneal(anneal_cfg, std::cout);
        if (ensemble->parsed()) gmagic::cli::cmd_ensemble(ensemble_cfg, std::cout);
        if (kitaev->parsed()) gmagic::cli::cmd_kitaev(kitaev_cfg, std::cout);
        if (circuit->parsed()) gmagic::cli::cmd_circuit(circuit_cfg, std::cout);
        if (quench->parsed()) gmagic::cli::cmd_quench(quench_cfg, std::cout);
        if (selftest->parsed()) {
            if (gmagic::cli::cmd_selftest(std::cout) != 0) return 1;
        }
    } catch (const gmagic::InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gmagic::ResourceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
