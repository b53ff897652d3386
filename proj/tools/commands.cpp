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

#include "commands.hpp"

#include <chrono>
#include <limits>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gmagic/ensemble.hpp"
#include "gmagic/errors.hpp"
#include "gmagic/magic.hpp"
#include "gmagic/oracle.hpp"
#include "gmagic/parallel.hpp"
#include "gmagic/runio.hpp"
#include "gmagic/stats.hpp"

namespace gmagic::cli {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return Rng::stream(seed, index).bits();
}

std::string list_text(const std::vector<int> &v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

std::string list_text(const std::vector<double> &v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << format_real(v[i]);
    return s.str();
}

}  // namespace

int CommonConfig::effective_workers() const {
    return workers >= 1 ? workers : default_workers();
}

void cmd_anneal(const AnnealConfig &cfg, std::ostream &log) {
    if (cfg.m < 1 || cfg.m >= cfg.sites) {
        throw InputError("anneal: need 1 <= m < L");
    }
    Rng state_rng = Rng::stream(cfg.common.seed, 0);
    const CovarianceMatrix gamma0 =
        apply_orthogonal(vacuum(cfg.sites), haar_special_orthogonal(state_rng, 2 * cfg.sites));
    const Bipartition p(cfg.m, cfg.sites - cfg.m);

    Rng chain_rng = Rng::stream(cfg.common.seed, 1);
    const AnnealResult result = anneal(gamma0, p, cfg.schedule, chain_rng, cfg.site_cap);

    TableMeta meta;
    meta.command = "anneal";
    meta.seed = cfg.common.seed;
    meta.add("L", cfg.sites);
    meta.add("m", cfg.m);
    meta.add("beta0", cfg.schedule.beta0);
    meta.add("d_beta", cfg.schedule.d_beta);
    meta.add("stages", cfg.schedule.stages);
    meta.add("steps_per_stage", cfg.schedule.steps_per_stage);
    meta.add("eps0", cfg.schedule.eps0);
    meta.add("polish_sweeps", cfg.schedule.polish_sweeps);
    meta.add("site_cap", cfg.site_cap);
    meta.add("bound", result.bound);

    Table table;
    table.columns = {"step", "beta", "m2", "m2_minus_bound", "accepted"};
    for (const TrajectoryRecord &rec : result.trajectory) {
        table.add_row({rec.step, rec.beta, rec.m2_current, rec.m2_current - result.bound,
                       static_cast<std::int64_t>(rec.accepted ? 1 : 0)});
    }
    const std::string out = cfg.common.out.empty() ? "anneal" : cfg.common.out;
    const std::string path = write_table(out, cfg.common.json, meta, table);
    log << "anneal: wrote " << path << " (final gap "
        << format_real(result.trajectory.back().m2_best - result.bound) << ")\n";
}

void cmd_ensemble(const EnsembleConfig &cfg, std::ostream &log) {
    if (cfg.samples < 1) {
        throw InputError("ensemble: need at least one sample");
    }
    TableMeta meta;
    meta.command = "ensemble";
    meta.seed = cfg.common.seed;
    meta.add("sizes", list_text(cfg.sizes));
    meta.add("ells", list_text(cfg.ells));
    meta.add("samples", cfg.samples);

    Table table;
    table.columns = {"L", "ell", "samples", "mean_density", "stderr", "j_thermo"};
    std::uint64_t row_index = 0;
    for (int sites : cfg.sizes) {
        for (double ell : cfg.ells) {
            int m = static_cast<int>(std::lround(ell * sites));
            m = std::clamp(m, 1, sites - 1);
            const EnsembleEstimate est =
                sample_nonlocal_density(derive_seed(cfg.common.seed, row_index++), sites, m,
                                        cfg.samples, cfg.common.effective_workers());
            table.add_row({static_cast<std::int64_t>(sites), est.ell,
                           static_cast<std::int64_t>(est.samples), est.mean, est.std_error,
                           j_thermo_fraction(m, sites)});
        }
    }
    const std::string out = cfg.common.out.empty() ? "ensemble" : cfg.common.out;
    const std::string path = write_table(out, cfg.common.json, meta, table);
    log << "ensemble: wrote " << path << "\n";
}

namespace {

struct KitaevPoint {
    double m2nl = std::numeric_limits<double>::quiet_NaN();
    std::string flag = "ok";
};

KitaevPoint kitaev_point(double t, double delta, double mu, int sites, int m,
                         BoundaryCondition bc, bool perturb) {
    KitaevPoint point;
    double use_mu = mu;
    for (;;) {
        try {
            const CovarianceMatrix gs = ground_state(kitaev(sites, t, delta, use_mu, bc));
            point.m2nl =
                nonlocal_bound(entanglement_spectrum(gs, Bipartition(m, sites - m)), 2.0).value;
            return point;
        } catch (const DegeneracyError &) {
            if (!perturb || point.flag == "perturbed") {
                point.flag = "degenerate";
                return point;
            }
            use_mu = mu + 1e-8;
            point.flag = "perturbed";
        }
    }
}

}  // namespace

void cmd_kitaev(const KitaevConfig &cfg, std::ostream &log) {
    if (cfg.mu_step <= 0.0 || cfg.mu_max < cfg.mu_min) {
        throw InputError("kitaev: bad mu grid");
    }
    const BoundaryCondition bc =
        cfg.open_bc ? BoundaryCondition::kOpen : BoundaryCondition::kPeriodic;
    const int workers = cfg.common.effective_workers();

    TableMeta meta;
    meta.command = "kitaev";
    meta.seed = cfg.common.seed;
    meta.add("t", cfg.t);
    meta.add("delta", cfg.delta);
    meta.add("mu_min", cfg.mu_min);
    meta.add("mu_max", cfg.mu_max);
    meta.add("mu_step", cfg.mu_step);
    meta.add("sizes", list_text(cfg.sizes));
    meta.add("critical_mu", cfg.critical_mu);
    meta.add("ells", list_text(cfg.ells));
    meta.add("bc", cfg.open_bc ? "open" : "periodic");
    meta.add("perturb_degenerate", cfg.perturb_degenerate ? "true" : "false");

    std::vector<double> mu_grid;
    for (double mu = cfg.mu_min; mu <= cfg.mu_max + 0.5 * cfg.mu_step; mu += cfg.mu_step) {
        mu_grid.push_back(mu);
    }

    // File A: symmetric-cut scan over the mu grid for each size.
    Table mu_table;
    mu_table.columns = {"mu", "L", "m2nl", "flag"};
    for (int sites : cfg.sizes) {
        std::vector<KitaevPoint> points(mu_grid.size());
        parallel_for(static_cast<int>(mu_grid.size()), workers, [&](int i) {
            points[static_cast<std::size_t>(i)] =
                kitaev_point(cfg.t, cfg.delta, mu_grid[static_cast<std::size_t>(i)], sites,
                             sites / 2, bc, cfg.perturb_degenerate);
        });
        for (std::size_t i = 0; i < mu_grid.size(); ++i) {
            mu_table.add_row({mu_grid[i], static_cast<std::int64_t>(sites), points[i].m2nl,
                              points[i].flag});
        }
    }

    // File B: cut-fraction scan at the critical coupling for each size.
    Table ell_table;
    ell_table.columns = {"ell", "L", "m2nl", "flag"};
    for (int sites : cfg.sizes) {
        std::vector<int> ms;
        for (double ell : cfg.ells) {
            ms.push_back(std::clamp(static_cast<int>(std::lround(ell * sites)), 1, sites - 1));
        }
        std::vector<KitaevPoint> points(ms.size());
        parallel_for(static_cast<int>(ms.size()), workers, [&](int i) {
            points[static_cast<std::size_t>(i)] =
                kitaev_point(cfg.t, cfg.delta, cfg.critical_mu, sites,
                             ms[static_cast<std::size_t>(i)], bc, cfg.perturb_degenerate);
        });
        for (std::size_t i = 0; i < ms.size(); ++i) {
            ell_table.add_row({static_cast<double>(ms[i]) / sites,
                               static_cast<std::int64_t>(sites), points[i].m2nl,
                               points[i].flag});
        }
    }

    const std::string prefix = cfg.common.out.empty() ? "kitaev" : cfg.common.out;
    const std::string path_a = write_table(prefix + "_mu", cfg.common.json, meta, mu_table);
    const std::string path_b = write_table(prefix + "_ell", cfg.common.json, meta, ell_table);
    log << "kitaev: wrote " << path_a << " and " << path_b << "\n";
}

void cmd_circuit(const CircuitRunConfig &cfg, std::ostream &log) {
    if (cfg.sites % 2 != 0) {
        throw InputError("circuit: need an even number of sites");
    }
    if (cfg.t_max < 1 || cfg.realizations < 1) {
        throw InputError("circuit: need t_max >= 1 and at least one realization");
    }
    for (int alpha : cfg.alphas) {
        if (alpha < 2) throw InputError("circuit: Renyi indices must be integers >= 2");
    }

    // curves[r][t][a]
    std::vector<std::vector<std::vector<double>>> curves(
        static_cast<std::size_t>(cfg.realizations));
    parallel_for(cfg.realizations, cfg.common.effective_workers(), [&](int r) {
        Rng rng = Rng::stream(cfg.common.seed, static_cast<std::uint64_t>(r));
        CovarianceMatrix gamma = vacuum(cfg.sites);
        auto &curve = curves[static_cast<std::size_t>(r)];
        curve.reserve(static_cast<std::size_t>(cfg.t_max));
        const Bipartition cut(cfg.sites / 2, cfg.sites / 2);
        for (int t = 1; t <= cfg.t_max; ++t) {
            gamma = brickwall_step(gamma, rng, LayerParity::kEven);
            gamma = brickwall_step(gamma, rng, LayerParity::kOdd);
            const EntanglementSpectrum spec = entanglement_spectrum(gamma, cut);
            std::vector<double> values;
            values.reserve(cfg.alphas.size());
            for (int alpha : cfg.alphas) {
                values.push_back(nonlocal_bound(spec, static_cast<double>(alpha)).value);
            }
            curve.push_back(std::move(values));
        }
    });

    TableMeta meta;
    meta.command = "circuit";
    meta.seed = cfg.common.seed;
    meta.add("L", cfg.sites);
    meta.add("t_max", cfg.t_max);
    meta.add("realizations", cfg.realizations);
    meta.add("alphas", list_text(cfg.alphas));
    meta.add("initial", "vacuum");

    Table table;
    table.columns = {"t", "alpha", "m2nl_mean", "m2nl_stderr"};
    for (int t = 1; t <= cfg.t_max; ++t) {
        for (std::size_t a = 0; a < cfg.alphas.size(); ++a) {
            double mean = 0.0;
            for (int r = 0; r < cfg.realizations; ++r) {
                mean += curves[static_cast<std::size_t>(r)][static_cast<std::size_t>(t - 1)][a];
            }
            mean /= cfg.realizations;
            double var = 0.0;
            for (int r = 0; r < cfg.realizations; ++r) {
                const double v =
                    curves[static_cast<std::size_t>(r)][static_cast<std::size_t>(t - 1)][a];
                var += (v - mean) * (v - mean);
            }
            const double std_error =
                cfg.realizations > 1
                    ? std::sqrt(var / (cfg.realizations * (cfg.realizations - 1.0)))
                    : 0.0;
            table.add_row({static_cast<std::int64_t>(t),
                           static_cast<std::int64_t>(cfg.alphas[a]), mean, std_error});
        }
    }
    const std::string out = cfg.common.out.empty() ? "circuit" : cfg.common.out;
    const std::string path = write_table(out, cfg.common.json, meta, table);
    log << "circuit: wrote " << path << "\n";
}

void cmd_quench(const QuenchConfig &cfg, std::ostream &log) {
    if (cfg.sites % 2 != 0) {
        throw InputError("quench: need an even number of sites");
    }
    if (cfg.dt <= 0.0) {
        throw InputError("quench: need dt > 0");
    }
    const double t_max = cfg.t_max > 0.0 ? cfg.t_max : cfg.sites / 4.0;
    const BoundaryCondition bc =
        cfg.periodic_bc ? BoundaryCondition::kPeriodic : BoundaryCondition::kOpen;

    TableMeta meta;
    meta.command = "quench";
    meta.seed = cfg.common.seed;
    meta.add("L", cfg.sites);
    meta.add("gammas", list_text(cfg.gammas));
    meta.add("t_max", t_max);
    meta.add("dt", cfg.dt);
    meta.add("bc", cfg.periodic_bc ? "periodic" : "open");
    meta.add("initial", "neel");

    const int steps = static_cast<int>(std::floor(t_max / cfg.dt + 1e-9));
    const Bipartition cut(cfg.sites / 2, cfg.sites / 2);
    const CovarianceMatrix start = neel(cfg.sites);

    Table table;
    table.columns = {"t", "gamma_an", "m2nl", "entanglement_entropy"};
    for (double gamma_an : cfg.gammas) {
        const Propagator prop(xy(cfg.sites, gamma_an, bc));
        std::vector<std::pair<double, double>> values(static_cast<std::size_t>(steps) + 1);
        parallel_for(steps + 1, cfg.common.effective_workers(), [&](int i) {
            const double t = i * cfg.dt;
            const CovarianceMatrix gamma = i == 0 ? start : prop.apply(start, t);
            const EntanglementSpectrum spec = entanglement_spectrum(gamma, cut);
            values[static_cast<std::size_t>(i)] = {nonlocal_bound(spec, 2.0).value,
                                                   entanglement_entropy(spec, 1.0)};
        });
        for (int i = 0; i <= steps; ++i) {
            table.add_row({i * cfg.dt, gamma_an, values[static_cast<std::size_t>(i)].first,
                           values[static_cast<std::size_t>(i)].second});
        }
    }
    const std::string out = cfg.common.out.empty() ? "quench" : cfg.common.out;
    const std::string path = write_table(out, cfg.common.json, meta, table);
    log << "quench: wrote " << path << "\n";
}

namespace {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

Check check_sre_oracle() {
    double worst = 0.0;
    Rng rng(20260810);
    for (int sites : {2, 3}) {
        for (int trial = 0; trial < 3; ++trial) {
            const CovarianceMatrix gamma =
                apply_orthogonal(vacuum(sites), haar_special_orthogonal(rng, 2 * sites));
            const oracle::Vector psi = oracle::state_of_covariance(gamma.mat());
            for (double alpha : {2.0, 3.0}) {
                const double dev =
                    std::abs(sre_exact(gamma, alpha).value - oracle::sre_from_state(psi, alpha));
                worst = std::max(worst, dev);
            }
        }
    }
    return {"sre_exact vs dense Pauli-string oracle (L<=3)", worst <= 1e-10,
            "max deviation " + format_real(worst)};
}

Check check_saturation() {
    double worst = 0.0;
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Bipartition p(2, 2);
        const EntanglementSpectrum spec({rng.uniform(), rng.uniform()});
        const CovarianceMatrix gamma = canonical_covariance(spec, p);
        worst = std::max(worst, std::abs(sre_exact(gamma, 2.0).value -
                                         nonlocal_bound(spec, 2.0).value));
    }
    return {"nonlocal bound saturation on canonical states (L=4)", worst <= 1e-10,
            "max deviation " + format_real(worst)};
}

Check check_thermo() {
    const double j_half = j_thermo(0.5);
    const double expected = std::log(8.0 - 4.0 * std::sqrt(3.0));
    double worst = std::abs(j_half - expected);
    for (double ell : {0.1, 0.25, 0.4, 0.5}) {
        worst = std::max(worst, std::abs(j_quadrature(ell) - j_thermo(ell)));
    }
    return {"thermodynamic closed form vs quadrature", worst <= 1e-8,
            "max deviation " + format_real(worst)};
}

Check check_matrix_inequality() {
    Rng rng(99);
    int violations = 0;
    double worst_eq = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::MatrixXd a(3, 5);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 5; ++j) a(i, j) = rng.normal();
        }
        for (int alpha : {2, 3}) {
            const SchattenGap gap = lp_schatten_gap(a, alpha);
            if (gap.lhs > gap.rhs + 1e-12) ++violations;
        }
    }
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(3, 5);
    diag(0, 0) = 1.4;
    diag(1, 1) = -0.2;
    diag(2, 2) = 0.9;
    for (int alpha : {2, 3}) {
        const SchattenGap gap = lp_schatten_gap(diag, alpha);
        worst_eq = std::max(worst_eq, std::abs(gap.lhs - gap.rhs));
    }
    return {"entrywise vs singular-value power inequality (10^3 trials)",
            violations == 0 && worst_eq <= 1e-12,
            std::to_string(violations) + " violations, diagonal gap " + format_real(worst_eq)};
}

Check check_hessian() {
    Rng rng(31);
    double max_eig = -1e300;
    for (int trial = 0; trial < 100; ++trial) {
        const double nu_a = 0.02 + 0.96 * rng.uniform();
        const double nu_b = 0.02 + 0.96 * rng.uniform();
        const InterblockHessian h = interblock_hessian(nu_a, nu_b, 2);
        for (double eig : h.eigenvalues) max_eig = std::max(max_eig, eig);
    }
    return {"inter-block Hessian negativity (100 random pairs)", max_eig < -1e-8,
            "largest eigenvalue " + format_real(max_eig)};
}

}  // namespace

int cmd_selftest(std::ostream &log) {
    const auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    for (const Check &check : {check_sre_oracle(), check_saturation(), check_thermo(),
                               check_matrix_inequality(), check_hessian()}) {
        log << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " (" << check.detail
            << ")\n";
        if (!check.pass) ++failures;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    log << "selftest: " << (failures == 0 ? "all checks passed" : "FAILURES PRESENT") << " in "
        << elapsed.count() << " ms\n";
    return failures;
}

}  // namespace gmagic::cli
