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

#include "gmagic/anneal.hpp"

#include <cmath>
#include <string>

#include "gmagic/errors.hpp"

namespace gmagic {

void AnnealingSchedule::validate() const {
    if (beta0 <= 0.0 || d_beta <= 0.0 || stages < 1 || steps_per_stage < 1 || eps0 <= 0.0 ||
        polish_sweeps < 0) {
        throw InputError("AnnealingSchedule: all parameters must be positive");
    }
}

namespace {

Eigen::MatrixXd random_antisymmetric(Rng &rng, int dim) {
    Eigen::MatrixXd q(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            q(i, j) = rng.normal();
        }
    }
    return 0.5 * (q - q.transpose());
}

}  // namespace

SpecialOrthogonal propose_local_move(Rng &rng, const Bipartition &p, double eps) {
    if (eps <= 0.0) {
        throw InputError("propose_local_move: eps must be positive");
    }
    const int da = 2 * p.m();
    const int db = 2 * p.n();
    const SkewMatrix ka = SkewMatrix::antisymmetric_part(random_antisymmetric(rng, da));
    const SkewMatrix kb = SkewMatrix::antisymmetric_part(random_antisymmetric(rng, db));
    Eigen::MatrixXd o = Eigen::MatrixXd::Zero(da + db, da + db);
    o.topLeftCorner(da, da) = expm_antisymmetric(ka, eps).mat();
    o.bottomRightCorner(db, db) = expm_antisymmetric(kb, eps).mat();
    return SpecialOrthogonal(o);
}

AnnealResult anneal(const CovarianceMatrix &gamma0, const Bipartition &p,
                    const AnnealingSchedule &sched, Rng &rng, int site_cap) {
    sched.validate();
    if (p.sites() != gamma0.sites()) {
        throw InputError("anneal: bipartition does not match state size");
    }
    if (gamma0.sites() > site_cap) {
        throw ResourceError("anneal: L = " + std::to_string(gamma0.sites()) +
                            " exceeds the exact-SRE cap " + std::to_string(site_cap));
    }

    const EntanglementSpectrum initial_spec = entanglement_spectrum(gamma0, p);
    const double bound = nonlocal_bound(initial_spec, 2.0).value;

    CovarianceMatrix current = gamma0;
    double m2 = sre_exact(current, 2.0, site_cap).value;
    CovarianceMatrix best = current;
    double m2_best = m2;

    Trajectory trajectory;
    trajectory.reserve(static_cast<std::size_t>(sched.stages) *
                           static_cast<std::size_t>(sched.steps_per_stage) +
                       static_cast<std::size_t>(sched.polish_sweeps) * 32);
    std::int64_t step_index = 0;

    auto record = [&](double beta, bool accepted) {
        trajectory.push_back(TrajectoryRecord{step_index, beta, m2, m2_best, accepted});
        ++step_index;
    };

    auto consider = [&](const CovarianceMatrix &candidate, double m2_new) {
        current = candidate;
        m2 = m2_new;
        if (m2 < m2_best) {
            m2_best = m2;
            best = current;
        }
    };

    for (int stage = 0; stage < sched.stages; ++stage) {
        const double beta = sched.beta0 + stage * sched.d_beta;
        const double eps = sched.eps0 / std::sqrt(beta);
        for (int s = 0; s < sched.steps_per_stage; ++s) {
            const SpecialOrthogonal move = propose_local_move(rng, p, eps);
            const CovarianceMatrix candidate = apply_orthogonal(current, move);
            const double m2_new = sre_exact(candidate, 2.0, site_cap).value;
            const double u = rng.uniform();
            const bool accepted = u < std::min(1.0, std::exp(-beta * (m2_new - m2)));
            if (accepted) {
                consider(candidate, m2_new);
            }
            record(beta, accepted);
        }

        const EntanglementSpectrum spec = entanglement_spectrum(current, p);
        for (int k = 0; k < spec.size(); ++k) {
            if (std::abs(spec.nu(k) - initial_spec.nu(k)) > 1e-8) {
                throw ContractError("anneal: entanglement spectrum drifted during stage " +
                                    std::to_string(stage));
            }
        }
    }

    // Deterministic descent from the best state found: cycle through every
    // one-parameter local rotation exp(t K) for the elementary generators of
    // so(2m) ⊕ so(2n) and line-minimize M_2 along each.
    const double beta_final = sched.beta0 + (sched.stages - 1) * sched.d_beta;
    current = best;
    m2 = m2_best;

    const int dim = 2 * p.sites();
    std::vector<std::pair<int, int>> generators;
    for (int a = 0; a < 2 * p.m(); ++a) {
        for (int b = a + 1; b < 2 * p.m(); ++b) generators.emplace_back(a, b);
    }
    for (int a = 2 * p.m(); a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) generators.emplace_back(a, b);
    }

    auto rotated_m2 = [&](int ga, int gb, double t, CovarianceMatrix *out) {
        Eigen::MatrixXd o = Eigen::MatrixXd::Identity(dim, dim);
        o(ga, ga) = std::cos(t);
        o(gb, gb) = std::cos(t);
        o(ga, gb) = std::sin(t);
        o(gb, ga) = -std::sin(t);
        CovarianceMatrix candidate = apply_orthogonal(current, SpecialOrthogonal(o));
        const double value = sre_exact(candidate, 2.0, site_cap).value;
        if (out != nullptr) *out = std::move(candidate);
        return value;
    };

    for (int sweep = 0; sweep < sched.polish_sweeps; ++sweep) {
        const double sweep_start = m2;
        for (const auto &[ga, gb] : generators) {
            double h = 0.05;
            // Parabolic step from three samples, with a few refinements.
            for (int iter = 0; iter < 3; ++iter) {
                const double f0 = m2;
                const double fp = rotated_m2(ga, gb, h, nullptr);
                const double fm = rotated_m2(ga, gb, -h, nullptr);
                const double denom = fp - 2.0 * f0 + fm;
                double t_star;
                if (denom > 1e-18) {
                    t_star = 0.5 * h * (fm - fp) / denom;
                    t_star = std::clamp(t_star, -4.0 * h, 4.0 * h);
                } else {
                    t_star = fp < fm ? h : -h;
                }
                CovarianceMatrix candidate = current;
                const double ft = rotated_m2(ga, gb, t_star, &candidate);
                double f_best = f0;
                if (ft < f_best) {
                    f_best = ft;
                    consider(candidate, ft);
                } else if (std::min(fp, fm) < f_best) {
                    const double sgn = fp < fm ? 1.0 : -1.0;
                    CovarianceMatrix side = current;
                    const double fs = rotated_m2(ga, gb, sgn * h, &side);
                    if (fs < f_best) {
                        f_best = fs;
                        consider(side, fs);
                    }
                }
                h = std::max(std::min(std::abs(t_star), h), 0.25 * h);
                if (f0 - f_best < 1e-15) break;
            }
            record(beta_final, true);
        }
        if (sweep_start - m2 < 1e-13) break;
    }

    return AnnealResult{std::move(trajectory), std::move(best), bound};
}

}  // namespace gmagic
