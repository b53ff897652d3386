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

#ifndef GMAGIC_ANNEAL_HPP_
#define GMAGIC_ANNEAL_HPP_

#include <cstdint>
#include <vector>

#include "gmagic/gstate.hpp"
#include "gmagic/magic.hpp"
#include "gmagic/rng.hpp"

namespace gmagic {

/// Metropolis schedule: stage s runs at beta = beta0 + s * d_beta with
/// proposal scale eps = eps0 / sqrt(beta). The linear beta ramp alone leaves
/// an equipartition gap of order (orbit dimension)/(2 beta), far above 1e-3
/// at the default 60 stages, so the run ends with a deterministic descent
/// phase: cyclic line minimization of M_2 along every so(2m) ⊕ so(2n)
/// generator, which drives the best state into its local minimum.
struct AnnealingSchedule {
    double beta0 = 1.0;
    double d_beta = 0.5;
    int stages = 60;
    int steps_per_stage = 200;
    double eps0 = 1.0;
    int polish_sweeps = 25;

    void validate() const;
};

struct TrajectoryRecord {
    std::int64_t step;
    double beta;
    double m2_current;
    double m2_best;
    bool accepted;
};

using Trajectory = std::vector<TrajectoryRecord>;

struct AnnealResult {
    Trajectory trajectory;
    CovarianceMatrix best_state;
    double bound;  // nonlocal bound of the initial state at alpha = 2
};

/// Block-diagonal local rotation O_A ⊕ O_B with O_X = exp(eps K_X),
/// K_X = (Q_X - Q_X^T)/2, Q_X iid standard normal.
SpecialOrthogonal propose_local_move(Rng &rng, const Bipartition &p, double eps);

/// Anneal M_2 over the local Gaussian orbit of gamma0. The entanglement
/// spectrum (hence the bound) is fixed by gamma0; every stage asserts it is
/// unchanged within 1e-8 as a corruption check.
AnnealResult anneal(const CovarianceMatrix &gamma0, const Bipartition &p,
                    const AnnealingSchedule &sched, Rng &rng, int site_cap = kSreSiteCap);

}  // namespace gmagic

#endif  // GMAGIC_ANNEAL_HPP_
