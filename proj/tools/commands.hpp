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

#ifndef GMAGIC_TOOLS_COMMANDS_HPP_
#define GMAGIC_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gmagic/anneal.hpp"
#include "gmagic/models.hpp"

namespace gmagic::cli {

struct CommonConfig {
    std::uint64_t seed = 1;
    std::string out;
    int workers = 0;  // 0: GMAGIC_WORKERS env or hardware concurrency
    bool json = false;

    int effective_workers() const;
};

struct AnnealConfig {
    CommonConfig common;
    int sites = 4;
    int m = 1;
    AnnealingSchedule schedule;
    int site_cap = 8;
};

struct EnsembleConfig {
    CommonConfig common;
    std::vector<int> sizes{16, 32, 64};
    std::vector<double> ells{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    int samples = 100;
};

struct KitaevConfig {
    CommonConfig common;
    double t = 1.0;
    double delta = 1.0;
    double mu_min = 0.0;
    double mu_max = 4.0;
    double mu_step = 0.05;
    std::vector<int> sizes{32, 64, 128};
    double critical_mu = 2.0;
    std::vector<double> ells{0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875};
    bool open_bc = false;
    bool perturb_degenerate = false;  // retry zero modes with mu + 1e-8
};

struct CircuitRunConfig {
    CommonConfig common;
    int sites = 200;
    int t_max = 100;
    int realizations = 10;
    std::vector<int> alphas{2, 3, 4};
};

struct QuenchConfig {
    CommonConfig common;
    int sites = 200;
    std::vector<double> gammas{0.0, 0.5};
    double t_max = 0.0;  // 0: defaults to L/4
    double dt = 0.5;
    bool periodic_bc = false;
};

/// Each command writes its table file(s) and reports the paths on `log`.
void cmd_anneal(const AnnealConfig &cfg, std::ostream &log);
void cmd_ensemble(const EnsembleConfig &cfg, std::ostream &log);
void cmd_kitaev(const KitaevConfig &cfg, std::ostream &log);
void cmd_circuit(const CircuitRunConfig &cfg, std::ostream &log);
void cmd_quench(const QuenchConfig &cfg, std::ostream &log);

/// Oracle-equivalence and closed-form checks; returns the number of failed
/// checks and prints one PASS/FAIL line per check.
int cmd_selftest(std::ostream &log);

}  // namespace gmagic::cli

#endif  // GMAGIC_TOOLS_COMMANDS_HPP_
