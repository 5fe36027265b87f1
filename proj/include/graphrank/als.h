// Copyright 2026 The graphrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef GRAPHRANK_ALS_H
#define GRAPHRANK_ALS_H

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "graphrank/cpd.h"
#include "graphrank/state.h"

namespace graphrank {

/// Dense tensors above this many qubits are refused.
constexpr size_t kMaxAlsQubits = 16;

struct AlsConfig {
    size_t rank = 1;
    size_t max_iters = 2000;
    size_t restarts = 10;
    uint64_t seed = 0;
    /// A restart stops once the relative residual changes by less than this per sweep.
    double tol = 1e-12;
    /// Tikhonov term added to every normal-equation solve.
    double lambda = 1e-12;
    /// A rank-one term whose norm exceeds this marks the fit as diverging.
    double divergence_threshold = 1e6;
    /// Skip the remaining restarts once the best residual drops below this. 0 runs them all.
    double stop_below = 0;

    /// Throws InputError unless rank >= 1, tol > 0, lambda >= 0 and restarts >= 1.
    void validate() const;
};

/// One 2 x R factor matrix per qubit; column r of every matrix together form term r.
using CpFactors = std::vector<Eigen::MatrixXcd>;

struct AlsRestart {
    double residual = 0;
    size_t iterations = 0;
    /// Largest norm of a single rank-one term at the end of the run.
    double max_term_norm = 0;
    bool converged = false;
    bool diverged = false;
    /// The solve produced NaN/inf; the restart was abandoned.
    bool failed = false;
    /// Relative residual after initialization and after each sweep.
    std::vector<double> trajectory;
};

struct AlsResult {
    /// min over restarts of ||psi - sum of terms|| / ||psi||.
    double best_residual = 0;
    size_t best_restart = 0;
    std::vector<AlsRestart> restarts;
    CpFactors factors;
    double lambda = 0;

    const AlsRestart &best() const {
        return restarts[best_restart];
    }
    std::vector<double> restart_residuals() const;
};

/// Converts exact decomposition terms to factor matrices (weights folded into qubit 0).
CpFactors factors_from_cpd(const CpDecomposition &d);

/// Dense sum of the terms, qubit 0 most significant.
Eigen::VectorXcd evaluate_factors(const CpFactors &f);

/// Fits a rank-R CP model by alternating least squares. Random starts draw complex Gaussian
/// columns, unit-normalized, from a generator seeded by (seed, restart index). With `warm`
/// the run starts from those factors instead and `restarts` is ignored.
AlsResult als_fit(const Eigen::VectorXcd &psi, size_t n, const AlsConfig &cfg,
                  const std::optional<CpFactors> &warm = std::nullopt);
AlsResult als_fit(const StateVector &psi, const AlsConfig &cfg, const std::optional<CpFactors> &warm = std::nullopt);

struct SweepRow {
    size_t rank = 0;
    double best_residual = 0;
    size_t iterations = 0;
    double max_term_norm = 0;
    bool diverged = false;
};

/// Fits each rank in [r_min, r_max]. Rank R+1 also runs from the best rank-R factors plus a
/// column that is zero on qubit 0, so the best residual never increases with R.
std::vector<SweepRow> rank_sweep(const StateVector &psi, size_t r_min, size_t r_max, const AlsConfig &cfg);

}  // namespace graphrank

#endif
