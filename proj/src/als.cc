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


#include "graphrank/als.h"

#include <cmath>
#include <limits>
#include <random>

#include "graphrank/errors.h"

namespace graphrank {

namespace {

// Below this a fit is treated as exact and the restart ends.
constexpr double kExactFitFloor = 1e-14;

bool bit_of(size_t x, size_t n, size_t q) {
    return (x >> (n - 1 - q)) & 1;
}

double relative_residual(const Eigen::VectorXcd &psi, double psi_norm, const CpFactors &f) {
    return (psi - evaluate_factors(f)).norm() / psi_norm;
}

// Rescales each column so every qubit carries the same share of the term norm. The
// model is unchanged. Returns the largest term norm.
double balance(CpFactors &f) {
    size_t n = f.size();
    double worst = 0;
    for (Eigen::Index r = 0; r < f[0].cols(); r++) {
        double log_total = 0;
        bool degenerate = false;
        for (const auto &u : f) {
            double c = u.col(r).norm();
            if (c == 0) {
                degenerate = true;
                break;
            }
            log_total += std::log(c);
        }
        if (degenerate) {
            continue;
        }
        double target = std::exp(log_total / static_cast<double>(n));
        for (auto &u : f) {
            u.col(r) *= target / u.col(r).norm();
        }
        worst = std::max(worst, std::exp(log_total));
    }
    return worst;
}

double max_term_norm(const CpFactors &f) {
    double worst = 0;
    for (Eigen::Index r = 0; r < f[0].cols(); r++) {
        double p = 1;
        for (const auto &u : f) {
            p *= u.col(r).norm();
        }
        worst = std::max(worst, p);
    }
    return worst;
}

// Least-squares update of qubit i's factor with the others held fixed:
// U_i G = M, G = hadamard_{j != i} U_j^T conj(U_j), M[a][r] = sum_{x_i = a} psi[x] conj(K_r(x)).
bool update_mode(const Eigen::VectorXcd &psi, size_t n, size_t i, double lambda, CpFactors &f) {
    Eigen::Index rank = f[0].cols();
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Ones(rank, rank);
    for (size_t j = 0; j < n; j++) {
        if (j != i) {
            gram = gram.cwiseProduct(f[j].transpose() * f[j].conjugate());
        }
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, rank);
    Eigen::VectorXcd k(rank);
    for (size_t x = 0; x < static_cast<size_t>(psi.size()); x++) {
        if (psi[x] == std::complex<double>(0, 0)) {
            continue;
        }
        k.setConstant(psi[x]);
        for (size_t j = 0; j < n; j++) {
            if (j != i) {
                k = k.cwiseProduct(f[j].row(bit_of(x, n, j)).conjugate().transpose());
            }
        }
        m.row(bit_of(x, n, i)) += k.transpose();
    }
    Eigen::MatrixXcd lhs = gram.transpose();
    lhs.diagonal().array() += lambda;
    Eigen::MatrixXcd next = lhs.ldlt().solve(m.transpose()).transpose();
    if (!next.allFinite()) {
        return false;
    }
    f[i] = std::move(next);
    return true;
}

CpFactors random_factors(size_t n, size_t rank, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CpFactors f;
    for (size_t q = 0; q < n; q++) {
        Eigen::MatrixXcd u(2, static_cast<Eigen::Index>(rank));
        for (Eigen::Index r = 0; r < u.cols(); r++) {
            for (Eigen::Index a = 0; a < 2; a++) {
                double re = gauss(rng);
                double im = gauss(rng);
                u(a, r) = {re, im};
            }
            u.col(r).normalize();
        }
        f.push_back(std::move(u));
    }
    return f;
}

std::mt19937_64 restart_rng(uint64_t seed, size_t restart) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(restart),
                      static_cast<uint32_t>(uint64_t{restart} >> 32)};
    return std::mt19937_64(seq);
}

AlsRestart run(const Eigen::VectorXcd &psi, size_t n, double psi_norm, const AlsConfig &cfg, CpFactors &f) {
    AlsRestart out;
    double res = relative_residual(psi, psi_norm, f);
    if (!std::isfinite(res)) {
        out.failed = true;
        out.residual = std::numeric_limits<double>::infinity();
        return out;
    }
    out.trajectory.push_back(res);
    out.max_term_norm = max_term_norm(f);
    if (res < kExactFitFloor) {
        out.converged = true;
        out.residual = res;
        return out;
    }
    for (size_t it = 0; it < cfg.max_iters; it++) {
        CpFactors previous = f;
        bool ok = true;
        for (size_t i = 0; i < n && ok; i++) {
            ok = update_mode(psi, n, i, cfg.lambda, f);
        }
        double next = ok ? relative_residual(psi, psi_norm, f) : std::numeric_limits<double>::quiet_NaN();
        if (!std::isfinite(next)) {
            out.failed = true;
            f = std::move(previous);
            break;
        }
        if (next > res) {
            // The regularized step can overshoot by O(lambda * factor norm^2); keep the better point.
            f = std::move(previous);
            out.converged = true;
            break;
        }
        out.iterations = it + 1;
        double norm = balance(f);
        out.max_term_norm = norm;
        out.trajectory.push_back(next);
        double change = res - next;
        res = next;
        if (norm > cfg.divergence_threshold) {
            out.diverged = true;
            break;
        }
        if (res < kExactFitFloor || change < cfg.tol * res) {
            out.converged = true;
            break;
        }
    }
    out.residual = res;
    out.max_term_norm = max_term_norm(f);
    out.diverged = out.diverged || out.max_term_norm > cfg.divergence_threshold;
    return out;
}

}  // namespace

void AlsConfig::validate() const {
    if (rank < 1) {
        throw InputError("ALS rank must be at least 1");
    }
    if (!(tol > 0)) {
        throw InputError("ALS tolerance must be positive");
    }
    if (!(lambda >= 0)) {
        throw InputError("ALS regularization must be nonnegative");
    }
    if (restarts < 1) {
        throw InputError("ALS needs at least one restart");
    }
    if (!(divergence_threshold > 0)) {
        throw InputError("ALS divergence threshold must be positive");
    }
}

std::vector<double> AlsResult::restart_residuals() const {
    std::vector<double> out;
    for (const auto &r : restarts) {
        out.push_back(r.residual);
    }
    return out;
}

CpFactors factors_from_cpd(const CpDecomposition &d) {
    d.validate();
    CpFactors f;
    for (size_t q = 0; q < d.n; q++) {
        Eigen::MatrixXcd u(2, static_cast<Eigen::Index>(d.terms.size()));
        for (size_t r = 0; r < d.terms.size(); r++) {
            std::complex<double> w = q == 0 ? d.terms[r].weight.to_complex() : 1.0;
            u(0, static_cast<Eigen::Index>(r)) = w * d.terms[r].factors[q][0].to_complex();
            u(1, static_cast<Eigen::Index>(r)) = w * d.terms[r].factors[q][1].to_complex();
        }
        f.push_back(std::move(u));
    }
    return f;
}

Eigen::VectorXcd evaluate_factors(const CpFactors &f) {
    size_t n = f.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    Eigen::Index rank = f.empty() ? 0 : f[0].cols();
    Eigen::VectorXcd term(rank);
    for (Eigen::Index x = 0; x < out.size(); x++) {
        term.setOnes();
        for (size_t q = 0; q < n; q++) {
            term = term.cwiseProduct(f[q].row(bit_of(static_cast<size_t>(x), n, q)).transpose());
        }
        out[x] = term.sum();
    }
    return out;
}

AlsResult als_fit(const Eigen::VectorXcd &psi, size_t n, const AlsConfig &cfg, const std::optional<CpFactors> &warm) {
    cfg.validate();
    if (n > kMaxAlsQubits) {
        throw ResourceError("ALS is limited to " + std::to_string(kMaxAlsQubits) + " qubits");
    }
    if (n < 1 || psi.size() != (Eigen::Index{1} << n)) {
        throw InputError("ALS target does not have 2^n amplitudes");
    }
    double psi_norm = psi.norm();
    if (psi_norm == 0) {
        throw InputError("ALS target is the zero vector");
    }
    AlsResult result;
    result.lambda = cfg.lambda;
    result.best_residual = std::numeric_limits<double>::infinity();
    auto consider = [&](AlsRestart r, CpFactors &f) {
        if (!r.failed && r.residual < result.best_residual) {
            result.best_residual = r.residual;
            result.best_restart = result.restarts.size();
            result.factors = f;
        }
        result.restarts.push_back(std::move(r));
    };
    if (warm) {
        if (warm->size() != n) {
            throw InputError("warm-start factors do not match the qubit count");
        }
        for (const auto &u : *warm) {
            if (u.rows() != 2 || u.cols() != static_cast<Eigen::Index>(cfg.rank)) {
                throw InputError("warm-start factor shape does not match the configured rank");
            }
        }
        CpFactors f = *warm;
        consider(run(psi, n, psi_norm, cfg, f), f);
        return result;
    }
    for (size_t k = 0; k < cfg.restarts; k++) {
        auto rng = restart_rng(cfg.seed, k);
        CpFactors f = random_factors(n, cfg.rank, rng);
        consider(run(psi, n, psi_norm, cfg, f), f);
        if (cfg.stop_below > 0 && result.best_residual < cfg.stop_below) {
            break;
        }
    }
    return result;
}

AlsResult als_fit(const StateVector &psi, const AlsConfig &cfg, const std::optional<CpFactors> &warm) {
    return als_fit(psi.to_complex(), psi.num_qubits(), cfg, warm);
}

std::vector<SweepRow> rank_sweep(const StateVector &psi, size_t r_min, size_t r_max, const AlsConfig &cfg) {
    if (r_min < 1 || r_max < r_min) {
        throw InputError("rank sweep needs 1 <= min <= max");
    }
    Eigen::VectorXcd target = psi.to_complex();
    size_t n = psi.num_qubits();
    std::vector<SweepRow> rows;
    CpFactors carried;
    for (size_t rank = r_min; rank <= r_max; rank++) {
        AlsConfig c = cfg;
        c.rank = rank;
        c.seed = cfg.seed + rank;
        AlsResult best = als_fit(target, n, c);
        if (!carried.empty()) {
            auto rng = restart_rng(c.seed, c.restarts);
            CpFactors extra = random_factors(n, 1, rng);
            CpFactors grown;
            for (size_t q = 0; q < n; q++) {
                Eigen::MatrixXcd u(2, carried[q].cols() + 1);
                u << carried[q], (q == 0 ? Eigen::MatrixXcd::Zero(2, 1) : extra[q]);
                grown.push_back(std::move(u));
            }
            AlsResult warm = als_fit(target, n, c, grown);
            if (warm.best_residual <= best.best_residual) {
                best = std::move(warm);
            }
        }
        SweepRow row;
        row.rank = rank;
        row.best_residual = best.best_residual;
        if (!best.restarts.empty() && std::isfinite(best.best_residual)) {
            row.iterations = best.best().iterations;
            row.max_term_norm = best.best().max_term_norm;
            row.diverged = best.best().diverged;
            carried = best.factors;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace graphrank
