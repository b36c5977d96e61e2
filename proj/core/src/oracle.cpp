// Copyright 2026 The qcf Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qcf/error.hpp"

namespace qcf::oracle {

namespace {

using Index = Eigen::Index;

constexpr int kMaxHalvings = 14;

// (a a^+)_{jj} in the truncated space: j+1, except 0 on the top level.
inline double aad(Index j, Index dim) {
    return j + 1 < dim ? static_cast<double>(j + 1) : 0.0;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

// Gershgorin-style bound on the generator's spectral radius, in 1/time.
double spectral_bound(std::size_t dim, const BathParams &bath) {
    const double n = static_cast<double>(dim);
    const double g1 = bath.gamma * (bath.nbar + 1.0);
    const double g2 = bath.gamma * bath.nbar;
    return 2.0 * (g1 * 2.0 * n + g2 * 2.0 * (n + 1.0)) + 1e-300;
}

// Fixed-step RK4 with automatic step halving. Works for any state type that
// supports the handful of vector-space operations used below.
template <class State, class Rhs, class Axpy>
State integrate(const State &y0, double t_end, double h_max, double tol,
                Rhs &&rhs, Axpy &&axpy) {
    auto run = [&](std::size_t n_steps) {
        const double h = t_end / static_cast<double>(n_steps);
        State y = y0;
        for (std::size_t s = 0; s < n_steps; ++s) {
            const State k1 = rhs(y);
            const State k2 = rhs(axpy(y, 0.5 * h, k1));
            const State k3 = rhs(axpy(y, 0.5 * h, k2));
            const State k4 = rhs(axpy(y, h, k3));
            State inc = axpy(k1, 2.0, k2);
            inc = axpy(inc, 2.0, k3);
            inc = axpy(inc, 1.0, k4);
            y = axpy(y, h / 6.0, inc);
        }
        return y;
    };

    std::size_t n_steps =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t_end / h_max)));
    State coarse = run(n_steps);
    for (int i = 0; i < kMaxHalvings; ++i) {
        n_steps *= 2;
        State fine = run(n_steps);
        if (max_abs_diff(coarse, fine) < tol) {
            return fine;
        }
        coarse = std::move(fine);
    }
    throw NumericalHealthError("RK4 step halving did not reach tolerance");
}

// <m|D(xi)|n> along one off-diagonal: alpha = |m - n| fixed, j = min(m, n)
// running. f_j = sqrt(j! / (j+alpha)!) L_j^{(alpha)}(x) / sqrt(1/alpha!) is
// carried by a rescaled Laguerre recurrence so nothing overflows.
void fill_diagonal_band(Matrix &out, Index dim, Index alpha, cplx xi, double x) {
    const Index len = dim - alpha;
    if (len <= 0) {
        return;
    }
    const double log_pref = (alpha > 0 ? alpha * std::log(std::abs(xi)) : 0.0) -
                            0.5 * std::lgamma(alpha + 1.0) - 0.5 * x;
    const double mag = std::exp(log_pref);
    const double a = static_cast<double>(alpha);
    const cplx lower_phase = std::polar(1.0, a * std::arg(xi));
    const cplx upper_phase = std::polar(1.0, a * std::arg(-std::conj(xi)));

    double f_prev = 1.0; // j = 0
    double f_cur = 0.0;
    for (Index j = 0; j < len; ++j) {
        double f = 0.0;
        if (j == 0) {
            f = 1.0;
        } else if (j == 1) {
            f = std::sqrt(1.0 / (1.0 + a)) * (1.0 + a - x);
        } else {
            const double n = static_cast<double>(j - 1);
            const double r_n = std::sqrt((n + 1.0) / (n + 1.0 + a));
            const double r_nm1 = std::sqrt(n / (n + a));
            f = ((2.0 * n + 1.0 + a - x) * r_n * f_cur -
                 (n + a) * r_n * r_nm1 * f_prev) /
                (n + 1.0);
        }
        if (j >= 1) {
            f_prev = f_cur;
        }
        f_cur = f;
        const double v = mag * f;
        out(j + alpha, j) = v * lower_phase;
        if (alpha > 0) {
            out(j, j + alpha) = v * upper_phase;
        }
    }
}

} // namespace

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) {
        throw DomainError("density matrix must be square and non-empty");
    }
    if (!rho_.allFinite()) {
        throw DomainError("density matrix has non-finite entries");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - cplx(1.0)) > kTraceTol) {
        throw DomainError("density matrix trace differs from 1 by " +
                          std::to_string(std::abs(rho_.trace() - cplx(1.0))));
    }
    if (rho_.diagonal().real().minCoeff() < -kDiagonalTol) {
        throw DomainError("density matrix has a negative population");
    }
}

DensityMatrix DensityMatrix::fock(std::size_t dim, std::size_t n) {
    if (n >= dim) {
        throw NumericalHealthError("Fock level " + std::to_string(n) +
                                       " outside truncation " + std::to_string(dim),
                                   2 * (n + 1));
    }
    Matrix rho = Matrix::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
    rho(static_cast<Index>(n), static_cast<Index>(n)) = 1.0;
    return DensityMatrix(std::move(rho));
}

double DensityMatrix::tail_mass() const {
    const Index d = rho_.rows();
    const Index w = std::min<Index>(kTailWidth, d);
    return rho_.diagonal().real().tail(w).sum();
}

void DensityMatrix::require_truncation_health(const char *context) const {
    const double tail = tail_mass();
    if (!(tail < kTailTol)) {
        throw NumericalHealthError(
            std::string(context) + ": truncation tail mass " +
                std::to_string(tail) + " at n_trunc=" + std::to_string(dim()) +
                "; rerun with n_trunc >= " + std::to_string(2 * dim()),
            2 * dim());
    }
}

void IntegratorConfig::validate() const {
    if (n_trunc < 8) {
        throw DomainError("integrator: n_trunc must be >= 8");
    }
    if (!(step > 0.0 && step <= 0.01)) {
        throw DomainError("integrator: step must lie in (0, 0.01]");
    }
    if (!(tol > 0.0 && tol <= 1e-9)) {
        throw DomainError("integrator: tol must lie in (0, 1e-9]");
    }
}

Matrix lindblad_rhs(const Matrix &rho, const BathParams &bath) {
    const Index dim = rho.rows();
    const double g1 = bath.gamma * (bath.nbar + 1.0);
    const double g2 = bath.gamma * bath.nbar;
    std::vector<double> root(static_cast<std::size_t>(dim) + 1);
    for (std::size_t j = 0; j < root.size(); ++j) {
        root[j] = std::sqrt(static_cast<double>(j));
    }
    Matrix out(dim, dim);
    for (Index n = 0; n < dim; ++n) {
        const cplx *col = rho.col(n).data();
        const cplx *next = n + 1 < dim ? rho.col(n + 1).data() : nullptr;
        const cplx *prev = n > 0 ? rho.col(n - 1).data() : nullptr;
        cplx *dst = out.col(n).data();
        const double aad_n = aad(n, dim);
        for (Index m = 0; m < dim; ++m) {
            const cplx r = col[m];
            // gamma (nbar+1) [2 a rho a^+ - a^+a rho - rho a^+a]
            cplx loss = -static_cast<double>(m + n) * r;
            if (next != nullptr && m + 1 < dim) {
                loss += 2.0 * root[static_cast<std::size_t>(m + 1)] *
                        root[static_cast<std::size_t>(n + 1)] * next[m + 1];
            }
            // gamma nbar [2 a^+ rho a - a a^+ rho - rho a a^+]
            cplx gain = -(aad(m, dim) + aad_n) * r;
            if (prev != nullptr && m > 0) {
                gain += 2.0 * root[static_cast<std::size_t>(m)] *
                        root[static_cast<std::size_t>(n)] * prev[m - 1];
            }
            dst[m] = g1 * loss + g2 * gain;
        }
    }
    return out;
}

Matrix lindblad_rhs(const DensityMatrix &rho, const BathParams &bath) {
    return lindblad_rhs(rho.matrix(), bath);
}

std::vector<double> population_rhs(std::span<const double> p,
                                   const BathParams &bath) {
    const Index dim = static_cast<Index>(p.size());
    const double g1 = bath.gamma * (bath.nbar + 1.0);
    const double g2 = bath.gamma * bath.nbar;
    std::vector<double> out(p.size());
    for (Index m = 0; m < dim; ++m) {
        const double pm = p[static_cast<std::size_t>(m)];
        double loss = -2.0 * m * pm;
        if (m + 1 < dim) {
            loss += 2.0 * (m + 1) * p[static_cast<std::size_t>(m + 1)];
        }
        double gain = -2.0 * aad(m, dim) * pm;
        if (m > 0) {
            gain += 2.0 * m * p[static_cast<std::size_t>(m - 1)];
        }
        out[static_cast<std::size_t>(m)] = g1 * loss + g2 * gain;
    }
    return out;
}

DensityMatrix evolve(const DensityMatrix &rho0, const BathParams &bath,
                     double gamma_t, const IntegratorConfig &cfg) {
    bath.validate();
    cfg.validate();
    if (!std::isfinite(gamma_t) || gamma_t < 0.0) {
        throw DomainError("evolve: gamma_t must be finite and >= 0");
    }
    if (gamma_t == 0.0) {
        return rho0;
    }
    const double t_end = gamma_t / bath.gamma;
    const double h_max =
        std::min(cfg.step / bath.gamma, 2.5 / spectral_bound(rho0.dim(), bath));
    Matrix out = integrate(
        rho0.matrix(), t_end, h_max, cfg.tol,
        [&](const Matrix &y) { return lindblad_rhs(y, bath); },
        [](const Matrix &y, double h, const Matrix &k) -> Matrix { return y + h * k; });
    // Rounding-level Hermiticity drift.
    Matrix herm = 0.5 * (out + out.adjoint());
    DensityMatrix rho(std::move(herm));
    rho.require_truncation_health("evolve");
    return rho;
}

std::vector<double> evolve_populations(std::span<const double> p0,
                                       const BathParams &bath, double gamma_t,
                                       const IntegratorConfig &cfg) {
    bath.validate();
    cfg.validate();
    if (!std::isfinite(gamma_t) || gamma_t < 0.0) {
        throw DomainError("evolve_populations: gamma_t must be finite and >= 0");
    }
    std::vector<double> y0(p0.begin(), p0.end());
    if (gamma_t == 0.0) {
        return y0;
    }
    const double t_end = gamma_t / bath.gamma;
    const double h_max =
        std::min(cfg.step / bath.gamma, 2.5 / spectral_bound(y0.size(), bath));
    auto out = integrate(
        y0, t_end, h_max, cfg.tol,
        [&](const std::vector<double> &y) { return population_rhs(y, bath); },
        [](const std::vector<double> &y, double h, const std::vector<double> &k) {
            std::vector<double> r(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) {
                r[i] = y[i] + h * k[i];
            }
            return r;
        });
    double tail = 0.0;
    for (std::size_t i = out.size() - std::min(out.size(), DensityMatrix::kTailWidth);
         i < out.size(); ++i) {
        tail += out[i];
    }
    if (!(tail < DensityMatrix::kTailTol)) {
        throw NumericalHealthError(
            "evolve_populations: truncation tail mass " + std::to_string(tail) +
                "; rerun with n_trunc >= " + std::to_string(2 * out.size()),
            2 * out.size());
    }
    return out;
}

Matrix displacement_matrix(std::size_t dim, cplx xi) {
    const Index d = static_cast<Index>(dim);
    if (xi == cplx(0.0)) {
        return Matrix::Identity(d, d);
    }
    Matrix out(d, d);
    const double x = std::norm(xi);
    for (Index alpha = 0; alpha < d; ++alpha) {
        fill_diagonal_band(out, d, alpha, xi, x);
    }
    return out;
}

cplx cf_from_density(const DensityMatrix &rho, double k, double phi,
                     Truncation policy) {
    if (!std::isfinite(k) || !std::isfinite(phi)) {
        throw DomainError("cf_from_density: non-finite argument");
    }
    if (policy == Truncation::Check) {
        rho.require_truncation_health("cf_from_density");
    }
    const cplx xi = cplx(0.0, k) * std::polar(1.0, -phi);
    const Matrix d = displacement_matrix(rho.dim(), xi);
    // Tr[rho D] = sum_{m,n} rho_{nm} D_{mn}
    return rho.matrix().transpose().cwiseProduct(d).sum();
}

std::vector<double> occupations(const DensityMatrix &rho) {
    std::vector<double> p(rho.dim());
    for (std::size_t n = 0; n < p.size(); ++n) {
        p[n] = rho(n, n).real();
    }
    return p;
}

double mean_number(std::span<const double> p) {
    double s = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        s += static_cast<double>(n) * p[n];
    }
    return s;
}

double mean_number(const DensityMatrix &rho) {
    const auto p = occupations(rho);
    return mean_number(p);
}

double quadrature_variance(const DensityMatrix &rho, double phi) {
    const std::size_t dim = rho.dim();
    cplx a1 = 0.0; // <a>
    cplx a2 = 0.0; // <a^2>
    for (std::size_t n = 1; n < dim; ++n) {
        a1 += std::sqrt(static_cast<double>(n)) * rho(n, n - 1);
        if (n >= 2) {
            a2 += std::sqrt(static_cast<double>(n) * (n - 1)) * rho(n, n - 2);
        }
    }
    const cplx e1 = std::polar(1.0, phi);
    const double x1 = 2.0 * (e1 * a1).real();
    const double x2 = 2.0 * (e1 * e1 * a2).real() + 2.0 * mean_number(rho) + 1.0;
    return x2 - x1 * x1;
}

DensityMatrix build_initial_density(const StateSpec &state, std::size_t n_trunc) {
    constexpr double kInitialTail = 1e-10;
    const Index d = static_cast<Index>(n_trunc);
    if (n_trunc < DensityMatrix::kTailWidth + 1) {
        throw DomainError("build_initial_density: n_trunc too small");
    }
    auto fail = [&](double tail) -> NumericalHealthError {
        return NumericalHealthError(
            "build_initial_density(" + state.to_string() + "): tail mass " +
                std::to_string(tail) + " at n_trunc=" + std::to_string(n_trunc) +
                "; need n_trunc >= " + std::to_string(2 * n_trunc),
            2 * n_trunc);
    };
    auto tail_of = [&](const Eigen::VectorXd &p) {
        return p.tail(static_cast<Index>(DensityMatrix::kTailWidth)).sum();
    };

    if (state.is<state::Ground>()) {
        return DensityMatrix::fock(n_trunc, 0);
    }
    if (const auto *f = state.get_if<state::Fock>()) {
        if (static_cast<std::size_t>(f->m) + DensityMatrix::kTailWidth >= n_trunc) {
            throw fail(1.0);
        }
        return DensityMatrix::fock(n_trunc, static_cast<std::size_t>(f->m));
    }
    if (const auto *th = state.get_if<state::Thermal>()) {
        Eigen::VectorXd p(d);
        const double q = th->nbar / (th->nbar + 1.0);
        double pn = 1.0 / (th->nbar + 1.0);
        for (Index n = 0; n < d; ++n) {
            p(n) = pn;
            pn *= q;
        }
        const double tail = tail_of(p) + pn * (th->nbar + 1.0); // + mass beyond
        if (!(tail < kInitialTail)) {
            throw fail(tail);
        }
        p /= p.sum();
        Matrix rho = Matrix::Zero(d, d);
        rho.diagonal() = p.cast<cplx>();
        return DensityMatrix(std::move(rho));
    }
    const auto &sv = *state.get_if<state::SqueezedVacuum>();
    // The squeeze generator only couples even levels; exponentiate there.
    const Index half = (d + 1) / 2;
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(half, half);
    for (Index j = 0; j + 1 < half; ++j) {
        // <2j+2| a^+2 |2j> = sqrt((2j+1)(2j+2))
        const double c = std::sqrt(static_cast<double>((2 * j + 1) * (2 * j + 2)));
        gen(j + 1, j) = -0.5 * sv.r * c;
        gen(j, j + 1) = 0.5 * sv.r * c;
    }
    const Eigen::MatrixXd u = gen.exp();
    const Eigen::VectorXd psi_even = u.col(0);
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(d);
    for (Index j = 0; j < half; ++j) {
        psi(2 * j) = psi_even(j);
    }
    const Eigen::VectorXd p = psi.cwiseAbs2();
    const double tail = tail_of(p);
    if (!(tail < kInitialTail)) {
        throw fail(tail);
    }
    psi /= psi.norm();
    Matrix rho = (psi * psi.transpose()).cast<cplx>();
    return DensityMatrix(std::move(rho));
}

DensityMatrix build_initial_density_auto(const StateSpec &state,
                                         std::size_t n_trunc,
                                         std::size_t max_trunc) {
    for (std::size_t n = n_trunc;; n *= 2) {
        try {
            return build_initial_density(state, n);
        } catch (const NumericalHealthError &) {
            if (2 * n > max_trunc) {
                throw;
            }
        }
    }
}

double population_rate_at_zero(int m, const BathParams &bath) {
    if (m < 0) {
        throw DomainError("population_rate_at_zero: m must be >= 0");
    }
    const std::size_t dim = static_cast<std::size_t>(m) + 2;
    std::vector<double> p(dim, 0.0);
    p[static_cast<std::size_t>(m)] = 1.0;
    return population_rhs(p, bath)[static_cast<std::size_t>(m)];
}

} // namespace qcf::oracle
