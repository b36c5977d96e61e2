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

/**
 * @file
 * Independent numerical ground truth: a truncated Fock-basis density matrix,
 * the thermal-bath master equation
 *
 *   d rho/dt = gamma (nbar+1) [2 a rho a^+ - a^+ a rho - rho a^+ a]
 *            + gamma nbar     [2 a^+ rho a - a a^+ rho - rho a a^+]
 *
 * integrated with fixed-step RK4 plus step halving, and characteristic
 * functions computed directly as Tr[rho D(xi)] from displacement-operator
 * matrix elements.
 *
 * Nothing here calls into the closed-form evolution code; the two paths are
 * compared against each other in the tests.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcf/types.hpp"

namespace qcf::oracle {

using Matrix = Eigen::MatrixXcd;

/// Hermitian, unit-trace, truncated Fock-basis state. Immutable once built.
class DensityMatrix {
  public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-9;
    static constexpr double kDiagonalTol = 1e-12;
    static constexpr double kTailTol = 1e-8;
    static constexpr std::size_t kTailWidth = 5;

    /// Validates Hermiticity, trace and diagonal positivity (DomainError on
    /// failure). Truncation health is a separate check.
    explicit DensityMatrix(Matrix rho);

    /// |n><n| in a space of dimension dim.
    static DensityMatrix fock(std::size_t dim, std::size_t n);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(rho_.rows());
    }
    [[nodiscard]] const Matrix &matrix() const noexcept { return rho_; }
    [[nodiscard]] cplx operator()(std::size_t m, std::size_t n) const {
        return rho_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    }

    /// Population in the top kTailWidth levels.
    [[nodiscard]] double tail_mass() const;
    [[nodiscard]] bool truncation_healthy() const {
        return tail_mass() < kTailTol;
    }
    /// Throws NumericalHealthError naming 2*dim() when unhealthy.
    void require_truncation_health(const char *context) const;

  private:
    Matrix rho_;
};

enum class Method { Rk4 };

struct IntegratorConfig {
    std::size_t n_trunc = 64;
    double step = 0.01; ///< in gamma*t units; further capped by RK4 stability
    Method method = Method::Rk4;
    double tol = 1e-9; ///< max-norm agreement between successive halvings

    /// step in (0, 0.01], tol in (0, 1e-9], n_trunc >= 8.
    void validate() const;
};

/// d rho / dt (physical time) for the truncated generator. The truncated
/// operators make the generator exactly trace preserving.
[[nodiscard]] Matrix lindblad_rhs(const Matrix &rho, const BathParams &bath);
[[nodiscard]] Matrix lindblad_rhs(const DensityMatrix &rho,
                                  const BathParams &bath);

/// Populations-only generator, valid because the thermal channel never
/// couples coherences into the diagonal.
[[nodiscard]] std::vector<double> population_rhs(std::span<const double> p,
                                                 const BathParams &bath);

/// rho(gamma_t). Throws NumericalHealthError if the result leaks into the
/// top levels of the truncation.
[[nodiscard]] DensityMatrix evolve(const DensityMatrix &rho0,
                                   const BathParams &bath, double gamma_t,
                                   const IntegratorConfig &cfg = {});

/// Diagonal fast path: p_n(gamma_t) from p_n(0).
[[nodiscard]] std::vector<double> evolve_populations(std::span<const double> p0,
                                                     const BathParams &bath,
                                                     double gamma_t,
                                                     const IntegratorConfig &cfg = {});

enum class Truncation {
    Check, ///< rho approximates a state with support beyond dim()
    Exact, ///< rho is exactly supported in dim()
};

/// G(k, phi) = Tr[rho D(i k e^{-i phi})].
[[nodiscard]] cplx cf_from_density(const DensityMatrix &rho, double k,
                                   double phi,
                                   Truncation policy = Truncation::Check);

/// Matrix elements <m|D(xi)|n> for 0 <= m, n < dim.
[[nodiscard]] Matrix displacement_matrix(std::size_t dim, cplx xi);

[[nodiscard]] std::vector<double> occupations(const DensityMatrix &rho);

[[nodiscard]] double mean_number(const DensityMatrix &rho);
[[nodiscard]] double mean_number(std::span<const double> p);

/// Var(x_phi) = <x_phi^2> - <x_phi>^2 in the vacuum-variance-1 convention.
[[nodiscard]] double quadrature_variance(const DensityMatrix &rho, double phi);

/// Requires tail mass < 1e-10; throws NumericalHealthError otherwise. The
/// squeezed vacuum is built by exponentiating the truncated squeeze
/// generator (r/2)(a^2 - a^+2) and applying it to |0>.
[[nodiscard]] DensityMatrix build_initial_density(const StateSpec &state,
                                                  std::size_t n_trunc);

/// build_initial_density, doubling n_trunc until the tail check passes.
[[nodiscard]] DensityMatrix build_initial_density_auto(const StateSpec &state,
                                                       std::size_t n_trunc = 64,
                                                       std::size_t max_trunc = 1024);

/// dp_m/dt at t = 0 for |m><m|, read off the generator.
[[nodiscard]] double population_rate_at_zero(int m, const BathParams &bath);

} // namespace qcf::oracle
