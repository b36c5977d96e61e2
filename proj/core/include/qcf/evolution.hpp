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
 * Closed-form thermal-bath evolution of characteristic functions, the
 * observables compared against them, and the sensitivity analysis (most
 * sensitive k, decay-rate comparison).
 *
 * Time arguments named gamma_t are dimensionless (gamma * t). gamma itself
 * only enters quantities that are rates per physical time.
 */

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qcf/states.hpp"
#include "qcf/types.hpp"

namespace qcf {

struct KRange {
    double lo = 0.0;
    double hi = 12.0;
};

struct EvolvedObservables {
    double gamma_t = 0.0;
    double mean_n = 0.0;
    double mandel_q = 0.0;
    double p_initial = 1.0;
    double g_norm = 1.0;
};

/// chi(xi, t) = exp{-(nbar + 1/2)|xi|^2 [1 - e^{-2 gamma t}]} chi(xi e^{-gamma t}, 0)
[[nodiscard]] cplx wigner_cf_evolved(const WignerCf &initial_cf,
                                     const BathParams &bath, double gamma_t,
                                     cplx xi);

/// G(k, t, phi) = chi(i k e^{-i phi}, t) through the generic path above.
[[nodiscard]] cplx cf_evolved(const StateSpec &state, const BathParams &bath,
                              double gamma_t, double k, double phi);

/// Closed form for a Fock input:
/// exp{-nbar [1 - e^{-2 gamma t}] k^2} L_m(k^2 e^{-2 gamma t}) e^{-k^2/2}.
[[nodiscard]] double cf_fock_evolved(int m, const BathParams &bath,
                                     double gamma_t, double k);

/// dG_m/dt at t = 0, per physical time:
/// 2 gamma [L_{m-1}^{(1)}(k^2) - nbar L_m(k^2)] k^2 e^{-k^2/2}.
[[nodiscard]] double cf_fock_time_derivative_at_zero(int m,
                                                     const BathParams &bath,
                                                     double k);

/// argmax_k |dG_m/dt (k, 0)| on the range: 0.001 grid scan, then golden
/// section around the best node.
[[nodiscard]] double find_kmax_fock(int m, const BathParams &bath,
                                    KRange range = {});

/// sqrt(2 e^{2r}); independent of the bath.
[[nodiscard]] double kmax_squeezed(double r);

/// Mandel Q(t) of an initial Fock state |m>.
[[nodiscard]] double mandel_q(int m, const BathParams &bath, double gamma_t);

/// <n(t)> = m e^{-2 gamma t} + nbar (1 - e^{-2 gamma t}).
[[nodiscard]] double mean_excitation(double n0, const BathParams &bath,
                                     double gamma_t);

/// Minimum (phi = 0) quadrature variance of an evolving squeezed vacuum.
[[nodiscard]] double variance_min_squeezed(double r, const BathParams &bath,
                                           double gamma_t);

/// G_sv(k, t) at phi = 0: exp(-k^2 Var_min(t) / 2).
[[nodiscard]] double cf_squeezed_evolved_min(double r, const BathParams &bath,
                                             double gamma_t, double k);

struct DecayRates {
    double k = 0.0;
    double cf_rate = 0.0;         ///< -(dg_m/d(gamma t))(k, 0)
    double population_rate = 0.0; ///< -(dp_m/d(gamma t))(0), from the oracle
    [[nodiscard]] double ratio() const { return cf_rate / population_rate; }
};

/// Instantaneous decay rates at t = 0 of the normalized characteristic
/// function at k and of the initial Fock population.
[[nodiscard]] DecayRates decay_rates(int m, const BathParams &bath, double k);

/// decay_rates(m, bath, find_kmax_fock(m, bath)).ratio()
[[nodiscard]] double decay_rate_ratio(int m, const BathParams &bath);

/// Sum_n p_n G_n(k). Throws DomainError on negative weights or total weight
/// above 1 + 1e-9.
[[nodiscard]] double cf_as_fock_mixture(std::span<const std::pair<int, double>> occupations,
                                        double k);

} // namespace qcf
