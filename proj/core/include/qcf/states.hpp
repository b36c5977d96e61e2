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
 * Time-zero characteristic functions and quadrature densities of the
 * supported initial states.
 *
 * G(k, phi) = <exp(i k x_phi)> with x_phi = a e^{i phi} + a^dagger e^{-i phi};
 * the Wigner characteristic function chi(xi) = Tr[rho exp(xi a^dagger -
 * xi^* a)] gives G(k, phi) = chi(i k e^{-i phi}).
 */

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qcf/types.hpp"

namespace qcf {

struct CharFnPoint {
    double k = 0.0;
    double phi = 0.0;
    cplx value{1.0, 0.0};
};

/// A sampled G(k, t, phi) with the metadata that produced it. Points are
/// kept sorted by (phi, k).
struct CharFnCurve {
    StateSpec state;
    std::optional<BathParams> bath;
    double gamma_t = 0.0;
    std::vector<CharFnPoint> points;

    void sort_points();
};

using WignerCf = std::function<cplx(cplx)>;

/// Classical limit exp(-k^2/2).
[[nodiscard]] double cf_ground(double k);

/// L_m(k^2) exp(-k^2/2); phase independent.
[[nodiscard]] double cf_fock(int m, double k);

/// exp(-k^2 v(phi) / 2), v(phi) = e^{-2r} cos^2 phi + e^{2r} sin^2 phi.
[[nodiscard]] double cf_squeezed_vacuum(double r, double k, double phi);

/// exp(-(nbar + 1/2) k^2).
[[nodiscard]] double cf_thermal(double nbar, double k);

/// G(k, phi) of the initial state (dispatch over the cf_* above).
[[nodiscard]] cplx cf_initial(const StateSpec &state, double k, double phi);

/// chi(xi) of the initial state as a callable.
[[nodiscard]] WignerCf initial_wigner_cf(const StateSpec &state);

/// Variance of x_phi for the Gaussian kinds. Throws DomainError for Fock.
[[nodiscard]] double gaussian_quadrature_variance(const StateSpec &state,
                                                  double phi);

/// Probability density of the measured quadrature x_phi at x.
///
/// Fock: (2 pi)^{-1/2} (2^m m!)^{-1} H_m(x/sqrt 2)^2 exp(-x^2/2).
/// Gaussian kinds: zero-mean normal with gaussian_quadrature_variance().
[[nodiscard]] double quadrature_pdf(const StateSpec &state, double phi,
                                    double x);

} // namespace qcf
