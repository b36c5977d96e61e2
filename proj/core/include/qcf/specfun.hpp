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
 * Orthogonal polynomials evaluated by upward three-term recurrence in double
 * precision. Stable and overflow-free for the working range of this library
 * (degree up to a few hundred, argument up to ~100); no asymptotic branches.
 *
 * All functions are pure and thread-safe. Non-finite x throws DomainError.
 */

#pragma once

namespace qcf::specfun {

/// Laguerre polynomial L_m(x).
[[nodiscard]] double laguerre(int m, double x);

/// Associated (generalized) Laguerre polynomial L_m^{(alpha)}(x), integer
/// alpha >= 0.
[[nodiscard]] double laguerre_assoc(int m, int alpha, double x);

/// Physicists' Hermite polynomial H_m(x).
[[nodiscard]] double hermite(int m, double x);

} // namespace qcf::specfun
