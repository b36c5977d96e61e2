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
 * Value types shared by every module: the initial-state descriptor and the
 * thermal-bath parameters.
 *
 * Quadrature convention used throughout the library:
 *
 *     x_phi = a exp(i phi) + a^dagger exp(-i phi)
 *
 * so the vacuum has quadrature variance 1 (not 1/2) and the ground-state
 * characteristic function is exp(-k^2 / 2).
 */

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace qcf {

using cplx = std::complex<double>;

namespace state {
struct Ground {
    bool operator==(const Ground &) const = default;
};
struct Fock {
    int m = 0;
    bool operator==(const Fock &) const = default;
};
struct SqueezedVacuum {
    double r = 0.0;
    bool operator==(const SqueezedVacuum &) const = default;
};
struct Thermal {
    double nbar = 0.0;
    bool operator==(const Thermal &) const = default;
};
} // namespace state

/// Tagged descriptor of the initial single-mode state. Only the fields of the
/// active alternative exist, so the "exactly one kind" invariant is structural.
class StateSpec {
  public:
    using Variant = std::variant<state::Ground, state::Fock,
                                 state::SqueezedVacuum, state::Thermal>;

    StateSpec() = default;

    static StateSpec ground() { return StateSpec{state::Ground{}}; }
    static StateSpec fock(int m);
    static StateSpec squeezed_vacuum(double r);
    static StateSpec thermal(double nbar);

    /// Parses "ground", "fock:<m>", "sv:<r>", "thermal:<nbar>".
    static StateSpec parse(std::string_view text);

    [[nodiscard]] const Variant &kind() const noexcept { return v_; }

    template <class T> [[nodiscard]] bool is() const noexcept {
        return std::holds_alternative<T>(v_);
    }
    template <class T> [[nodiscard]] const T *get_if() const noexcept {
        return std::get_if<T>(&v_);
    }

    /// True for Ground and SqueezedVacuum and Thermal.
    [[nodiscard]] bool is_gaussian() const noexcept {
        return !is<state::Fock>();
    }

    /// Inverse of parse(); round-trips exactly for the shortest decimal form.
    [[nodiscard]] std::string to_string() const;

    bool operator==(const StateSpec &) const = default;

  private:
    explicit StateSpec(Variant v) : v_(v) {}
    Variant v_ = state::Ground{};
};

/// Markovian thermal reservoir: damping rate gamma (1/time) and mean
/// occupation nbar.
struct BathParams {
    double gamma = 1.0;
    double nbar = 0.0;

    /// Throws DomainError unless gamma > 0 and nbar >= 0 (both finite).
    void validate() const;

    bool operator==(const BathParams &) const = default;
};

} // namespace qcf
