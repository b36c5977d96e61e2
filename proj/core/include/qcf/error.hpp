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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcf {

/// Argument outside the mathematical domain of an operation (negative time,
/// non-finite input, undefined ratio, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A numerical health check failed: Fock-space truncation too small, or a
/// tabulated density went negative beyond tolerance.
class NumericalHealthError : public std::runtime_error {
  public:
    explicit NumericalHealthError(const std::string &what,
                                  std::size_t required_n_trunc = 0)
        : std::runtime_error(what), required_n_trunc_(required_n_trunc) {}

    /// Suggested truncation for a retry, 0 when not a truncation failure.
    [[nodiscard]] std::size_t required_n_trunc() const noexcept {
        return required_n_trunc_;
    }

  private:
    std::size_t required_n_trunc_;
};

} // namespace qcf
