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

#include "qcf/specfun.hpp"

#include <cmath>
#include <string>

#include "qcf/error.hpp"

namespace qcf::specfun {

namespace {
void check_args(const char *fn, int m, double x) {
    if (m < 0) {
        throw DomainError(std::string(fn) + ": negative degree " +
                          std::to_string(m));
    }
    if (!std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": non-finite argument");
    }
}
} // namespace

double laguerre(int m, double x) { return laguerre_assoc(m, 0, x); }

double laguerre_assoc(int m, int alpha, double x) {
    check_args("laguerre_assoc", m, x);
    if (alpha < 0) {
        throw DomainError("laguerre_assoc: negative association index");
    }
    const double a = alpha;
    double prev = 1.0;
    if (m == 0) {
        return prev;
    }
    double cur = 1.0 + a - x;
    for (int n = 1; n < m; ++n) {
        const double next =
            ((2.0 * n + 1.0 + a - x) * cur - (n + a) * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite(int m, double x) {
    check_args("hermite", m, x);
    double prev = 1.0;
    if (m == 0) {
        return prev;
    }
    double cur = 2.0 * x;
    for (int n = 1; n < m; ++n) {
        const double next = 2.0 * x * cur - 2.0 * n * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace qcf::specfun
