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

#include "qcf/evolution.hpp"

#include <cmath>
#include <numbers>

#include "qcf/error.hpp"
#include "qcf/oracle.hpp"
#include "qcf/specfun.hpp"

namespace qcf {

namespace {

void check_time(double gamma_t, const char *fn) {
    if (!std::isfinite(gamma_t) || gamma_t < 0.0) {
        throw DomainError(std::string(fn) + ": gamma_t must be finite and >= 0");
    }
}

// |dG_m/dt(k, 0)|
double sensitivity(int m, const BathParams &bath, double k) {
    return std::abs(cf_fock_time_derivative_at_zero(m, bath, k));
}

} // namespace

cplx wigner_cf_evolved(const WignerCf &initial_cf, const BathParams &bath,
                       double gamma_t, cplx xi) {
    check_time(gamma_t, "wigner_cf_evolved");
    const double decay = std::exp(-gamma_t);
    const double washout = 1.0 - decay * decay;
    return std::exp(-(bath.nbar + 0.5) * std::norm(xi) * washout) *
           initial_cf(xi * decay);
}

cplx cf_evolved(const StateSpec &state, const BathParams &bath, double gamma_t,
                double k, double phi) {
    bath.validate();
    const cplx xi = cplx(0.0, k) * std::polar(1.0, -phi);
    return wigner_cf_evolved(initial_wigner_cf(state), bath, gamma_t, xi);
}

double cf_fock_evolved(int m, const BathParams &bath, double gamma_t, double k) {
    check_time(gamma_t, "cf_fock_evolved");
    const double e2 = std::exp(-2.0 * gamma_t);
    const double k2 = k * k;
    return std::exp(-bath.nbar * (1.0 - e2) * k2) * specfun::laguerre(m, k2 * e2) *
           std::exp(-0.5 * k2);
}

double cf_fock_time_derivative_at_zero(int m, const BathParams &bath, double k) {
    if (m < 0) {
        throw DomainError("cf_fock_time_derivative_at_zero: m must be >= 0");
    }
    const double k2 = k * k;
    const double lower = m == 0 ? 0.0 : specfun::laguerre_assoc(m - 1, 1, k2);
    return 2.0 * bath.gamma * (lower - bath.nbar * specfun::laguerre(m, k2)) * k2 *
           std::exp(-0.5 * k2);
}

double find_kmax_fock(int m, const BathParams &bath, KRange range) {
    bath.validate();
    if (!(range.lo >= 0.0 && range.hi <= 12.0 && range.lo < range.hi)) {
        throw DomainError("find_kmax_fock: range must be a non-empty interval "
                          "within [0, 12]");
    }
    constexpr double kStep = 1e-3;
    const auto n_nodes = static_cast<long>(std::floor((range.hi - range.lo) / kStep));
    double best_k = range.lo;
    double best_v = -1.0;
    for (long i = 0; i <= n_nodes; ++i) {
        const double k = range.lo + static_cast<double>(i) * kStep;
        const double v = sensitivity(m, bath, k);
        if (v > best_v) {
            best_v = v;
            best_k = k;
        }
    }
    // Golden-section refinement on the bracketing cell pair.
    double a = std::max(range.lo, best_k - kStep);
    double b = std::min(range.hi, best_k + kStep);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = sensitivity(m, bath, c);
    double fd = sensitivity(m, bath, d);
    for (int it = 0; it < 60 && (b - a) > 1e-13; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = sensitivity(m, bath, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = sensitivity(m, bath, d);
        }
    }
    const double refined = 0.5 * (a + b);
    return sensitivity(m, bath, refined) >= best_v ? refined : best_k;
}

double kmax_squeezed(double r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw DomainError("kmax_squeezed: r must be finite and >= 0");
    }
    return std::sqrt(2.0 * std::exp(2.0 * r));
}

double mandel_q(int m, const BathParams &bath, double gamma_t) {
    check_time(gamma_t, "mandel_q");
    if (m < 0) {
        throw DomainError("mandel_q: m must be >= 0");
    }
    const double nb = bath.nbar;
    const double e2 = std::exp(-2.0 * gamma_t);
    const double e4 = e2 * e2;
    const double den = m * e2 + nb * (1.0 - e2);
    if (!(den > 0.0)) {
        throw DomainError("mandel_q: <n> vanishes (m = 0 and no thermal "
                          "population yet); Q is undefined");
    }
    const double num =
        (nb * nb - 2.0 * nb * m - m) * e4 + 2.0 * nb * (m - nb) * e2 + nb * nb;
    return num / den;
}

double mean_excitation(double n0, const BathParams &bath, double gamma_t) {
    check_time(gamma_t, "mean_excitation");
    const double e2 = std::exp(-2.0 * gamma_t);
    return n0 * e2 + bath.nbar * (1.0 - e2);
}

double variance_min_squeezed(double r, const BathParams &bath, double gamma_t) {
    check_time(gamma_t, "variance_min_squeezed");
    if (!std::isfinite(r) || r < 0.0) {
        throw DomainError("variance_min_squeezed: r must be finite and >= 0");
    }
    const double e2 = std::exp(-2.0 * gamma_t);
    return (1.0 + 2.0 * bath.nbar) * (1.0 - e2) + std::exp(-2.0 * r) * e2;
}

double cf_squeezed_evolved_min(double r, const BathParams &bath, double gamma_t,
                               double k) {
    return std::exp(-0.5 * k * k * variance_min_squeezed(r, bath, gamma_t));
}

DecayRates decay_rates(int m, const BathParams &bath, double k) {
    bath.validate();
    if (m < 1) {
        throw DomainError("decay_rates: m must be >= 1");
    }
    const double g0 = cf_fock(m, k);
    if (g0 == 0.0) {
        throw DomainError("decay_rates: G_m(k, 0) = 0, normalized CF undefined");
    }
    DecayRates out;
    out.k = k;
    out.cf_rate = -cf_fock_time_derivative_at_zero(m, bath, k) / g0 / bath.gamma;
    out.population_rate = -oracle::population_rate_at_zero(m, bath) / bath.gamma;
    return out;
}

double decay_rate_ratio(int m, const BathParams &bath) {
    return decay_rates(m, bath, find_kmax_fock(m, bath)).ratio();
}

double cf_as_fock_mixture(std::span<const std::pair<int, double>> occupations,
                          double k) {
    double total = 0.0;
    double acc = 0.0;
    for (const auto &[n, p] : occupations) {
        if (!(p >= 0.0)) {
            throw DomainError("cf_as_fock_mixture: negative weight for n = " +
                              std::to_string(n));
        }
        total += p;
        acc += p * cf_fock(n, k);
    }
    if (total > 1.0 + 1e-9) {
        throw DomainError("cf_as_fock_mixture: weights sum above 1");
    }
    return acc;
}

} // namespace qcf
