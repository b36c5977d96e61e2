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

#include "qcf/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qcf/error.hpp"
#include "qcf/specfun.hpp"

namespace qcf {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

double parse_double(std::string_view s, std::string_view what) {
    double v = 0.0;
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) {
        throw DomainError("invalid " + std::string(what) + " '" +
                          std::string(s) + "'");
    }
    return v;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace

StateSpec StateSpec::fock(int m) {
    if (m < 0) {
        throw DomainError("fock: m must be >= 0");
    }
    return StateSpec{state::Fock{m}};
}

StateSpec StateSpec::squeezed_vacuum(double r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw DomainError("squeezed vacuum: r must be finite and >= 0");
    }
    return StateSpec{state::SqueezedVacuum{r}};
}

StateSpec StateSpec::thermal(double nbar) {
    if (!std::isfinite(nbar) || nbar < 0.0) {
        throw DomainError("thermal: nbar must be finite and >= 0");
    }
    return StateSpec{state::Thermal{nbar}};
}

StateSpec StateSpec::parse(std::string_view text) {
    if (text == "ground") {
        return ground();
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw DomainError("unrecognised state '" + std::string(text) +
                          "' (expected ground, fock:<m>, sv:<r>, "
                          "thermal:<nbar>)");
    }
    const auto tag = text.substr(0, colon);
    const auto arg = text.substr(colon + 1);
    if (tag == "fock") {
        int m = 0;
        const auto *end = arg.data() + arg.size();
        auto [ptr, ec] = std::from_chars(arg.data(), end, m);
        if (ec != std::errc{} || ptr != end || arg.empty()) {
            throw DomainError("invalid Fock index '" + std::string(arg) + "'");
        }
        return fock(m);
    }
    if (tag == "sv") {
        return squeezed_vacuum(parse_double(arg, "squeeze parameter"));
    }
    if (tag == "thermal") {
        return thermal(parse_double(arg, "thermal occupation"));
    }
    throw DomainError("unrecognised state kind '" + std::string(tag) + "'");
}

std::string StateSpec::to_string() const {
    return std::visit(
        overloaded{
            [](const state::Ground &) { return std::string("ground"); },
            [](const state::Fock &s) { return "fock:" + std::to_string(s.m); },
            [](const state::SqueezedVacuum &s) { return "sv:" + shortest(s.r); },
            [](const state::Thermal &s) {
                return "thermal:" + shortest(s.nbar);
            },
        },
        v_);
}

void BathParams::validate() const {
    if (!std::isfinite(gamma) || gamma <= 0.0) {
        throw DomainError("bath: gamma must be finite and > 0");
    }
    if (!std::isfinite(nbar) || nbar < 0.0) {
        throw DomainError("bath: nbar must be finite and >= 0");
    }
}

void CharFnCurve::sort_points() {
    std::stable_sort(points.begin(), points.end(),
                     [](const CharFnPoint &a, const CharFnPoint &b) {
                         return a.phi != b.phi ? a.phi < b.phi : a.k < b.k;
                     });
}

double cf_ground(double k) { return std::exp(-0.5 * k * k); }

double cf_fock(int m, double k) {
    const double k2 = k * k;
    return specfun::laguerre(m, k2) * std::exp(-0.5 * k2);
}

double cf_squeezed_vacuum(double r, double k, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double v = std::exp(-2.0 * r) * c * c + std::exp(2.0 * r) * s * s;
    return std::exp(-0.5 * k * k * v);
}

double cf_thermal(double nbar, double k) {
    return std::exp(-(nbar + 0.5) * k * k);
}

cplx cf_initial(const StateSpec &state, double k, double phi) {
    return std::visit(
        overloaded{
            [&](const state::Ground &) { return cplx(cf_ground(k)); },
            [&](const state::Fock &s) { return cplx(cf_fock(s.m, k)); },
            [&](const state::SqueezedVacuum &s) {
                return cplx(cf_squeezed_vacuum(s.r, k, phi));
            },
            [&](const state::Thermal &s) { return cplx(cf_thermal(s.nbar, k)); },
        },
        state.kind());
}

WignerCf initial_wigner_cf(const StateSpec &state) {
    return std::visit(
        overloaded{
            [](const state::Ground &) -> WignerCf {
                return [](cplx xi) { return cplx(std::exp(-0.5 * std::norm(xi))); };
            },
            [](const state::Fock &s) -> WignerCf {
                return [m = s.m](cplx xi) {
                    const double a = std::norm(xi);
                    return cplx(specfun::laguerre(m, a) * std::exp(-0.5 * a));
                };
            },
            [](const state::SqueezedVacuum &s) -> WignerCf {
                // Im(xi) maps onto the squeezed phi = 0 quadrature.
                return [r = s.r](cplx xi) {
                    const double q = std::exp(-2.0 * r) * xi.imag() * xi.imag() +
                                     std::exp(2.0 * r) * xi.real() * xi.real();
                    return cplx(std::exp(-0.5 * q));
                };
            },
            [](const state::Thermal &s) -> WignerCf {
                return [nbar = s.nbar](cplx xi) {
                    return cplx(std::exp(-(nbar + 0.5) * std::norm(xi)));
                };
            },
        },
        state.kind());
}

double gaussian_quadrature_variance(const StateSpec &state, double phi) {
    return std::visit(
        overloaded{
            [](const state::Ground &) { return 1.0; },
            [](const state::Fock &) -> double {
                throw DomainError("Fock states are not Gaussian");
            },
            [&](const state::SqueezedVacuum &s) {
                const double c = std::cos(phi);
                const double sn = std::sin(phi);
                return std::exp(-2.0 * s.r) * c * c + std::exp(2.0 * s.r) * sn * sn;
            },
            [](const state::Thermal &s) { return 2.0 * s.nbar + 1.0; },
        },
        state.kind());
}

double quadrature_pdf(const StateSpec &state, double phi, double x) {
    if (const auto *f = state.get_if<state::Fock>()) {
        const int m = f->m;
        const double h = specfun::hermite(m, x / std::numbers::sqrt2);
        // 2^m m! in log space to stay finite for large m.
        const double log_norm = m * std::numbers::ln2 + std::lgamma(m + 1.0);
        return h * h * std::exp(-0.5 * x * x - log_norm) /
               std::sqrt(2.0 * std::numbers::pi);
    }
    const double v = gaussian_quadrature_variance(state, phi);
    return std::exp(-0.5 * x * x / v) / std::sqrt(2.0 * std::numbers::pi * v);
}

} // namespace qcf
