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

#include "qcf/homodyne.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <thread>

#include "qcf/error.hpp"
#include "qcf/evolution.hpp"
#include "qcf/states.hpp"

namespace qcf::homodyne {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Inversion quadrature step in k; the implied period 2 pi / dk ~ 126 keeps
// aliased copies of the density far outside [-40, 40].
constexpr double kInversionStep = 0.05;
constexpr double kInversionNegligible = 1e-18;
constexpr int kInversionQuietNodes = 60;

// 53-bit uniform in [0, 1).
inline double to_unit(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::mt19937_64 worker_engine(std::uint64_t seed, unsigned worker) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(worker)));
}

cplx evolved_or_initial(const StateSpec &state, const std::optional<BathParams> &bath,
                        double gamma_t, double k, double phi) {
    if (bath) {
        return cf_evolved(state, *bath, gamma_t, k, phi);
    }
    return cf_initial(state, k, phi);
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double parse_number(const std::string &s, const char *what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw DomainError(std::string("dataset: invalid ") + what + " '" + s + "'");
    }
    return v;
}

} // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void QuadratureDataset::validate() const {
    if (samples.empty()) {
        throw DomainError("dataset has no samples");
    }
    if (!std::isfinite(phi)) {
        throw DomainError("dataset phase is not finite");
    }
    for (double x : samples) {
        if (!std::isfinite(x)) {
            throw DomainError("dataset contains a non-finite sample");
        }
    }
}

double CfEstimate::modulus_stderr() const {
    const double mod = std::abs(value);
    if (mod == 0.0) {
        return std::max(stderr_re, stderr_im);
    }
    return std::hypot(value.real() * stderr_re, value.imag() * stderr_im) / mod;
}

std::vector<double> fourier_inverted_density(const StateSpec &state,
                                             const std::optional<BathParams> &bath,
                                             double gamma_t, double phi,
                                             std::span<const double> x) {
    // p(x) = (1/2pi) int G(k) e^{-ikx} dk = (1/pi) int_0^inf Re[G(k) e^{-ikx}] dk
    std::vector<cplx> g{evolved_or_initial(state, bath, gamma_t, 0.0, phi)};
    int quiet = 0;
    for (int n = 1; quiet < kInversionQuietNodes; ++n) {
        const cplx v = evolved_or_initial(state, bath, gamma_t, n * kInversionStep, phi);
        g.push_back(v);
        quiet = std::abs(v) < kInversionNegligible ? quiet + 1 : 0;
        if (n > 100000) {
            throw NumericalHealthError("fourier inversion: characteristic "
                                       "function does not decay");
        }
    }
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        double acc = 0.5 * g[0].real();
        for (std::size_t n = 1; n < g.size(); ++n) {
            const double arg = static_cast<double>(n) * kInversionStep * x[j];
            acc += g[n].real() * std::cos(arg) + g[n].imag() * std::sin(arg);
        }
        double p = acc * kInversionStep / std::numbers::pi;
        if (p < 0.0) {
            if (p < -QuadratureSampler::kNegativityTol) {
                throw NumericalHealthError(
                    "fourier inversion: density " + format_double(p) +
                    " at x = " + format_double(x[j]) + " is negative beyond tolerance");
            }
            p = 0.0;
        }
        out[j] = p;
    }
    return out;
}

QuadratureSampler::QuadratureSampler(const StateSpec &state,
                                     std::optional<BathParams> bath,
                                     double gamma_t, double phi)
    : meta_{state, bath, gamma_t}, phi_(phi) {
    if (!std::isfinite(gamma_t) || gamma_t < 0.0) {
        throw DomainError("sampler: gamma_t must be finite and >= 0");
    }
    if (bath) {
        bath->validate();
    }
    if (state.is_gaussian()) {
        gaussian_ = true;
        const double v0 = gaussian_quadrature_variance(state, phi);
        if (bath) {
            const double e2 = std::exp(-2.0 * gamma_t);
            variance_ = (1.0 + 2.0 * bath->nbar) * (1.0 - e2) + v0 * e2;
        } else {
            variance_ = v0;
        }
        return;
    }
    gaussian_ = false;
    x_.resize(kGridPoints);
    const double dx = 2.0 * kGridHalfWidth / static_cast<double>(kGridPoints - 1);
    for (std::size_t j = 0; j < kGridPoints; ++j) {
        x_[j] = -kGridHalfWidth + static_cast<double>(j) * dx;
    }
    const auto density = fourier_inverted_density(state, bath, gamma_t, phi, x_);
    cdf_.assign(kGridPoints, 0.0);
    for (std::size_t j = 1; j < kGridPoints; ++j) {
        cdf_[j] = cdf_[j - 1] + 0.5 * (density[j - 1] + density[j]) * dx;
        if (cdf_[j] < cdf_[j - 1]) {
            throw NumericalHealthError("sampler: CDF table is not monotone");
        }
    }
    const double total = cdf_.back();
    if (std::abs(total - 1.0) > 1e-6) {
        throw NumericalHealthError("sampler: tabulated density integrates to " +
                                   format_double(total));
    }
    for (double &c : cdf_) {
        c /= total;
    }
}

double QuadratureSampler::pdf(double x) const {
    if (gaussian_) {
        return std::exp(-0.5 * x * x / variance_) / std::sqrt(kTwoPi * variance_);
    }
    if (x < x_.front() || x >= x_.back()) {
        return 0.0;
    }
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const auto j = static_cast<std::size_t>(it - x_.begin());
    return (cdf_[j] - cdf_[j - 1]) / (x_[j] - x_[j - 1]);
}

double QuadratureSampler::cdf(double x) const {
    if (gaussian_) {
        return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance_));
    }
    if (x <= x_.front()) {
        return 0.0;
    }
    if (x >= x_.back()) {
        return 1.0;
    }
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const auto j = static_cast<std::size_t>(it - x_.begin());
    const double w = (x - x_[j - 1]) / (x_[j] - x_[j - 1]);
    return cdf_[j - 1] + w * (cdf_[j] - cdf_[j - 1]);
}

double QuadratureSampler::transform(double u1, double u2, double &second) const {
    if (gaussian_) {
        // Box-Muller; 1 - u1 lies in (0, 1].
        const double rad = std::sqrt(-2.0 * std::log(1.0 - u1) * variance_);
        const double ang = kTwoPi * u2;
        second = rad * std::sin(ang);
        return rad * std::cos(ang);
    }
    auto invert = [&](double u) {
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        if (it == cdf_.end()) {
            return x_.back();
        }
        const auto j = static_cast<std::size_t>(it - cdf_.begin());
        const double span = cdf_[j] - cdf_[j - 1];
        const double w = span > 0.0 ? (u - cdf_[j - 1]) / span : 0.5;
        return x_[j - 1] + w * (x_[j] - x_[j - 1]);
    };
    second = invert(u2);
    return invert(u1);
}

std::vector<double> QuadratureSampler::draw(std::size_t n, std::uint64_t seed,
                                            unsigned workers) const {
    if (n == 0) {
        throw DomainError("sample count must be >= 1");
    }
    workers = std::max(1u, workers);
    std::vector<double> out(n);
    auto fill = [&](unsigned w, std::size_t begin, std::size_t end) {
        auto eng = worker_engine(seed, w);
        for (std::size_t i = begin; i < end; i += 2) {
            const double u1 = to_unit(eng());
            const double u2 = to_unit(eng());
            double second = 0.0;
            out[i] = transform(u1, u2, second);
            if (i + 1 < end) {
                out[i + 1] = second;
            }
        }
    };
    const std::size_t chunk = (n + workers - 1) / workers;
    if (workers == 1) {
        fill(0, 0, n);
        return out;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = std::min(n, w * chunk);
        const std::size_t e = std::min(n, b + chunk);
        if (b < e) {
            pool.emplace_back(fill, w, b, e);
        }
    }
    for (auto &t : pool) {
        t.join();
    }
    return out;
}

QuadratureDataset sample_quadratures(const StateSpec &state,
                                     std::optional<BathParams> bath, double gamma_t,
                                     double phi, std::size_t n, std::uint64_t seed,
                                     unsigned workers) {
    const QuadratureSampler sampler(state, bath, gamma_t, phi);
    QuadratureDataset ds;
    ds.phi = phi;
    ds.seed = seed;
    ds.workers = std::max(1u, workers);
    ds.samples = sampler.draw(n, seed, ds.workers);
    ds.meta = sampler.meta();
    return ds;
}

std::vector<CfEstimate> estimate_cf(const QuadratureDataset &data,
                                    std::span<const double> k_grid) {
    data.validate();
    const std::size_t nk = k_grid.size();
    std::vector<CfEstimate> out(nk);
    if (nk == 0) {
        return out;
    }
    std::vector<double> s_re(nk, 0.0), s_im(nk, 0.0), s_re2(nk, 0.0), s_im2(nk, 0.0);

    // A uniform grid lets each sample's phasors be generated by repeated
    // multiplication instead of one sincos per (sample, k).
    bool uniform = nk >= 3;
    const double dk = nk >= 2 ? k_grid[1] - k_grid[0] : 0.0;
    for (std::size_t i = 2; uniform && i < nk; ++i) {
        uniform = std::abs(k_grid[i] - (k_grid[0] + static_cast<double>(i) * dk)) <= 1e-12;
    }

    for (double x : data.samples) {
        if (uniform) {
            cplx z = k_grid[0] == 0.0 ? cplx(1.0) : std::polar(1.0, k_grid[0] * x);
            const cplx step = std::polar(1.0, dk * x);
            for (std::size_t i = 0; i < nk; ++i) {
                s_re[i] += z.real();
                s_im[i] += z.imag();
                s_re2[i] += z.real() * z.real();
                s_im2[i] += z.imag() * z.imag();
                z *= step;
            }
        } else {
            for (std::size_t i = 0; i < nk; ++i) {
                const double c = std::cos(k_grid[i] * x);
                const double s = std::sin(k_grid[i] * x);
                s_re[i] += c;
                s_im[i] += s;
                s_re2[i] += c * c;
                s_im2[i] += s * s;
            }
        }
    }
    const double n = static_cast<double>(data.samples.size());
    for (std::size_t i = 0; i < nk; ++i) {
        CfEstimate &e = out[i];
        e.k = k_grid[i];
        if (k_grid[i] == 0.0) {
            e.value = 1.0;
            continue;
        }
        const double mr = s_re[i] / n;
        const double mi = s_im[i] / n;
        e.value = cplx(mr, mi);
        e.stderr_re = std::sqrt(std::max(0.0, s_re2[i] / n - mr * mr) / n);
        e.stderr_im = std::sqrt(std::max(0.0, s_im2[i] / n - mi * mi) / n);
    }
    return out;
}

WitnessReport witness_first_order(std::span<const CfEstimate> estimates,
                                  double significance_sigmas) {
    if (estimates.empty()) {
        throw DomainError("witness: no estimates");
    }
    if (!(significance_sigmas >= 0.0)) {
        throw DomainError("witness: significance must be >= 0");
    }
    WitnessReport rep;
    rep.per_k.reserve(estimates.size());
    bool first = true;
    for (const auto &e : estimates) {
        WitnessVerdict v;
        v.k = e.k;
        v.modulus = std::abs(e.value);
        v.classical_bound = cf_ground(e.k);
        v.margin = v.modulus - v.classical_bound;
        v.threshold = significance_sigmas * e.modulus_stderr();
        v.flagged = v.margin > v.threshold;
        rep.nonclassical = rep.nonclassical || v.flagged;
        if (first || v.margin > rep.best_margin) {
            rep.best_margin = v.margin;
            rep.best_k = v.k;
            first = false;
        }
        rep.per_k.push_back(v);
    }
    return rep;
}

void write_dataset_csv(std::ostream &os, const QuadratureDataset &data) {
    data.validate();
    os << "# phi,seed,n\n";
    os << "# " << format_double(data.phi) << ',' << data.seed << ','
       << data.samples.size() << '\n';
    os << "# workers: " << data.workers << '\n';
    if (data.meta) {
        os << "# state: " << data.meta->state.to_string() << '\n';
        if (data.meta->bath) {
            os << "# gamma: " << format_double(data.meta->bath->gamma) << '\n';
            os << "# nbar: " << format_double(data.meta->bath->nbar) << '\n';
        }
        os << "# gamma_t: " << format_double(data.meta->gamma_t) << '\n';
    }
    for (double x : data.samples) {
        os << format_double(x) << '\n';
    }
}

QuadratureDataset read_dataset_csv(std::istream &is) {
    QuadratureDataset ds;
    bool have_header = false;
    bool expect_values = false;
    std::optional<std::size_t> declared_n;
    std::optional<StateSpec> state;
    std::optional<double> gamma, nbar;
    double gamma_t = 0.0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line[0] != '#') {
            if (!have_header) {
                throw DomainError("dataset: sample before the '# phi,seed,n' header");
            }
            ds.samples.push_back(parse_number(line, "sample"));
            continue;
        }
        const std::string body = trim(line.substr(1));
        if (body == "phi,seed,n") {
            expect_values = true;
            continue;
        }
        if (expect_values) {
            expect_values = false;
            have_header = true;
            const auto c1 = body.find(',');
            const auto c2 = body.find(',', c1 == std::string::npos ? c1 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos) {
                throw DomainError("dataset: malformed header values at line " +
                                  std::to_string(line_no));
            }
            ds.phi = parse_number(trim(body.substr(0, c1)), "phi");
            const std::string seed = trim(body.substr(c1 + 1, c2 - c1 - 1));
            if (!seed.empty()) {
                auto [p, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), ds.seed);
                if (ec != std::errc{} || p != seed.data() + seed.size()) {
                    throw DomainError("dataset: invalid seed '" + seed + "'");
                }
            }
            const std::string n = trim(body.substr(c2 + 1));
            if (!n.empty()) {
                declared_n = static_cast<std::size_t>(parse_number(n, "n"));
            }
            continue;
        }
        const auto colon = body.find(':');
        if (colon == std::string::npos) {
            continue; // free-form comment
        }
        const std::string key = trim(body.substr(0, colon));
        const std::string val = trim(body.substr(colon + 1));
        if (key == "workers") {
            ds.workers = static_cast<unsigned>(parse_number(val, "workers"));
        } else if (key == "state") {
            state = StateSpec::parse(val);
        } else if (key == "gamma") {
            gamma = parse_number(val, "gamma");
        } else if (key == "nbar") {
            nbar = parse_number(val, "nbar");
        } else if (key == "gamma_t") {
            gamma_t = parse_number(val, "gamma_t");
        }
    }
    if (!have_header) {
        throw DomainError("dataset: missing '# phi,seed,n' header");
    }
    if (declared_n && *declared_n != ds.samples.size()) {
        throw DomainError("dataset: header declares " + std::to_string(*declared_n) +
                          " samples, found " + std::to_string(ds.samples.size()));
    }
    if (state) {
        StateMeta meta{*state, std::nullopt, gamma_t};
        if (gamma || nbar) {
            meta.bath = BathParams{gamma.value_or(1.0), nbar.value_or(0.0)};
        }
        ds.meta = meta;
    }
    ds.validate();
    return ds;
}

} // namespace qcf::homodyne
