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


#include "qcf_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>

#include "qcf/error.hpp"
#include "qcf/evolution.hpp"
#include "qcf/homodyne.hpp"
#include "qcf/oracle.hpp"
#include "qcf/states.hpp"

#ifndef QCF_VERSION
#define QCF_VERSION "0.0.0"
#endif

namespace qcf::cli {

namespace {

constexpr double kHalfLifeScan = 1e-3;
constexpr double kHalfLifeMax = 50.0;

std::string state_text(const RunConfig &cfg) {
    return cfg.state ? cfg.state->to_string() : std::string("-");
}

// Full configuration echo. Call with the defaults already resolved.
void echo(FigureTable &t, const RunConfig &cfg, const char *nbar_unset = "-") {
    t.add_meta("command", std::string(command_name(cfg.command)));
    t.add_meta("version", QCF_VERSION);
    t.add_meta("state", state_text(cfg));
    t.add_meta("gamma", format_number(cfg.gamma));
    t.add_meta("nbar", cfg.nbar ? format_number(*cfg.nbar) : nbar_unset);
    t.add_meta("k_grid", cfg.k_grid ? cfg.k_grid->to_string() : "-");
    t.add_meta("t_grid", cfg.t_grid ? cfg.t_grid->to_string() : "-");
    t.add_meta("samples", std::to_string(cfg.samples));
    t.add_meta("seed", std::to_string(cfg.seed));
    t.add_meta("workers", std::to_string(cfg.workers));
    t.add_meta("sigmas", format_number(cfg.sigmas));
    t.add_meta("n_trunc", std::to_string(cfg.n_trunc));
    t.add_meta("phi", format_number(cfg.phi));
    t.add_meta("time", format_number(cfg.gamma_t));
}

int fock_level(const StateSpec &s, std::string_view cmd) {
    const auto *f = s.get_if<state::Fock>();
    if (f == nullptr) {
        throw ConfigError(std::string(cmd) + " needs a Fock state (fock:<m>)");
    }
    return f->m;
}

double squeeze(const StateSpec &s, std::string_view cmd) {
    const auto *sv = s.get_if<state::SqueezedVacuum>();
    if (sv == nullptr || !(sv->r > 0.0)) {
        throw ConfigError(std::string(cmd) + " needs a squeezed vacuum sv:<r> with r > 0");
    }
    return sv->r;
}

oracle::IntegratorConfig integrator(std::size_t n_trunc) {
    oracle::IntegratorConfig ic;
    ic.n_trunc = n_trunc;
    return ic;
}

// Populations at every time node, stepping from one node to the next.
std::vector<std::vector<double>> populations_along(std::vector<double> p,
                                                   const BathParams &bath,
                                                   const std::vector<double> &times) {
    const auto ic = integrator(p.size());
    std::vector<std::vector<double>> out;
    out.reserve(times.size());
    double now = 0.0;
    for (const double t : times) {
        p = oracle::evolve_populations(p, bath, t - now, ic);
        now = t;
        out.push_back(p);
    }
    return out;
}

// First t where f drops to 1/2, by scan then bisection. Monotone or not.
double half_life(const std::function<double(double)> &f) {
    double lo = 0.0;
    double f_lo = f(0.0);
    for (double hi = kHalfLifeScan; hi <= kHalfLifeMax; hi += kHalfLifeScan) {
        const double f_hi = f(hi);
        if (f_lo > 0.5 && f_hi <= 0.5) {
            for (int i = 0; i < 60; ++i) {
                const double mid = 0.5 * (lo + hi);
                (f(mid) > 0.5 ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        lo = hi;
        f_lo = f_hi;
    }
    throw NumericalHealthError("half-life not reached before gamma t = 50");
}

std::vector<double> sorted_times(const RunConfig &cfg) {
    if (cfg.t_grid) {
        return cfg.t_grid->nodes();
    }
    return {0.0, 0.1, 0.5, 1.0};
}

} // namespace

FigureTable run_fig1(const RunConfig &in) {
    RunConfig cfg = in;
    cfg.k_grid = cfg.k_grid_or({0.0, 8.0, 0.01});
    FigureTable t;
    t.columns = {"k", "G_9", "G_10", "G_11", "G_gr"};
    echo(t, cfg);
    for (const double k : cfg.k_grid->nodes()) {
        t.add_row({k, cf_fock(9, k), cf_fock(10, k), cf_fock(11, k), cf_ground(k)});
    }
    t.validate();
    return t;
}

FigureTable run_fig2(const RunConfig &in) {
    RunConfig cfg = in;
    cfg.state = cfg.state_or(StateSpec::fock(10));
    cfg.nbar = cfg.nbar.value_or(1.0);
    cfg.t_grid = cfg.t_grid_or({0.0, 1.5, 0.01});
    const int m = fock_level(*cfg.state, "fig2");
    if (m < 1) {
        throw ConfigError("fig2 needs m >= 1");
    }
    const BathParams bath = cfg.bath_or(1.0);
    const double kmax = find_kmax_fock(m, bath);
    const double g0 = cf_fock(m, kmax);

    FigureTable t;
    t.columns = {"gamma_t", "p_" + std::to_string(m), "n_norm", "Q",
                 "g_" + std::to_string(m)};
    echo(t, cfg);
    t.add_meta("k_max", format_number(kmax));

    std::vector<double> p0(cfg.n_trunc, 0.0);
    if (static_cast<std::size_t>(m) + oracle::DensityMatrix::kTailWidth >= cfg.n_trunc) {
        throw NumericalHealthError("fig2: n_trunc too small for fock:" +
                                       std::to_string(m),
                                   2 * cfg.n_trunc);
    }
    p0[static_cast<std::size_t>(m)] = 1.0;
    const auto times = cfg.t_grid->nodes();
    const auto pops = populations_along(std::move(p0), bath, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double gt = times[i];
        t.add_row({gt, pops[i][static_cast<std::size_t>(m)],
                   mean_excitation(m, bath, gt) / m, mandel_q(m, bath, gt),
                   cf_fock_evolved(m, bath, gt, kmax) / g0});
    }
    t.validate();
    return t;
}

FigureTable run_fig3(const RunConfig &in) {
    RunConfig cfg = in;
    cfg.state = cfg.state_or(StateSpec::squeezed_vacuum(1.32));
    cfg.nbar = cfg.nbar.value_or(1.0);
    cfg.t_grid = cfg.t_grid_or({0.0, 1.0, 0.01});
    const double r = squeeze(*cfg.state, "fig3");
    const BathParams bath = cfg.bath_or(1.0);
    const double kmax = kmax_squeezed(r);
    const double n0 = std::sinh(r) * std::sinh(r);
    const double v0 = std::exp(-2.0 * r);

    const auto rho0 = oracle::build_initial_density_auto(*cfg.state, cfg.n_trunc);
    FigureTable t;
    t.columns = {"gamma_t", "n_norm", "s", "g_sv"};
    echo(t, cfg);
    t.add_meta("k_max", format_number(kmax));
    t.add_meta("n_trunc_used", std::to_string(rho0.dim()));

    const auto times = cfg.t_grid->nodes();
    const auto pops = populations_along(oracle::occupations(rho0), bath, times);
    const double g0 = cf_squeezed_evolved_min(r, bath, 0.0, kmax);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double gt = times[i];
        const double v = variance_min_squeezed(r, bath, gt);
        t.add_row({gt, oracle::mean_number(pops[i]) / n0, (v - 1.0) / (v0 - 1.0),
                   cf_squeezed_evolved_min(r, bath, gt, kmax) / g0});
    }
    t.validate();
    return t;
}

FigureTable run_witness(const RunConfig &in) {
    RunConfig cfg = in;
    cfg.k_grid = cfg.k_grid_or({0.25, 8.0, 0.25});
    homodyne::QuadratureDataset data;
    if (!cfg.data_path.empty()) {
        std::ifstream is(cfg.data_path);
        if (!is) {
            throw IoError("cannot open " + cfg.data_path);
        }
        try {
            data = homodyne::read_dataset_csv(is);
        } catch (const DomainError &e) {
            throw IoError(cfg.data_path + ": " + e.what());
        }
        cfg.state.reset();
        cfg.nbar = cfg.nbar.value_or(0.0);
    } else {
        cfg.state = cfg.state_or(StateSpec::fock(10));
        cfg.nbar = cfg.nbar.value_or(0.0);
        data = homodyne::sample_quadratures(*cfg.state, cfg.bath_or(0.0), cfg.gamma_t,
                                            cfg.phi, cfg.samples, cfg.seed, cfg.workers);
    }
    const auto ks = cfg.k_grid->nodes();
    const auto est = homodyne::estimate_cf(data, ks);
    const auto report = homodyne::witness_first_order(est, cfg.sigmas);

    FigureTable t;
    t.columns = {"k", "re", "im", "modulus", "stderr", "classical_bound",
                 "margin", "threshold", "flagged"};
    echo(t, cfg);
    if (!cfg.data_path.empty()) {
        t.add_meta("data", cfg.data_path);
        t.add_meta("data_samples", std::to_string(data.samples.size()));
        t.add_meta("data_phi", format_number(data.phi));
    }
    t.add_meta("nonclassical", report.nonclassical ? "true" : "false");
    t.add_meta("best_k", format_number(report.best_k));
    t.add_meta("best_margin", format_number(report.best_margin));
    for (std::size_t i = 0; i < est.size(); ++i) {
        const auto &v = report.per_k[i];
        t.add_row({v.k, est[i].value.real(), est[i].value.imag(), v.modulus,
                   est[i].modulus_stderr(), v.classical_bound, v.margin, v.threshold,
                   v.flagged ? 1.0 : 0.0});
    }
    t.validate();
    return t;
}

FigureTable run_sample(const RunConfig &in) {
    RunConfig cfg = in;
    cfg.state = cfg.state_or(StateSpec::fock(10));
    cfg.nbar = cfg.nbar.value_or(0.0);
    cfg.k_grid = cfg.k_grid_or({0.0, 8.0, 0.25});
    const BathParams bath = cfg.bath_or(0.0);
    const auto data = homodyne::sample_quadratures(*cfg.state, bath, cfg.gamma_t, cfg.phi,
                                                   cfg.samples, cfg.seed, cfg.workers);
    if (!cfg.dataset_out.empty()) {
        std::ofstream os(cfg.dataset_out);
        if (!os) {
            throw IoError("cannot open " + cfg.dataset_out + " for writing");
        }
        homodyne::write_dataset_csv(os, data);
        if (!os) {
            throw IoError("write to " + cfg.dataset_out + " failed");
        }
    }
    const auto est = homodyne::estimate_cf(data, cfg.k_grid->nodes());

    FigureTable t;
    t.columns = {"k", "re", "im", "stderr_re", "stderr_im", "exact_re", "exact_im"};
    echo(t, cfg);
    for (const auto &e : est) {
        const cplx exact = cf_evolved(*cfg.state, bath, cfg.gamma_t, e.k, cfg.phi);
        t.add_row({e.k, e.value.real(), e.value.imag(), e.stderr_re, e.stderr_im,
                   exact.real(), exact.imag()});
    }
    t.validate();
    return t;
}

FigureTable run_oracle_check(const RunConfig &in) {
    RunConfig cfg = in;
    cfg.state = cfg.state_or(StateSpec::fock(10));
    cfg.k_grid = cfg.k_grid_or({0.0, 8.0, 0.1});
    const std::vector<double> nbars =
        cfg.nbar ? std::vector<double>{*cfg.nbar} : std::vector<double>{0.0, 1.0};
    const auto times = sorted_times(cfg);
    const auto ks = cfg.k_grid->nodes();
    const double phis[] = {0.0, 0.25 * std::numbers::pi, 0.5 * std::numbers::pi};

    const auto rho0 = oracle::build_initial_density_auto(*cfg.state, cfg.n_trunc);
    FigureTable t;
    t.columns = {"nbar", "gamma_t", "phi", "k", "oracle_re", "oracle_im",
                 "exact_re", "exact_im", "abs_diff"};
    echo(t, cfg, "0,1");
    t.add_meta("n_trunc_used", std::to_string(rho0.dim()));
    double worst = 0.0;
    for (const double nb : nbars) {
        const BathParams bath{cfg.gamma, nb};
        const auto ic = integrator(rho0.dim());
        oracle::DensityMatrix rho = rho0;
        double now = 0.0;
        for (const double gt : times) {
            rho = oracle::evolve(rho, bath, gt - now, ic);
            now = gt;
            for (const double phi : phis) {
                for (const double k : ks) {
                    const cplx a = oracle::cf_from_density(rho, k, phi);
                    const cplx b = cf_evolved(*cfg.state, bath, gt, k, phi);
                    const double d = std::abs(a - b);
                    worst = std::max(worst, d);
                    t.add_row({nb, gt, phi, k, a.real(), a.imag(), b.real(), b.imag(), d});
                }
            }
        }
    }
    t.add_meta("max_abs_diff", format_number(worst));
    t.validate();
    return t;
}

FigureTable run_kmax(const RunConfig &in) {
    RunConfig cfg = in;
    cfg.state = cfg.state_or(StateSpec::fock(10));
    cfg.nbar = cfg.nbar.value_or(1.0);
    std::vector<double> nbars{*cfg.nbar};
    if (*cfg.nbar != 0.0) {
        nbars.push_back(0.0);
    }
    FigureTable t;
    t.columns = {"nbar", "k_max", "rate_g", "rate_ref", "ratio",
                 "half_life_g", "half_life_ref", "half_life_ratio"};
    echo(t, cfg);

    if (const auto *f = cfg.state->get_if<state::Fock>()) {
        const int m = f->m;
        if (m < 1) {
            throw ConfigError("kmax needs fock:<m> with m >= 1");
        }
        t.add_meta("reference", "p_" + std::to_string(m));
        for (const double nb : nbars) {
            const BathParams bath{cfg.gamma, nb};
            const double k = find_kmax_fock(m, bath);
            const auto rates = decay_rates(m, bath, k);
            const double g0 = cf_fock(m, k);
            const double hl_g = half_life(
                [&](double gt) { return cf_fock_evolved(m, bath, gt, k) / g0; });
            std::vector<double> p0(cfg.n_trunc, 0.0);
            p0.at(static_cast<std::size_t>(m)) = 1.0;
            const auto ic = integrator(cfg.n_trunc);
            const double hl_p = half_life([&](double gt) {
                return oracle::evolve_populations(p0, bath, gt, ic)[static_cast<std::size_t>(m)];
            });
            t.add_row({nb, k, rates.cf_rate, rates.population_rate, rates.ratio(), hl_g,
                       hl_p, hl_p / hl_g});
        }
    } else {
        const double r = squeeze(*cfg.state, "kmax");
        const double v0 = std::exp(-2.0 * r);
        const double k = kmax_squeezed(r);
        t.add_meta("reference", "s");
        for (const double nb : nbars) {
            const BathParams bath{cfg.gamma, nb};
            // dv/d(gamma t) at 0 is 2 (1 + 2 nbar - v0).
            const double dv = 2.0 * (1.0 + 2.0 * nb - v0);
            const double rate_g = 0.5 * k * k * dv;
            const double rate_s = dv / (1.0 - v0);
            const double g0 = cf_squeezed_evolved_min(r, bath, 0.0, k);
            const double hl_g = half_life(
                [&](double gt) { return cf_squeezed_evolved_min(r, bath, gt, k) / g0; });
            const double hl_s = half_life([&](double gt) {
                return (variance_min_squeezed(r, bath, gt) - 1.0) / (v0 - 1.0);
            });
            t.add_row({nb, k, rate_g, rate_s, rate_g / rate_s, hl_g, hl_s, hl_s / hl_g});
        }
    }
    t.validate();
    return t;
}

FigureTable run(const RunConfig &cfg) {
    cfg.validate();
    switch (cfg.command) {
    case Command::Fig1: return run_fig1(cfg);
    case Command::Fig2: return run_fig2(cfg);
    case Command::Fig3: return run_fig3(cfg);
    case Command::Witness: return run_witness(cfg);
    case Command::Sample: return run_sample(cfg);
    case Command::OracleCheck: return run_oracle_check(cfg);
    case Command::Kmax: return run_kmax(cfg);
    }
    throw ConfigError("unknown command");
}

void emit(const RunConfig &cfg, const FigureTable &table) {
    auto write = [&](std::ostream &os) {
        if (cfg.format == Format::Json) {
            write_json(os, table);
        } else {
            write_csv(os, table);
        }
        os.flush();
        if (!os) {
            throw IoError("write to " + (cfg.out_path.empty() ? "stdout" : cfg.out_path) +
                          " failed");
        }
    };
    if (cfg.out_path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream os(cfg.out_path, std::ios::binary);
    if (!os) {
        throw IoError("cannot open " + cfg.out_path + " for writing");
    }
    write(os);
}

} // namespace qcf::cli
