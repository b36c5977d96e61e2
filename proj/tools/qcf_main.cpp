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


// qcf: quadrature characteristic-function tables from the command line.
//
// Exit codes: 0 ok, 2 configuration, 3 numerical health, 4 I/O.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qcf/error.hpp"
#include "qcf_cli/commands.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitHealth = 3;
constexpr int kExitIo = 4;

struct RawFlags {
    std::string state;
    std::string k_grid;
    std::string t_grid;
    std::string format = "csv";
    double nbar = -1.0;
};

void add_common(CLI::App *sub, qcf::cli::RunConfig &cfg, RawFlags &raw) {
    sub->add_option("--state", raw.state,
                    "ground | fock:<m> | sv:<r> | thermal:<nbar>");
    sub->add_option("--nbar", raw.nbar, "bath mean occupation");
    sub->add_option("--gamma", cfg.gamma, "damping rate; rates are reported per gamma t")
        ->capture_default_str();
    sub->add_option("--k-grid", raw.k_grid, "min:max:step");
    sub->add_option("--t-grid", raw.t_grid, "min:max:step in gamma t");
    sub->add_option("--samples", cfg.samples, "homodyne samples")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--workers", cfg.workers, "sampling streams (changes the output)")
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", raw.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--sigmas", cfg.sigmas, "witness threshold in standard errors")
        ->capture_default_str();
    sub->add_option("--n-trunc", cfg.n_trunc, "oracle Fock-space truncation")
        ->capture_default_str();
    sub->add_option("--phi", cfg.phi, "quadrature phase")->capture_default_str();
    sub->add_option("--time", cfg.gamma_t, "evolution time gamma t for sample/witness")
        ->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    using qcf::cli::Command;
    qcf::cli::RunConfig cfg;
    RawFlags raw;

    CLI::App app{"Quadrature characteristic functions under thermal decoherence"};
    app.set_version_flag("--version", QCF_VERSION);
    app.require_subcommand(1);

    const std::map<std::string, std::pair<Command, std::string>> commands{
        {"fig1", {Command::Fig1, "G_9, G_10, G_11 and the ground-state bound (default k 0:8:0.01)"}},
        {"fig2", {Command::Fig2, "Fock decay: p_m, <n>/m, Q, g_m(k_max) (default fock:10, nbar 1, t 0:1.5:0.01)"}},
        {"fig3", {Command::Fig3, "squeezed vacuum decay: <n>/sinh^2 r, s, g_sv(k_max) (default sv:1.32, nbar 1, t 0:1:0.01)"}},
        {"witness", {Command::Witness, "first-order witness on sampled or loaded data (default fock:10, k 0.25:8:0.25)"}},
        {"sample", {Command::Sample, "sampled CF estimate against the closed form (default fock:10, k 0:8:0.25)"}},
        {"oracle-check", {Command::OracleCheck, "density-matrix CF against the closed form (default fock:10, nbar 0 and 1, t 0,0.1,0.5,1)"}},
        {"kmax", {Command::Kmax, "most sensitive k and decay rates (default fock:10, nbar 1 plus nbar 0)"}},
    };
    std::string data_path;
    std::string dataset_out;
    for (const auto &[name, entry] : commands) {
        auto *sub = app.add_subcommand(name, entry.second);
        add_common(sub, cfg, raw);
        if (entry.first == Command::Witness) {
            sub->add_option("--data", data_path, "dataset CSV to test instead of sampling");
        }
        if (entry.first == Command::Sample) {
            sub->add_option("--dataset-out", dataset_out, "also write the raw samples");
        }
        sub->callback([&cfg, cmd = entry.first] { cfg.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (!raw.state.empty()) {
            cfg.state = qcf::StateSpec::parse(raw.state);
        }
        if (raw.nbar != -1.0) {
            cfg.nbar = raw.nbar;
        }
        if (!raw.k_grid.empty()) {
            cfg.k_grid = qcf::cli::Grid::parse(raw.k_grid);
        }
        if (!raw.t_grid.empty()) {
            cfg.t_grid = qcf::cli::Grid::parse(raw.t_grid);
        }
        cfg.format = raw.format == "json" ? qcf::cli::Format::Json : qcf::cli::Format::Csv;
        cfg.data_path = data_path;
        cfg.dataset_out = dataset_out;
        const auto table = qcf::cli::run(cfg);
        qcf::cli::emit(cfg, table);
    } catch (const qcf::cli::IoError &e) {
        std::cerr << "qcf: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const qcf::NumericalHealthError &e) {
        std::cerr << "qcf: numerical health: " << e.what() << '\n';
        return kExitHealth;
    } catch (const qcf::cli::ConfigError &e) {
        std::cerr << "qcf: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qcf::DomainError &e) {
        std::cerr << "qcf: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
