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
 * One function per qcf subcommand. Each returns a validated FigureTable whose
 * metadata echoes the full configuration.
 */

#pragma once

#include "qcf_cli/config.hpp"
#include "qcf_cli/table.hpp"

namespace qcf::cli {

/// G_9, G_10, G_11 and the ground-state bound over k.
[[nodiscard]] FigureTable run_fig1(const RunConfig &cfg);

/// p_m (oracle), normalized <n>, Mandel Q and g_m(k_max) over gamma t.
[[nodiscard]] FigureTable run_fig2(const RunConfig &cfg);

/// Squeezed vacuum: normalized <n> (oracle), normally ordered variance s and
/// g_sv(k_max) over gamma t.
[[nodiscard]] FigureTable run_fig3(const RunConfig &cfg);

/// Estimated CF and first-order witness verdict per k.
[[nodiscard]] FigureTable run_witness(const RunConfig &cfg);

/// Estimated CF against the closed form per k.
[[nodiscard]] FigureTable run_sample(const RunConfig &cfg);

/// Oracle density-matrix CF against the closed form.
[[nodiscard]] FigureTable run_oracle_check(const RunConfig &cfg);

/// Most sensitive k and the CF versus reference decay rates.
[[nodiscard]] FigureTable run_kmax(const RunConfig &cfg);

[[nodiscard]] FigureTable run(const RunConfig &cfg);

/// Writes to cfg.out_path or stdout in cfg.format. Throws IoError.
void emit(const RunConfig &cfg, const FigureTable &table);

} // namespace qcf::cli
