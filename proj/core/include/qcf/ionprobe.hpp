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
 * Trapped-ion readout of the quadrature characteristic function.
 *
 * Bichromatic red + blue sideband driving gives
 *
 *     H_int = hbar (Omega |1><2| + Omega^* |2><1|) x_phi ,
 *
 * which commutes with x_phi. In the x_phi eigenbasis the electronic state is
 * rotated by the angle |Omega| tau x, so the ground-state population after
 * the pulse encodes <cos(k x_phi)> (incoherent preparation sigma_11 = 1) or
 * <sin(k x_phi)> (coherent preparation sigma_11 = |sigma_12| = 1/2 with the
 * calibrated phase), where k = 2 |Omega| tau:
 *
 *     G = 2 [sigma_11^inc - 1/2] + 2 i [sigma_11^coh - 1/2].
 *
 * Detection is an ideal projective sigma_11 readout; an optional binomial
 * detection model is available for noise studies.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "qcf/oracle.hpp"
#include "qcf/types.hpp"

namespace qcf::ionprobe {

enum class PrepKind { Incoherent, Coherent };

struct ElectronicPrep {
    PrepKind kind = PrepKind::Incoherent;
    double sigma11 = 1.0;
    double sigma12_phase = 0.0; ///< arg(sigma_12), Coherent only

    static ElectronicPrep incoherent() { return {PrepKind::Incoherent, 1.0, 0.0}; }
    static ElectronicPrep coherent(double phase) {
        return {PrepKind::Coherent, 0.5, phase};
    }
    /// 2x2 electronic density matrix in the {|1>, |2>} basis.
    [[nodiscard]] Eigen::Matrix2cd density() const;
    void validate() const;
};

struct ProbeConfig {
    cplx omega{1.0, 0.0}; ///< effective Rabi frequency
    double tau = 0.0;     ///< interaction time
    std::size_t n_trunc = 256; ///< working Fock space for diagonalizing x_phi

    [[nodiscard]] double k() const { return 2.0 * std::abs(omega) * tau; }
    void validate() const;
};

/// Eigen-decomposition of the truncated x_phi, reusable across k values.
class QuadratureBasis {
  public:
    QuadratureBasis(std::size_t dim, double phi);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(eigenvalues_.size());
    }
    [[nodiscard]] double phi() const noexcept { return phi_; }
    [[nodiscard]] const Eigen::VectorXd &eigenvalues() const noexcept {
        return eigenvalues_;
    }

    /// <v_j| rho |v_j> for every eigenvector, rho embedded in dim().
    [[nodiscard]] Eigen::VectorXd weights(const oracle::DensityMatrix &motional) const;

  private:
    double phi_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd vectors_phi0_; ///< eigenvectors of x_0 (real)
};

/// Electronic ground-state population after the probe pulse.
[[nodiscard]] double evolve_probe(const oracle::DensityMatrix &motional,
                                  const ElectronicPrep &prep, const ProbeConfig &cfg,
                                  double phi);
[[nodiscard]] double evolve_probe(const Eigen::VectorXd &weights,
                                  const QuadratureBasis &basis,
                                  const ElectronicPrep &prep, const ProbeConfig &cfg);

/// sigma_12 phase that makes the coherent run reproduce Im G, found on a
/// calibration state with known nonzero Im G. Throws NumericalHealthError if
/// the calibrated readout misses Im G by more than 1e-8.
[[nodiscard]] double calibrate_coherent_phase(const ProbeConfig &cfg);

/// G(k = 2|Omega|tau, phi) from the two probe runs.
[[nodiscard]] cplx extract_cf(const oracle::DensityMatrix &motional,
                              const ProbeConfig &cfg, double phi);

/// Same, reusing a basis and an already calibrated phase.
[[nodiscard]] cplx extract_cf(const Eigen::VectorXd &weights,
                              const QuadratureBasis &basis, const ProbeConfig &cfg,
                              double coherent_phase);

/// Imperfect fluorescence detection: each of `trials` repetitions registers
/// the ground state with probability eta * sigma11. detect() returns the
/// efficiency-corrected frequency.
struct DetectionNoise {
    double efficiency = 1.0;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

[[nodiscard]] double detect(double sigma11, const DetectionNoise &noise);

} // namespace qcf::ionprobe
