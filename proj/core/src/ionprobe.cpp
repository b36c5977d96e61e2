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

#include "qcf/ionprobe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qcf/error.hpp"
#include "qcf/homodyne.hpp"

namespace qcf::ionprobe {

namespace {

using Index = Eigen::Index;

constexpr double kCalibrationTol = 1e-8;

} // namespace

Eigen::Matrix2cd ElectronicPrep::density() const {
    validate();
    Eigen::Matrix2cd s;
    if (kind == PrepKind::Incoherent) {
        s << 1.0, 0.0, 0.0, 0.0;
        return s;
    }
    const cplx s12 = std::polar(0.5, sigma12_phase);
    s << 0.5, s12, std::conj(s12), 0.5;
    return s;
}

void ElectronicPrep::validate() const {
    if (kind == PrepKind::Incoherent && sigma11 != 1.0) {
        throw DomainError("incoherent preparation requires sigma11 = 1");
    }
    if (kind == PrepKind::Coherent && sigma11 != 0.5) {
        throw DomainError("coherent preparation requires sigma11 = 1/2");
    }
    if (!std::isfinite(sigma12_phase)) {
        throw DomainError("sigma12 phase must be finite");
    }
}

void ProbeConfig::validate() const {
    if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag())) {
        throw DomainError("probe: Rabi frequency must be finite");
    }
    if (!std::isfinite(tau) || tau < 0.0) {
        throw DomainError("probe: tau must be finite and >= 0");
    }
    if (n_trunc < 8) {
        throw DomainError("probe: n_trunc must be >= 8");
    }
}

QuadratureBasis::QuadratureBasis(std::size_t dim, double phi) : phi_(phi) {
    // x_phi = e^{-i phi n} x_0 e^{i phi n}; x_0 = a + a^+ is real tridiagonal.
    const Index d = static_cast<Index>(dim);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
    Eigen::VectorXd sub(d - 1);
    for (Index n = 0; n + 1 < d; ++n) {
        sub(n) = std::sqrt(static_cast<double>(n + 1));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) {
        throw NumericalHealthError("quadrature diagonalization failed");
    }
    eigenvalues_ = es.eigenvalues();
    vectors_phi0_ = es.eigenvectors();
}

Eigen::VectorXd QuadratureBasis::weights(const oracle::DensityMatrix &motional) const {
    const Index d = static_cast<Index>(motional.dim());
    if (motional.dim() + oracle::DensityMatrix::kTailWidth > dim()) {
        throw NumericalHealthError(
            "probe: motional state of dimension " + std::to_string(motional.dim()) +
                " does not fit the probe truncation " + std::to_string(dim()),
            2 * dim());
    }
    // rho' = P rho P^+, P = diag(e^{i phi n}); then w_j = v_j^T rho' v_j.
    oracle::Matrix rotated = motional.matrix();
    for (Index m = 0; m < d; ++m) {
        for (Index n = 0; n < d; ++n) {
            rotated(m, n) *= std::polar(1.0, phi_ * static_cast<double>(m - n));
        }
    }
    const Eigen::MatrixXd vd = vectors_phi0_.topRows(d);
    const oracle::Matrix rv = rotated * vd.cast<cplx>();
    Eigen::VectorXd w(vd.cols());
    for (Index j = 0; j < vd.cols(); ++j) {
        w(j) = (vd.col(j).cast<cplx>().cwiseProduct(rv.col(j))).sum().real();
    }
    return w;
}

double evolve_probe(const Eigen::VectorXd &weights, const QuadratureBasis &basis,
                    const ElectronicPrep &prep, const ProbeConfig &cfg) {
    cfg.validate();
    const Eigen::Matrix2cd sigma = prep.density();
    const double kappa = std::abs(cfg.omega) * cfg.tau;
    const cplx e_theta = cfg.omega == cplx(0.0) ? cplx(1.0)
                                                 : cfg.omega / std::abs(cfg.omega);
    double pop = 0.0;
    for (Index j = 0; j < weights.size(); ++j) {
        const double angle = kappa * basis.eigenvalues()(j);
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        // U = exp(-i angle (e^{i theta}|1><2| + e^{-i theta}|2><1|))
        Eigen::Matrix2cd u;
        u << c, cplx(0.0, -s) * e_theta, cplx(0.0, -s) * std::conj(e_theta), c;
        const Eigen::Matrix2cd out = u * sigma * u.adjoint();
        pop += weights(j) * out(0, 0).real();
    }
    return std::clamp(pop, 0.0, 1.0);
}

double evolve_probe(const oracle::DensityMatrix &motional, const ElectronicPrep &prep,
                    const ProbeConfig &cfg, double phi) {
    cfg.validate();
    const QuadratureBasis basis(cfg.n_trunc, phi);
    return evolve_probe(basis.weights(motional), basis, prep, cfg);
}

double calibrate_coherent_phase(const ProbeConfig &cfg) {
    cfg.validate();
    const double amp = std::abs(cfg.omega);
    if (amp == 0.0) {
        return -0.5 * std::numbers::pi;
    }
    // (|0> + |1>)/sqrt 2 has Im G(1, 0) = e^{-1/2}.
    oracle::Matrix rho = oracle::Matrix::Zero(8, 8);
    rho.topLeftCorner(2, 2).setConstant(0.5);
    const oracle::DensityMatrix cal(rho);
    ProbeConfig cal_cfg = cfg;
    cal_cfg.tau = 0.5 / amp; // k = 1
    const double target =
        oracle::cf_from_density(cal, cal_cfg.k(), 0.0, oracle::Truncation::Exact).imag();

    const QuadratureBasis basis(cal_cfg.n_trunc, 0.0);
    const Eigen::VectorXd w = basis.weights(cal);
    auto readout = [&](double phase) {
        return 2.0 * evolve_probe(w, basis, ElectronicPrep::coherent(phase), cal_cfg) - 1.0;
    };
    // readout(a) = -sin(a - theta) Im G
    const double f0 = readout(0.0);
    const double f1 = readout(0.5 * std::numbers::pi);
    const double theta = std::atan2(f0 / target, -f1 / target);
    double phase = std::remainder(theta - 0.5 * std::numbers::pi, 2.0 * std::numbers::pi);
    if (phase < 0.0) {
        phase += 2.0 * std::numbers::pi;
    }
    const double residual = std::abs(readout(phase) - target);
    if (residual > kCalibrationTol) {
        throw NumericalHealthError("coherent-phase calibration residual " +
                                   std::to_string(residual) + " exceeds 1e-8");
    }
    return phase;
}

cplx extract_cf(const Eigen::VectorXd &weights, const QuadratureBasis &basis,
                const ProbeConfig &cfg, double coherent_phase) {
    const double inc = evolve_probe(weights, basis, ElectronicPrep::incoherent(), cfg);
    const double coh =
        evolve_probe(weights, basis, ElectronicPrep::coherent(coherent_phase), cfg);
    return {2.0 * (inc - 0.5), 2.0 * (coh - 0.5)};
}

cplx extract_cf(const oracle::DensityMatrix &motional, const ProbeConfig &cfg,
                double phi) {
    cfg.validate();
    const double phase = calibrate_coherent_phase(cfg);
    const QuadratureBasis basis(cfg.n_trunc, phi);
    return extract_cf(basis.weights(motional), basis, cfg, phase);
}

double detect(double sigma11, const DetectionNoise &noise) {
    if (!(noise.efficiency > 0.0 && noise.efficiency <= 1.0) || noise.trials == 0) {
        throw DomainError("detect: efficiency must lie in (0, 1] and trials >= 1");
    }
    std::mt19937_64 eng(homodyne::splitmix64(noise.seed));
    const double p = noise.efficiency * std::clamp(sigma11, 0.0, 1.0);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < noise.trials; ++i) {
        hits += static_cast<double>(eng() >> 11) * 0x1.0p-53 < p ? 1 : 0;
    }
    // Efficiency-corrected estimate of sigma11.
    return static_cast<double>(hits) /
           (static_cast<double>(noise.trials) * noise.efficiency);
}

} // namespace qcf::ionprobe
