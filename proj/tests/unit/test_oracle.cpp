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


#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qcf/error.hpp"
#include "qcf/evolution.hpp"
#include "qcf/oracle.hpp"
#include "qcf/states.hpp"

using namespace qcf;
using oracle::DensityMatrix;
using oracle::Matrix;

namespace {

const BathParams kWarm{1.0, 1.0};
const BathParams kCold{1.0, 0.0};

DensityMatrix thermal_rho(std::size_t dim, double nbar) {
    Matrix rho = Matrix::Zero(dim, dim);
    double sum = 0.0;
    for (std::size_t n = 0; n < dim; ++n) {
        const double p = std::pow(nbar, n) / std::pow(nbar + 1.0, n + 1.0);
        rho(n, n) = p;
        sum += p;
    }
    rho /= sum;
    return DensityMatrix(rho);
}

} // namespace

TEST(DensityMatrix, Validation) {
    Matrix m = Matrix::Zero(4, 4);
    EXPECT_THROW(DensityMatrix{m}, DomainError); // trace 0
    m(0, 0) = 1.0;
    EXPECT_NO_THROW(DensityMatrix{m});
    Matrix nh = m;
    nh(0, 1) = 0.1;
    EXPECT_THROW(DensityMatrix{nh}, DomainError);
    Matrix neg = m;
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_THROW(DensityMatrix{neg}, DomainError);
    EXPECT_THROW(DensityMatrix{Matrix::Zero(2, 3)}, DomainError);
}

TEST(DensityMatrix, TailHealth) {
    EXPECT_TRUE(DensityMatrix::fock(64, 10).truncation_healthy());
    const auto top = DensityMatrix::fock(16, 13);
    EXPECT_FALSE(top.truncation_healthy());
    try {
        top.require_truncation_health("test");
        FAIL() << "expected a health error";
    } catch (const NumericalHealthError &e) {
        EXPECT_EQ(e.required_n_trunc(), 32u);
    }
}

TEST(IntegratorConfig, Validation) {
    oracle::IntegratorConfig c;
    EXPECT_NO_THROW(c.validate());
    c.step = 0.02;
    EXPECT_THROW(c.validate(), DomainError);
    c.step = 0.01;
    c.tol = 1e-6;
    EXPECT_THROW(c.validate(), DomainError);
}

TEST(LindbladRhs, FixedPoints) {
    const auto th = thermal_rho(80, 1.0);
    const Matrix d = oracle::lindblad_rhs(th, kWarm);
    // Only the truncation edge may deviate.
    EXPECT_LT(d.topLeftCorner(60, 60).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(oracle::lindblad_rhs(DensityMatrix::fock(16, 0), kCold).cwiseAbs().maxCoeff(),
              0.0);
}

TEST(LindbladRhs, TenQuantaRates) {
    const Matrix d = oracle::lindblad_rhs(DensityMatrix::fock(32, 10), kWarm);
    EXPECT_DOUBLE_EQ(d(10, 10).real(), -2.0 * (2.0 * 10 + 1.0 * 11));
    EXPECT_DOUBLE_EQ(d(9, 9).real(), 2.0 * 2.0 * 10);
    EXPECT_DOUBLE_EQ(d(11, 11).real(), 2.0 * 1.0 * 11);
    Matrix rest = d;
    rest(9, 9) = rest(10, 10) = rest(11, 11) = 0.0;
    EXPECT_EQ(rest.cwiseAbs().maxCoeff(), 0.0);
}

TEST(LindbladRhs, TracelessOnRandomStates) {
    std::mt19937_64 eng(5);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 5; ++trial) {
        Matrix a(12, 12);
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            a.data()[i] = cplx(nd(eng), nd(eng));
        }
        Matrix rho = a * a.adjoint();
        rho /= rho.trace();
        EXPECT_LT(std::abs(oracle::lindblad_rhs(rho, kWarm).trace()), 1e-12);
    }
}

TEST(PopulationRhs, MatchesFullRhsDiagonal) {
    std::vector<double> p(20, 0.0);
    p[3] = 0.25;
    p[7] = 0.75;
    Matrix rho = Matrix::Zero(20, 20);
    rho(3, 3) = 0.25;
    rho(7, 7) = 0.75;
    const auto dp = oracle::population_rhs(p, kWarm);
    const Matrix d = oracle::lindblad_rhs(rho, kWarm);
    for (int n = 0; n < 20; ++n) {
        EXPECT_NEAR(dp[n], d(n, n).real(), 1e-14);
    }
}

TEST(Evolve, ZeroTimeIsIdentity) {
    const auto rho = DensityMatrix::fock(32, 4);
    EXPECT_EQ(oracle::evolve(rho, kWarm, 0.0).matrix(), rho.matrix());
}

TEST(Evolve, TenQuantaMeanNumber) {
    const auto rho = oracle::evolve(DensityMatrix::fock(64, 10), kWarm, 0.5);
    EXPECT_NEAR(oracle::mean_number(rho), 10 * std::exp(-1.0) + (1 - std::exp(-1.0)), 1e-8);
    // Stays diagonal.
    Matrix off = rho.matrix();
    off.diagonal().setZero();
    EXPECT_LT(off.cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Evolve, InvariantsAlongTrajectory) {
    auto rho = oracle::build_initial_density(StateSpec::fock(6), 48);
    for (int i = 0; i < 10; ++i) {
        rho = oracle::evolve(rho, kWarm, 0.05);
        const Matrix &m = rho.matrix();
        EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(m.trace().real(), 1.0, 1e-9);
        EXPECT_GE(m.diagonal().real().minCoeff(), -1e-12);
    }
}

TEST(Evolve, PopulationFastPathAgreesWithFullMatrix) {
    std::vector<double> p0(48, 0.0);
    p0[10] = 1.0;
    const auto p = oracle::evolve_populations(p0, kWarm, 0.4);
    const auto rho = oracle::evolve(DensityMatrix::fock(48, 10), kWarm, 0.4);
    for (std::size_t n = 0; n < p.size(); ++n) {
        EXPECT_NEAR(p[n], rho(n, n).real(), 1e-10);
    }
}

TEST(Evolve, EarlyTimeSupport) {
    std::vector<double> p0(64, 0.0);
    p0[10] = 1.0;
    const double eps = 1e-7;
    const auto p = oracle::evolve_populations(p0, kWarm, eps);
    for (std::size_t n = 0; n < p.size(); ++n) {
        if (n < 9 || n > 11) {
            EXPECT_LT(std::abs(p[n]), 1e-10) << "n=" << n;
        }
    }
    // First order in eps; the next term is O(eps) relative.
    EXPECT_NEAR(p[9] / (2 * 2.0 * 10 * eps), 1.0, 1e-4);
    EXPECT_NEAR(p[11] / (2 * 1.0 * 11 * eps), 1.0, 1e-4);
}

TEST(Evolve, FourthOrderConvergence) {
    // Single fixed-step runs against a quarter-step reference.
    const auto rho0 = oracle::build_initial_density(StateSpec::squeezed_vacuum(0.4), 32);
    auto run = [&](double h) {
        Matrix y = rho0.matrix();
        const int n = static_cast<int>(std::lround(0.2 / h));
        for (int i = 0; i < n; ++i) {
            const Matrix k1 = oracle::lindblad_rhs(y, kWarm);
            const Matrix k2 = oracle::lindblad_rhs(Matrix(y + 0.5 * h * k1), kWarm);
            const Matrix k3 = oracle::lindblad_rhs(Matrix(y + 0.5 * h * k2), kWarm);
            const Matrix k4 = oracle::lindblad_rhs(Matrix(y + h * k3), kWarm);
            y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        }
        return y;
    };
    // Fastest generator modes have rate ~ 200 here; keep h lambda well inside
    // the asymptotic regime.
    const double h = 0.002;
    const Matrix ref = run(h / 4);
    const double e1 = (run(h) - ref).cwiseAbs().maxCoeff();
    const double e2 = (run(h / 2) - ref).cwiseAbs().maxCoeff();
    EXPECT_GT(e1 / e2, 12.0);
    EXPECT_LT(e1 / e2, 20.0);
}

TEST(Evolve, ReportsTruncationFailure) {
    // Thermalizing at nbar = 4 leaves too much weight in a 16-level space.
    try {
        (void)oracle::evolve(DensityMatrix::fock(16, 2), {1.0, 4.0}, 3.0,
                             oracle::IntegratorConfig{16});
        FAIL() << "expected a health error";
    } catch (const NumericalHealthError &e) {
        EXPECT_EQ(e.required_n_trunc(), 32u);
    }
}

TEST(Evolve, SqueezedVarianceMatchesClosedForm) {
    const auto rho0 = oracle::build_initial_density_auto(StateSpec::squeezed_vacuum(1.32));
    oracle::IntegratorConfig ic;
    ic.n_trunc = rho0.dim();
    const auto rho = oracle::evolve(rho0, kWarm, 0.2, ic);
    EXPECT_NEAR(oracle::quadrature_variance(rho, 0.0), variance_min_squeezed(1.32, kWarm, 0.2),
                1e-8);
}

TEST(CfFromDensity, StaticFockStates) {
    for (int m = 0; m <= 12; ++m) {
        const auto rho = DensityMatrix::fock(64, m);
        for (double k = 0.0; k <= 8.0; k += 0.1) {
            EXPECT_NEAR(std::abs(oracle::cf_from_density(rho, k, 0.7) - cf_fock(m, k)), 0.0,
                        1e-10);
        }
    }
}

TEST(CfFromDensity, TraceAtOriginAndThermal) {
    const auto th = thermal_rho(128, 1.0);
    for (double k = 0.0; k <= 4.0; k += 0.25) {
        EXPECT_NEAR(std::abs(oracle::cf_from_density(th, k, 0.3) - std::exp(-1.5 * k * k)), 0.0,
                    1e-10);
    }
    const auto rho = oracle::build_initial_density(StateSpec::squeezed_vacuum(0.3), 64);
    EXPECT_NEAR(std::abs(oracle::cf_from_density(rho, 0.0, 1.0) - 1.0), 0.0, 1e-14);
}

TEST(CfFromDensity, DisplacementIsUnitary) {
    const Matrix d = oracle::displacement_matrix(40, cplx(0.3, -0.2));
    // Truncation spoils unitarity only in the top rows and columns.
    const Matrix u = d.adjoint() * d;
    EXPECT_LT((u - Matrix::Identity(40, 40)).topLeftCorner(20, 20).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(BuildInitialDensity, Kinds) {
    const auto f = oracle::build_initial_density(StateSpec::fock(10), 64);
    EXPECT_EQ(f(10, 10), cplx(1.0));
    EXPECT_EQ(oracle::mean_number(f), 10.0);

    const auto th = oracle::build_initial_density(StateSpec::thermal(1.0), 64);
    for (std::size_t n = 0; n < 20; ++n) {
        EXPECT_NEAR(th(n, n).real(), std::pow(0.5, n + 1.0), 1e-12);
    }

    const auto sv = oracle::build_initial_density_auto(StateSpec::squeezed_vacuum(1.32));
    EXPECT_NEAR(oracle::mean_number(sv), std::sinh(1.32) * std::sinh(1.32), 1e-6);
    EXPECT_NEAR(oracle::quadrature_variance(sv, 0.0), std::exp(-2.64), 1e-8);
    EXPECT_NEAR(oracle::quadrature_variance(sv, std::numbers::pi / 2), std::exp(2.64), 1e-6);
    for (std::size_t n = 1; n < sv.dim(); n += 2) {
        EXPECT_EQ(sv(n, n).real(), 0.0);
    }
}

TEST(BuildInitialDensity, SqueezedMatchesFockExpansion) {
    // <2n|S|0> = (-tanh r)^n sqrt((2n)!) / (2^n n! sqrt(cosh r))
    const double r = 0.9;
    const auto sv = oracle::build_initial_density(StateSpec::squeezed_vacuum(r), 128);
    const double t = std::tanh(r);
    for (int n = 0; n < 20; ++n) {
        const double log_amp = n * std::log(t) + 0.5 * std::lgamma(2 * n + 1.0) -
                               n * std::log(2.0) - std::lgamma(n + 1.0) -
                               0.5 * std::log(std::cosh(r));
        EXPECT_NEAR(sv(2 * n, 2 * n).real(), std::exp(2 * log_amp), 1e-12);
    }
    // Squeezed along x_0: the n = 0, 2 coherence is negative.
    EXPECT_LT(sv(0, 2).real(), 0.0);
}

TEST(BuildInitialDensity, TruncationErrors) {
    EXPECT_THROW((void)oracle::build_initial_density(StateSpec::squeezed_vacuum(1.32), 64),
                 NumericalHealthError);
    EXPECT_THROW((void)oracle::build_initial_density(StateSpec::fock(62), 64),
                 NumericalHealthError);
    EXPECT_EQ(oracle::build_initial_density_auto(StateSpec::squeezed_vacuum(1.32)).dim(), 256u);
}

TEST(OracleEquivalence, FockAndSqueezedAgainstClosedForm) {
    const double phis[] = {0.0, std::numbers::pi / 4, std::numbers::pi / 2};
    for (const auto &s : {StateSpec::fock(10), StateSpec::thermal(0.5), StateSpec::ground()}) {
        for (const auto &bath : {kCold, kWarm}) {
            auto rho = oracle::build_initial_density(s, 64);
            double now = 0.0;
            double worst = 0.0;
            for (double gt : {0.0, 0.1, 0.5, 1.0}) {
                rho = oracle::evolve(rho, bath, gt - now);
                now = gt;
                for (double phi : phis) {
                    for (double k = 0.0; k <= 8.0 + 1e-9; k += 0.1) {
                        worst = std::max(worst, std::abs(oracle::cf_from_density(rho, k, phi) -
                                                         cf_evolved(s, bath, gt, k, phi)));
                    }
                }
            }
            EXPECT_LT(worst, 1e-6) << s.to_string() << " nbar=" << bath.nbar;
        }
    }
}

TEST(PopulationRate, TenQuanta) {
    EXPECT_DOUBLE_EQ(oracle::population_rate_at_zero(10, kWarm), -62.0);
    EXPECT_DOUBLE_EQ(oracle::population_rate_at_zero(10, kCold), -20.0);
    EXPECT_DOUBLE_EQ(oracle::population_rate_at_zero(10, {2.0, 1.0}), -124.0);
}
