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
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "qcf/error.hpp"
#include "qcf/evolution.hpp"
#include "qcf/oracle.hpp"
#include "qcf/specfun.hpp"
#include "qcf/states.hpp"
#include "reference.hpp"

using namespace qcf;

namespace {

const BathParams kWarm{1.0, 1.0};
const BathParams kCold{1.0, 0.0};

// Sign of G_10 matters below, so compare signed values.
double g_norm(int m, const BathParams &b, double gt, double k) {
    return cf_fock_evolved(m, b, gt, k) / cf_fock(m, k);
}

} // namespace

TEST(WignerCfEvolved, IdentityAtZeroTime) {
    const auto chi = initial_wigner_cf(StateSpec::fock(4));
    for (double k : {0.3, 2.0}) {
        const cplx xi(0.0, k);
        EXPECT_EQ(wigner_cf_evolved(chi, kWarm, 0.0, xi), chi(xi));
    }
}

TEST(WignerCfEvolved, GroundRelaxesToThermal) {
    const auto chi = initial_wigner_cf(StateSpec::ground());
    const cplx v = wigner_cf_evolved(chi, kWarm, 60.0, cplx(1.0, 0.0));
    EXPECT_NEAR(v.real(), std::exp(-1.5), 1e-14);
}

TEST(WignerCfEvolved, RejectsNegativeTime) {
    const auto chi = initial_wigner_cf(StateSpec::ground());
    EXPECT_THROW((void)wigner_cf_evolved(chi, kWarm, -0.1, cplx(1.0)), DomainError);
    EXPECT_THROW((void)cf_fock_evolved(3, kWarm, -1.0, 1.0), DomainError);
}

TEST(CfEvolved, FockClosedFormReduction) {
    for (int m : {0, 1, 5, 10, 12}) {
        for (const auto &bath : {kCold, kWarm, BathParams{2.0, 0.3}}) {
            for (double gt : {0.0, 0.05, 0.1, 0.7, 2.0}) {
                for (double k = 0.0; k <= 8.0; k += 0.25) {
                    const cplx generic = cf_evolved(StateSpec::fock(m), bath, gt, k, 0.4);
                    EXPECT_NEAR(std::abs(generic - cf_fock_evolved(m, bath, gt, k)), 0.0,
                                1e-12);
                }
            }
        }
    }
}

TEST(CfEvolved, FockHandWrittenForm) {
    const double k = 2.3;
    const double gt = 0.4;
    const double e = std::exp(-2 * gt);
    const double expected = std::exp(-(1.0 - e) * k * k) *
                            qcf::testing::laguerre_series(10, 0, k * k * e) *
                            std::exp(-k * k / 2);
    EXPECT_NEAR(cf_fock_evolved(10, kWarm, gt, k), expected, 1e-13);
    EXPECT_EQ(cf_fock_evolved(10, kWarm, 0.7, 0.0), 1.0);
}

TEST(CfEvolved, SqueezedAtMinimumPhase) {
    for (double gt : {0.0, 0.2, 1.0}) {
        for (double k : {0.5, 1.0, 5.29}) {
            const cplx g = cf_evolved(StateSpec::squeezed_vacuum(1.32), kWarm, gt, k, 0.0);
            EXPECT_NEAR(g.real(), cf_squeezed_evolved_min(1.32, kWarm, gt, k), 1e-14);
            EXPECT_NEAR(g.real(),
                        std::exp(-k * k * variance_min_squeezed(1.32, kWarm, gt) / 2),
                        1e-14);
        }
    }
}

TEST(CfEvolved, SemigroupProperty) {
    const double t1 = 0.17;
    const double t2 = 0.41;
    for (const auto &s : {StateSpec::fock(10), StateSpec::squeezed_vacuum(1.32),
                          StateSpec::thermal(0.4), StateSpec::ground()}) {
        const auto chi0 = initial_wigner_cf(s);
        const WignerCf chi1 = [&](cplx xi) { return wigner_cf_evolved(chi0, kWarm, t1, xi); };
        for (double phi : {0.0, 1.0}) {
            for (double k = 0.0; k <= 6.0; k += 0.5) {
                const cplx xi = cplx(0.0, k) * std::polar(1.0, -phi);
                const cplx two_step = wigner_cf_evolved(chi1, kWarm, t2, xi);
                EXPECT_NEAR(std::abs(two_step - cf_evolved(s, kWarm, t1 + t2, k, phi)), 0.0,
                            1e-12);
            }
        }
    }
}

TEST(CfEvolved, ThermalStateIsStationary) {
    for (double nb : {0.0, 0.5, 1.0, 3.0}) {
        const BathParams bath{1.0, nb};
        const auto s = StateSpec::thermal(nb);
        for (double gt : {0.1, 1.0, 5.0}) {
            for (double k = 0.0; k <= 8.0; k += 0.5) {
                EXPECT_NEAR(std::abs(cf_evolved(s, bath, gt, k, 0.3) - cf_initial(s, k, 0.3)),
                            0.0, 1e-12);
            }
        }
    }
}

TEST(TimeDerivative, SimpleValues) {
    EXPECT_EQ(cf_fock_time_derivative_at_zero(10, kWarm, 0.0), 0.0);
    for (double k : {0.5, 2.0, 6.0}) {
        EXPECT_EQ(cf_fock_time_derivative_at_zero(0, kCold, k), 0.0);
    }
}

TEST(TimeDerivative, FiniteDifferenceSuite) {
    constexpr double dt = 1e-6;
    for (const auto &bath : {kWarm, kCold}) {
        for (int m = 1; m <= 12; ++m) {
            for (double k = 0.0; k <= 8.0; k += 0.25) {
                // t < 0 is outside the domain, so use the second-order
                // one-sided stencil through the generic evolution path.
                auto g = [&](double gt) {
                    return cf_evolved(StateSpec::fock(m), bath, gt, k, 0.0).real();
                };
                const double fd = (-3.0 * g(0.0) + 4.0 * g(dt) - g(2 * dt)) / (2 * dt);
                EXPECT_NEAR(cf_fock_time_derivative_at_zero(m, bath, k), fd, 1e-6)
                    << "m=" << m << " k=" << k;
            }
        }
    }
}

TEST(TimeDerivative, ScalesWithGamma) {
    const BathParams fast{3.0, 1.0};
    EXPECT_NEAR(cf_fock_time_derivative_at_zero(10, fast, 2.0),
                3.0 * cf_fock_time_derivative_at_zero(10, kWarm, 2.0), 1e-12);
}

TEST(FindKmax, TenQuantaBracket) {
    const double warm = find_kmax_fock(10, kWarm);
    const double cold = find_kmax_fock(10, kCold);
    EXPECT_GE(warm, 5.5);
    EXPECT_LE(warm, 6.5);
    EXPECT_GE(cold, 5.5);
    EXPECT_LE(cold, 6.5);
    EXPECT_NEAR(warm, 6.0305, 1e-3);
    EXPECT_NEAR(cold, 5.8956, 1e-3);
}

TEST(FindKmax, OneQuantumMatchesBruteForce) {
    auto f = [](double k) {
        return std::abs(2.0 * (1.0 - (1.0 - k * k)) * k * k * std::exp(-k * k / 2));
    };
    const double brute = qcf::testing::grid_argmax(f, 0.0, 12.0, 1e-5);
    EXPECT_NEAR(find_kmax_fock(1, kWarm), brute, 1e-4);
}

TEST(FindKmax, ViolatesClassicalBound) {
    const double k = find_kmax_fock(10, kWarm);
    EXPECT_GT(std::abs(cf_fock(10, k)), cf_ground(k));
}

TEST(FindKmax, RejectsBadRange) {
    EXPECT_THROW((void)find_kmax_fock(10, kWarm, {3.0, 2.0}), DomainError);
    EXPECT_THROW((void)find_kmax_fock(10, kWarm, {0.0, 13.0}), DomainError);
}

TEST(KmaxSqueezed, Values) {
    EXPECT_NEAR(kmax_squeezed(0.0), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(kmax_squeezed(1.32), std::sqrt(2 * std::exp(2.64)), 1e-12);
    EXPECT_NEAR(kmax_squeezed(1.32), 5.2940, 1e-3);
}

TEST(KmaxSqueezed, MatchesNumericalArgmax) {
    for (double r : {0.3, 1.0, 1.32}) {
        for (double nb : {0.0, 1.0}) {
            const BathParams bath{1.0, nb};
            constexpr double dt = 1e-6;
            auto rate = [&](double k) {
                return std::abs(cf_squeezed_evolved_min(r, bath, dt, k) -
                                cf_squeezed_evolved_min(r, bath, 0.0, k)) /
                       dt;
            };
            const double brute = qcf::testing::grid_argmax(rate, 0.0, 12.0, 1e-4);
            EXPECT_NEAR(kmax_squeezed(r), brute, 1e-3) << "r=" << r << " nbar=" << nb;
        }
    }
}

TEST(MandelQ, LimitsAndIdentity) {
    for (int m = 1; m <= 12; ++m) {
        for (double nb : {0.0, 0.5, 1.0, 4.0}) {
            EXPECT_NEAR(mandel_q(m, {1.0, nb}, 0.0), -1.0, 1e-14);
        }
    }
    EXPECT_NEAR(mandel_q(10, kWarm, 20.0), 1.0, 1e-9);
    EXPECT_THROW((void)mandel_q(0, kCold, 0.3), DomainError);
}

TEST(MandelQ, MatchesOraclePopulations) {
    std::vector<double> p0(64, 0.0);
    p0[10] = 1.0;
    const auto p = oracle::evolve_populations(p0, kWarm, 0.5);
    double n1 = 0, n2 = 0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        n1 += n * p[n];
        n2 += double(n) * n * p[n];
    }
    EXPECT_NEAR(mandel_q(10, kWarm, 0.5), (n2 - n1 * n1 - n1) / n1, 1e-8);
}

TEST(MeanExcitation, LimitsAndOracle) {
    EXPECT_EQ(mean_excitation(10, kWarm, 0.0), 10.0);
    EXPECT_NEAR(mean_excitation(10, kWarm, 40.0), 1.0, 1e-12);
    std::vector<double> p0(64, 0.0);
    p0[10] = 1.0;
    const auto p = oracle::evolve_populations(p0, kWarm, 0.5);
    EXPECT_NEAR(mean_excitation(10, kWarm, 0.5), oracle::mean_number(p), 1e-8);
    EXPECT_NEAR(mean_excitation(10, kWarm, 0.5), 10 * std::exp(-1.0) + (1 - std::exp(-1.0)),
                1e-14);
}

TEST(VarianceMinSqueezed, Values) {
    EXPECT_NEAR(variance_min_squeezed(0.8, kWarm, 0.0), std::exp(-1.6), 1e-15);
    for (double gt : {0.0, 0.3, 2.0}) {
        EXPECT_NEAR(variance_min_squeezed(0.0, kCold, gt), 1.0, 1e-15);
    }
}

TEST(VarianceMinSqueezed, NondecreasingInTime) {
    for (double r : {0.1, 1.32, 2.0}) {
        for (double nb : {0.0, 1.0}) {
            double prev = variance_min_squeezed(r, {1.0, nb}, 0.0);
            for (double gt = 0.01; gt <= 5.0; gt += 0.01) {
                const double v = variance_min_squeezed(r, {1.0, nb}, gt);
                EXPECT_GE(v, prev);
                prev = v;
            }
        }
    }
}

TEST(VarianceMinSqueezed, MatchesOracleSecondMoment) {
    const auto rho0 = oracle::build_initial_density_auto(StateSpec::squeezed_vacuum(1.32));
    oracle::IntegratorConfig ic;
    ic.n_trunc = rho0.dim();
    const auto rho = oracle::evolve(rho0, kWarm, 0.3, ic);
    EXPECT_NEAR(oracle::quadrature_variance(rho, 0.0), variance_min_squeezed(1.32, kWarm, 0.3),
                1e-8);
}

TEST(DecayRates, TenQuantaRatio) {
    const double ratio = decay_rate_ratio(10, kWarm);
    EXPECT_GE(ratio, 1.5);
    EXPECT_LE(ratio, 2.5);
    EXPECT_NEAR(ratio, 1.7577, 1e-3);
    // p_10 rate is 2[(nbar + 1) 10 + nbar 11] = 62 per gamma t.
    EXPECT_NEAR(decay_rates(10, kWarm, 6.0).population_rate, 62.0, 1e-12);
}

TEST(DecayRates, SlowAtSmallK) {
    const auto at_one = decay_rates(10, kWarm, 1.0);
    EXPECT_LT(at_one.ratio(), 0.25);
}

TEST(DecayRates, ZeroTemperaturePositive) {
    for (int m = 1; m <= 12; ++m) {
        const double r = decay_rate_ratio(m, kCold);
        EXPECT_TRUE(std::isfinite(r));
        EXPECT_GT(r, 0.0);
    }
}

TEST(DecayRates, IndependentOfGamma) {
    EXPECT_NEAR(decay_rate_ratio(10, {4.0, 1.0}), decay_rate_ratio(10, kWarm), 1e-12);
}

TEST(FockMixture, SingleTermAndCancellation) {
    const std::pair<int, double> one[] = {{10, 1.0}};
    EXPECT_DOUBLE_EQ(cf_as_fock_mixture(one, 2.7), cf_fock(10, 2.7));
    const double k = find_kmax_fock(10, kWarm);
    const std::pair<int, double> side[] = {{9, 0.5}, {11, 0.5}};
    const double mix = cf_as_fock_mixture(side, k);
    // Both neighbours sit on the opposite side of zero with comparable size.
    EXPECT_LT(cf_fock(9, k) * cf_fock(10, k), 0.0);
    EXPECT_LT(cf_fock(11, k) * cf_fock(10, k), 0.0);
    EXPECT_LT(mix / cf_fock(10, k), -0.7);
    EXPECT_GT(mix / cf_fock(10, k), -1.3);
    const std::pair<int, double> bad[] = {{1, -0.1}};
    EXPECT_THROW((void)cf_as_fock_mixture(bad, 1.0), DomainError);
}

TEST(FockMixture, OraclePopulationsReproduceEvolvedCf) {
    std::vector<double> p0(64, 0.0);
    p0[10] = 1.0;
    for (double gt : {0.05, 0.3, 1.0}) {
        const auto p = oracle::evolve_populations(p0, kWarm, gt);
        std::vector<std::pair<int, double>> w;
        for (std::size_t n = 0; n < p.size(); ++n) {
            w.emplace_back(static_cast<int>(n), std::max(0.0, p[n]));
        }
        for (double k = 0.0; k <= 8.0; k += 0.5) {
            EXPECT_NEAR(cf_as_fock_mixture(w, k), cf_fock_evolved(10, kWarm, gt, k), 1e-8);
        }
    }
}

TEST(Ordering, TenQuantaCfDecaysFasterThanPopulation) {
    std::vector<double> p(64, 0.0);
    p[10] = 1.0;
    const double k = find_kmax_fock(10, kWarm);
    double now = 0.0;
    for (double gt = 0.01; gt <= 0.5 + 1e-12; gt += 0.01) {
        p = oracle::evolve_populations(p, kWarm, gt - now);
        now = gt;
        const double g = g_norm(10, kWarm, gt, k);
        const double n_norm = mean_excitation(10, kWarm, gt) / 10;
        EXPECT_LT(g, p[10]) << "gt=" << gt;
        EXPECT_LT(p[10], n_norm) << "gt=" << gt;
    }
}
