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
 * Synthetic balanced-homodyne data, the direct sampling estimator
 *
 *     G(k, t, phi) ~ (1/N) sum_j exp(i k x_j),
 *
 * and the first-order nonclassicality witness |G(k, phi)| > exp(-k^2/2)
 * with counted-sigma thresholding.
 *
 * Random streams: each worker w draws from std::mt19937_64 seeded with
 * splitmix64(seed ^ splitmix64(w)). Output is bit-exact for a fixed
 * (seed, worker count).
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "qcf/types.hpp"

namespace qcf::homodyne {

struct StateMeta {
    StateSpec state;
    std::optional<BathParams> bath;
    double gamma_t = 0.0;
};

struct QuadratureDataset {
    double phi = 0.0;
    std::vector<double> samples;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::optional<StateMeta> meta; ///< absent for externally loaded data

    /// Non-empty and finite; throws DomainError otherwise.
    void validate() const;
};

struct CfEstimate {
    double k = 0.0;
    cplx value{1.0, 0.0};
    double stderr_re = 0.0;
    double stderr_im = 0.0;

    /// Standard error of |value| propagated from the component errors.
    [[nodiscard]] double modulus_stderr() const;
};

/// Draws i.i.d. quadrature samples of a (possibly bath-evolved) state.
///
/// Gaussian states are sampled directly from a normal distribution with the
/// evolved variance. Fock states use an inverse-CDF table of the density
/// obtained by Fourier inversion of cf_evolved on x in [-40, 40] with 2^14
/// nodes. Build once, draw many times.
class QuadratureSampler {
  public:
    static constexpr std::size_t kGridPoints = std::size_t{1} << 14;
    static constexpr double kGridHalfWidth = 40.0;
    static constexpr double kNegativityTol = 1e-10;

    QuadratureSampler(const StateSpec &state, std::optional<BathParams> bath,
                      double gamma_t, double phi);

    [[nodiscard]] bool is_gaussian() const noexcept { return gaussian_; }
    /// Quadrature variance for the Gaussian path.
    [[nodiscard]] double variance() const noexcept { return variance_; }

    /// Density of the sampled distribution (the table for the non-Gaussian
    /// path, cell-averaged).
    [[nodiscard]] double pdf(double x) const;
    [[nodiscard]] double cdf(double x) const;

    [[nodiscard]] std::vector<double> draw(std::size_t n, std::uint64_t seed,
                                           unsigned workers = 1) const;

    [[nodiscard]] const StateMeta &meta() const noexcept { return meta_; }
    [[nodiscard]] double phi() const noexcept { return phi_; }

  private:
    [[nodiscard]] double transform(double u1, double u2, double &second) const;

    StateMeta meta_;
    double phi_ = 0.0;
    bool gaussian_ = true;
    double variance_ = 1.0;
    std::vector<double> x_;
    std::vector<double> cdf_;
};

/// Quadrature density on the given x nodes from numerical Fourier inversion
/// of G(k, t, phi). Negative excursions down to -kNegativityTol are clamped
/// to zero; anything below throws NumericalHealthError.
[[nodiscard]] std::vector<double>
fourier_inverted_density(const StateSpec &state, const std::optional<BathParams> &bath,
                         double gamma_t, double phi, std::span<const double> x);

[[nodiscard]] QuadratureDataset sample_quadratures(const StateSpec &state,
                                                   std::optional<BathParams> bath,
                                                   double gamma_t, double phi,
                                                   std::size_t n, std::uint64_t seed,
                                                   unsigned workers = 1);

/// Empirical phasor average with standard errors from the sample moments.
/// k = 0 gives exactly 1 with zero error.
[[nodiscard]] std::vector<CfEstimate> estimate_cf(const QuadratureDataset &data,
                                                  std::span<const double> k_grid);

struct WitnessVerdict {
    double k = 0.0;
    double modulus = 0.0;
    double classical_bound = 1.0;
    double margin = 0.0;   ///< modulus - classical_bound
    double threshold = 0.0; ///< sigmas * modulus_stderr
    bool flagged = false;
};

struct WitnessReport {
    std::vector<WitnessVerdict> per_k;
    bool nonclassical = false;
    double best_k = 0.0;
    double best_margin = 0.0;
};

/// Flags each k with |G| - exp(-k^2/2) > sigmas * stderr(|G|).
[[nodiscard]] WitnessReport witness_first_order(std::span<const CfEstimate> estimates,
                                                double significance_sigmas = 5.0);

/// "# phi,seed,n" header comment, optional "# key: value" metadata comments,
/// then one sample per line at full precision.
void write_dataset_csv(std::ostream &os, const QuadratureDataset &data);
[[nodiscard]] QuadratureDataset read_dataset_csv(std::istream &is);

/// splitmix64 finalizer, exposed for seed derivation in callers.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace qcf::homodyne
