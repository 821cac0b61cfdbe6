#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "unint/integrals.hpp"

namespace unint {

/// Haar-distributed n x n unitary: complex Gaussian matrix, QR, then each
/// column scaled by the phase of the corresponding diagonal entry of R so
/// the factorization is unique (plain QR alone is not Haar).
Eigen::MatrixXcd sample_haar(int n, std::mt19937_64& rng);

struct McReport {
    IntegralSpec integral;
    int n = 0;
    std::uint64_t samples = 0;
    std::complex<double> estimate{0.0, 0.0};
    double stderr_total = 0.0;  // standard error of the complex mean
    double stderr_imag = 0.0;
    std::optional<Rational> symbolic;  // exact value at n, when computable
    std::string note;                  // why symbolic is missing, if it is
    double z_score = 0.0;              // |estimate - symbolic| / stderr_total
    double z_imag = 0.0;               // |Im estimate| / stderr_imag
    bool ok = false;

    nlohmann::json to_json() const;
};

/// Estimate one integral at integer dimension n by averaging the monomial
/// over Haar samples. Throws IndexOutOfRange if a label exceeds n and
/// PoleAtValue if the symbolic value has a pole there.
McReport mc_estimate(const IntegralSpec& spec, int n, std::uint64_t samples,
                     std::uint64_t seed, int jobs = 1, double threshold = 5.0);

/// One report per (spec, n). All specs at a given n share the same sample
/// stream, so the work grows with n_values, not with the number of specs.
/// Per-item failures are recorded in the report notes instead of aborting.
std::vector<McReport> check_suite(const std::vector<IntegralSpec>& specs,
                                  const std::vector<int>& n_values, std::uint64_t samples,
                                  std::uint64_t seed, int jobs = 1, double threshold = 5.0);

/// Sample statistics of one monomial, before symbolic comparison.
struct McStats {
    std::uint64_t samples = 0;
    std::complex<double> mean{0.0, 0.0};
    double stderr_total = 0.0;
    double stderr_real = 0.0;
    double stderr_imag = 0.0;
};

/// Raw estimates for several monomials over a shared sample stream.
/// Deterministic for fixed (seed, n, samples) regardless of `jobs`: samples
/// are split into fixed blocks, each with its own generator derived from the
/// master seed, and partial sums are combined in block order.
std::vector<McStats> mc_stats(const std::vector<IntegralSpec>& specs, int n,
                              std::uint64_t samples, std::uint64_t seed, int jobs = 1);

/// Attach a symbolic value to raw statistics and compute the z-scores.
McReport finalize_report(const IntegralSpec& spec, int n, const McStats& stats,
                         const std::optional<Rational>& symbolic, const std::string& note,
                         double threshold);

}  // namespace unint
