#include "unint/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <nlohmann/json.hpp>

#include "unint/errors.hpp"

namespace unint {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Stream-splitting rule: block b draws from mt19937_64 seeded with
// splitmix64(seed ^ splitmix64(b + 1)), so results do not depend on the
// number of workers.
std::uint64_t block_seed(std::uint64_t master, std::uint64_t block) {
    return splitmix64(master ^ splitmix64(block + 1));
}

constexpr std::uint64_t kBlockSize = 65536;

struct Accumulator {
    std::complex<double> sum{0.0, 0.0};
    double sum_re2 = 0.0;
    double sum_im2 = 0.0;

    void add(std::complex<double> v) {
        sum += v;
        sum_re2 += v.real() * v.real();
        sum_im2 += v.imag() * v.imag();
    }
    void merge(const Accumulator& o) {
        sum += o.sum;
        sum_re2 += o.sum_re2;
        sum_im2 += o.sum_im2;
    }
};

struct ExpandedMonomial {
    std::vector<std::pair<int, int>> conj;   // 0-based (row, col)
    std::vector<std::pair<int, int>> plain;
};

ExpandedMonomial expand(const IntegralSpec& spec, int n) {
    ExpandedMonomial mono;
    auto convert = [n](const std::vector<Factor>& factors,
                       std::vector<std::pair<int, int>>& out) {
        for (const auto& f : factors) {
            if (f.row < 1 || f.row > n || f.col < 1 || f.col > n)
                throw IndexOutOfRange("factor index outside 1..n");
            for (long i = 0; i < f.mult; ++i)
                out.emplace_back(static_cast<int>(f.row - 1), static_cast<int>(f.col - 1));
        }
    };
    convert(spec.conj, mono.conj);
    convert(spec.plain, mono.plain);
    return mono;
}

std::complex<double> monomial_value(const ExpandedMonomial& mono, const Eigen::MatrixXcd& u) {
    std::complex<double> v{1.0, 0.0};
    for (const auto& [i, j] : mono.conj) v *= std::conj(u(i, j));
    for (const auto& [i, j] : mono.plain) v *= u(i, j);
    return v;
}

}  // namespace

Eigen::MatrixXcd sample_haar(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double re = normal(rng);
            double im = normal(rng);
            z(i, j) = std::complex<double>(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    for (int j = 0; j < n; ++j) {
        std::complex<double> d = qr.matrixQR()(j, j);
        double mag = std::abs(d);
        std::complex<double> phase = mag > 0 ? d / mag : std::complex<double>(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

std::vector<McStats> mc_stats(const std::vector<IntegralSpec>& specs, int n,
                              std::uint64_t samples, std::uint64_t seed, int jobs) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    std::vector<ExpandedMonomial> monos;
    monos.reserve(specs.size());
    for (const auto& spec : specs) monos.push_back(expand(spec, n));

    std::uint64_t nblocks = (samples + kBlockSize - 1) / kBlockSize;
    std::vector<std::vector<Accumulator>> partials(
        nblocks, std::vector<Accumulator>(specs.size()));

    std::atomic<std::uint64_t> next_block{0};
    auto worker = [&] {
        while (true) {
            std::uint64_t b = next_block.fetch_add(1);
            if (b >= nblocks) return;
            std::mt19937_64 rng(block_seed(seed, b));
            std::uint64_t begin = b * kBlockSize;
            std::uint64_t end = std::min(samples, begin + kBlockSize);
            auto& acc = partials[b];
            for (std::uint64_t s = begin; s < end; ++s) {
                Eigen::MatrixXcd u = sample_haar(n, rng);
                for (std::size_t k = 0; k < monos.size(); ++k)
                    acc[k].add(monomial_value(monos[k], u));
            }
        }
    };
    int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    std::vector<McStats> stats(specs.size());
    for (std::size_t k = 0; k < specs.size(); ++k) {
        Accumulator total;
        for (std::uint64_t b = 0; b < nblocks; ++b) total.merge(partials[b][k]);
        double count = static_cast<double>(samples);
        std::complex<double> mean = total.sum / count;
        double var_re = std::max(0.0, (total.sum_re2 - count * mean.real() * mean.real()) /
                                          (count - 1.0));
        double var_im = std::max(0.0, (total.sum_im2 - count * mean.imag() * mean.imag()) /
                                          (count - 1.0));
        McStats& st = stats[k];
        st.samples = samples;
        st.mean = mean;
        st.stderr_real = std::sqrt(var_re / count);
        st.stderr_imag = std::sqrt(var_im / count);
        st.stderr_total = std::sqrt((var_re + var_im) / count);
    }
    return stats;
}

McReport finalize_report(const IntegralSpec& spec, int n, const McStats& stats,
                         const std::optional<Rational>& symbolic, const std::string& note,
                         double threshold) {
    McReport report;
    report.integral = spec;
    report.n = n;
    report.samples = stats.samples;
    report.estimate = stats.mean;
    report.stderr_total = stats.stderr_total;
    report.stderr_imag = stats.stderr_imag;
    report.symbolic = symbolic;
    report.note = note;
    auto ratio = [](double diff, double err) {
        if (err > 0) return diff / err;
        return diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    };
    report.z_imag = ratio(std::abs(stats.mean.imag()), stats.stderr_imag);
    if (symbolic) {
        double target = mpq_get_d(symbolic->get_mpq_t());
        report.z_score = ratio(std::abs(stats.mean - std::complex<double>(target, 0.0)),
                               stats.stderr_total);
        report.ok = report.z_score <= threshold && report.z_imag <= threshold;
    } else {
        report.z_score = std::numeric_limits<double>::quiet_NaN();
        report.ok = false;
    }
    return report;
}

namespace {

// Exact value at n. Vanishing integrals are exactly zero; an enumeration
// budget overrun leaves the estimate unchecked (noted); poles propagate.
std::optional<Rational> symbolic_value(const IntegralSpec& spec, int n, std::string& note) {
    CanonicalResult result = canonicalize(spec);
    if (std::holds_alternative<ZeroIntegral>(result)) return Rational(0);
    try {
        return evaluate_gtm(std::get<CanonicalIntegral>(result)).evaluate_at(BigInt(n));
    } catch (const DegreeTooLarge& e) {
        note = e.what();
        return std::nullopt;
    }
}

}  // namespace

McReport mc_estimate(const IntegralSpec& spec, int n, std::uint64_t samples, std::uint64_t seed,
                     int jobs, double threshold) {
    std::string note;
    std::optional<Rational> symbolic = symbolic_value(spec, n, note);
    auto stats = mc_stats({spec}, n, samples, seed, jobs);
    return finalize_report(spec, n, stats[0], symbolic, note, threshold);
}

std::vector<McReport> check_suite(const std::vector<IntegralSpec>& specs,
                                  const std::vector<int>& n_values, std::uint64_t samples,
                                  std::uint64_t seed, int jobs, double threshold) {
    std::vector<McReport> reports;
    for (int n : n_values) {
        // Estimate every spec over one shared sample stream at this n.
        std::vector<IntegralSpec> usable;
        std::vector<std::size_t> usable_index;
        std::vector<std::string> usable_note;
        std::vector<McReport> here(specs.size());
        for (std::size_t k = 0; k < specs.size(); ++k) {
            try {
                std::string note;
                std::optional<Rational> symbolic = symbolic_value(specs[k], n, note);
                here[k].symbolic = symbolic;
                usable.push_back(specs[k]);
                usable_index.push_back(k);
                usable_note.push_back(note);
            } catch (const std::exception& e) {
                here[k].integral = specs[k];
                here[k].n = n;
                here[k].note = e.what();
                here[k].ok = false;
            }
        }
        if (!usable.empty()) {
            auto stats = mc_stats(usable, n, samples, seed, jobs);
            for (std::size_t u = 0; u < usable.size(); ++u) {
                std::size_t k = usable_index[u];
                here[k] = finalize_report(specs[k], n, stats[u], here[k].symbolic,
                                          usable_note[u], threshold);
            }
        }
        for (auto& r : here) reports.push_back(std::move(r));
    }
    return reports;
}

nlohmann::json McReport::to_json() const {
    nlohmann::json j{{"integral", integral.to_json()},
                     {"n", n},
                     {"samples", samples},
                     {"estimate", {{"re", estimate.real()}, {"im", estimate.imag()}}},
                     {"stderr", stderr_total},
                     {"stderr_imag", stderr_imag},
                     {"z_score", std::isnan(z_score) ? nlohmann::json() : nlohmann::json(z_score)},
                     {"z_imag", z_imag},
                     {"ok", ok}};
    if (symbolic) {
        j["symbolic_value"] = symbolic->get_str();
        j["symbolic_double"] = mpq_get_d(symbolic->get_mpq_t());
    } else {
        j["symbolic_value"] = nullptr;
    }
    if (!note.empty()) j["note"] = note;
    return j;
}

}  // namespace unint
