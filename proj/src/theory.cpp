#include "rdos/theory.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "rdos/neighbors.hpp"
#include "rdos/parallel.hpp"
#include "rdos/rdos.hpp"

namespace rdos {

void validate_bound_input(const BoundInput& in) {
    if (!(in.gamma > 1.0)) {
        throw std::invalid_argument("gamma must exceed 1 (scores concentrate at 1)");
    }
    if (in.s_size < 1) throw std::invalid_argument("neighborhood size must be positive");
    if (in.dimension < 1) throw std::invalid_argument("dimension must be positive");
    if (!(in.width > 0.0)) throw std::invalid_argument("kernel width must be positive");
    if (!(in.radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
}

double ball_volume(double r, int n) {
    if (!(r > 0.0)) throw std::invalid_argument("ball radius must be positive");
    if (n < 0) throw std::invalid_argument("ball dimension must be nonnegative");
    return std::pow(M_PI, 0.5 * n) * std::pow(r, n) / std::tgamma(0.5 * n + 1.0);
}

double false_alarm_bound(const BoundInput& in) {
    validate_bound_input(in);
    const double g = in.gamma;
    const double s = static_cast<double>(in.s_size);
    const double d = static_cast<double>(in.dimension);
    const double volume = ball_volume(in.radius, in.dimension - 1);

    const double numerator = 2.0 * (g - 1.0) * (g - 1.0) * (s + 1.0) * (s + 1.0) *
                             std::pow(2.0 * M_PI, d) * std::pow(in.width, 2.0 * d);
    const double denominator =
        s * (2.0 * s + g + 1.0) * (2.0 * s + g + 1.0) * volume * volume;
    return std::min(1.0, std::exp(-numerator / denominator));
}

namespace {

// Uniform draw from the d-ball of radius r: isotropic direction scaled by
// r * U^(1/d).
Eigen::VectorXd sample_ball(std::mt19937_64& rng, int d, double r) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::VectorXd v(d);
    do {
        for (int i = 0; i < d; ++i) v(i) = gauss(rng);
    } while (v.norm() == 0.0);
    v /= v.norm();
    return v * (r * std::pow(unit(rng), 1.0 / d));
}

}  // namespace

Theorem1Stats validate_theorem1(int n_points, int k, const KernelSpec& spec,
                                std::uint64_t seed) {
    validate_kernel_spec(spec);
    if (spec.dimension != 2) {
        throw std::invalid_argument("validate_theorem1 samples the unit square; dimension must be 2");
    }
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (n_points < 50 * k) {
        throw std::invalid_argument("n_points must be at least 50*k for the asymptotic regime");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Dataset data;
    data.points.resize(n_points, 2);
    for (int i = 0; i < n_points; ++i) {
        data.points(i, 0) = unit(rng);
        data.points(i, 1) = unit(rng);
    }

    const KnnGraph graph = build_knn_graph_kdtree(data, k);
    const ScoreReport report = rdos_scores(data, graph, spec);

    Theorem1Stats stats;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int p = 0; p < n_points; ++p) {
        const double kdist = graph.kth_distance(p);
        const double x = data.points(p, 0);
        const double y = data.points(p, 1);
        const double edge = std::min(std::min(x, 1.0 - x), std::min(y, 1.0 - y));
        if (kdist < 0.1 && edge >= kdist) {
            sum += report.rdos(p);
            sum_sq += report.rdos(p) * report.rdos(p);
            ++stats.interior_count;
        }
    }
    if (stats.interior_count == 0) return stats;
    const double n = static_cast<double>(stats.interior_count);
    stats.mean_rdos = sum / n;
    stats.std_rdos = std::sqrt(std::max(0.0, sum_sq / n - stats.mean_rdos * stats.mean_rdos));
    return stats;
}

Theorem2Result validate_theorem2(int trials, const BoundInput& in, std::uint64_t seed) {
    validate_bound_input(in);
    if (trials < 1000) {
        throw std::invalid_argument("validate_theorem2 needs at least 1000 trials");
    }

    const int d = in.dimension;
    const int s = in.s_size;
    const KernelSpec spec{in.width, d, BandwidthConvention::paper};

    // Fixed partition grid: per-chunk seeds derive from (seed, chunk), so
    // the result is identical for any worker count.
    constexpr int kChunks = 64;
    std::vector<long> exceed(kChunks, 0);
    std::vector<int> chunk_trials(kChunks, trials / kChunks);
    for (int c = 0; c < trials % kChunks; ++c) ++chunk_trials[static_cast<std::size_t>(c)];

    parallel::parallel_for(kChunks, [&](std::ptrdiff_t chunk) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(chunk + 1));
        Eigen::MatrixXd pts(s + 1, d);
        long count = 0;
        for (int t = 0; t < chunk_trials[static_cast<std::size_t>(chunk)]; ++t) {
            pts.row(0).setZero();  // the query point
            for (int i = 1; i <= s; ++i) pts.row(i) = sample_ball(rng, d, in.radius).transpose();

            // densities over the pooled set: every point is averaged against
            // all s+1 kernel centers including itself
            const double scale =
                (static_cast<double>(s) + 1.0) * std::pow(in.width, static_cast<double>(d));
            Eigen::VectorXd dens = Eigen::VectorXd::Zero(s + 1);
            for (int i = 0; i <= s; ++i) {
                double sum = 0.0;
                for (int j = 0; j <= s; ++j) {
                    sum += gaussian_kernel_sq((pts.row(i) - pts.row(j)).squaredNorm(), spec);
                }
                dens(i) = sum / scale;
            }
            const double score = dens.tail(s).mean() / dens(0);
            if (score > in.gamma) ++count;
        }
        exceed[static_cast<std::size_t>(chunk)] = count;
    });

    long total = 0;
    for (const long c : exceed) total += c;
    Theorem2Result result;
    result.empirical_rate = static_cast<double>(total) / static_cast<double>(trials);
    result.bound = false_alarm_bound(in);
    return result;
}

}  // namespace rdos
