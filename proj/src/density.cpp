#include "rdos/density.hpp"

#include <array>

#include "rdos/parallel.hpp"

namespace rdos {

double local_density(const Dataset& data, const NeighborSets& sets, int p,
                     const KernelSpec& spec) {
    validate_kernel_spec(spec);
    if (p < 0 || p >= data.size()) {
        throw std::invalid_argument("local_density: point index out of range");
    }
    if (spec.dimension != data.dimension()) {
        throw std::invalid_argument("local_density: kernel dimension does not match data");
    }

    const auto center = data.points.row(p);
    double sum = 0.0;
    for (const int q : sets.extended) {
        sum += gaussian_kernel_sq((data.points.row(q) - center).squaredNorm(), spec);
    }
    sum += gaussian_kernel_sq(0.0, spec);  // the point is always its own kernel center

    const double scale = std::pow(spec.width, static_cast<double>(spec.dimension));
    return sum / (static_cast<double>(sets.extended.size() + 1) * scale);
}

Eigen::VectorXd local_densities(const Dataset& data,
                                const std::vector<NeighborSets>& sets,
                                const KernelSpec& spec) {
    if (sets.size() != static_cast<std::size_t>(data.size())) {
        throw std::invalid_argument("local_densities: one neighbor set per point required");
    }
    Eigen::VectorXd densities(data.size());
    parallel::parallel_for(data.size(), [&](Eigen::Index p) {
        densities(p) =
            local_density(data, sets[static_cast<std::size_t>(p)], static_cast<int>(p), spec);
    });
    return densities;
}

namespace {

// Simpson weights over an odd-length grid: 1 4 2 4 ... 2 4 1, times step/3.
std::vector<double> simpson_weights(int resolution, double step) {
    std::vector<double> w(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const bool edge = i == 0 || i == resolution - 1;
        w[static_cast<std::size_t>(i)] = edge ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        w[static_cast<std::size_t>(i)] *= step / 3.0;
    }
    return w;
}

}  // namespace

KernelMoments kernel_moment_check(const KernelSpec& spec, int resolution) {
    validate_kernel_spec(spec);
    const int d = spec.dimension;
    if (d > 3) {
        throw std::invalid_argument("kernel_moment_check supports d <= 3 only");
    }
    if (resolution < 3 || resolution % 2 == 0) {
        throw std::invalid_argument("quadrature resolution must be odd and >= 3");
    }

    // In u-space the kernel's per-axis standard deviation is 1 for the
    // standard convention and 1/sqrt(h) for the paper convention; a box of
    // ten standard deviations truncates far below double precision.
    const double sigma = spec.convention == BandwidthConvention::standard
                             ? 1.0
                             : 1.0 / std::sqrt(spec.width);
    const double half_width = 10.0 * sigma;
    const double step = 2.0 * half_width / (resolution - 1);
    const auto weights = simpson_weights(resolution, step);

    auto node = [&](int i) { return -half_width + step * i; };
    // The kernel takes the raw displacement X - X_i = h * u.
    auto kernel_at = [&](const Eigen::VectorXd& u) {
        return gaussian_kernel_sq(spec.width * spec.width * u.squaredNorm(), spec);
    };

    KernelMoments moments{0.0, 0.0, 0.0};
    Eigen::VectorXd first = Eigen::VectorXd::Zero(d);
    Eigen::VectorXd u(d);

    std::array<int, 3> idx{0, 0, 0};
    const long total = static_cast<long>(std::pow(resolution, d));
    for (long flat = 0; flat < total; ++flat) {
        long rest = flat;
        double w = 1.0;
        for (int axis = 0; axis < d; ++axis) {
            idx[static_cast<std::size_t>(axis)] = static_cast<int>(rest % resolution);
            rest /= resolution;
            u(axis) = node(idx[static_cast<std::size_t>(axis)]);
            w *= weights[static_cast<std::size_t>(idx[static_cast<std::size_t>(axis)])];
        }
        const double k = kernel_at(u);
        moments.integral += w * k;
        first += w * k * u;
        moments.second_moment += w * k * u.squaredNorm();
    }

    Eigen::Index max_component = 0;
    first.cwiseAbs().maxCoeff(&max_component);
    moments.first_moment = first(max_component);
    return moments;
}

}  // namespace rdos
