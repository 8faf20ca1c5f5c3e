#ifndef RDOS_DATAGEN_HPP
#define RDOS_DATAGEN_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>

#include "rdos/core.hpp"

// Generators for the two bundled synthetic benchmarks: a pair of Gaussian
// clusters with three planted outliers, and a noisy cosine curve with four.
// Inliers are labeled inlier, planted points outlier. Generation is
// single-threaded and bit-reproducible for a fixed seed.

namespace rdos {

enum class SynthVariant { two_gaussians, cosine };

struct SynthSpec {
    SynthVariant variant = SynthVariant::two_gaussians;
    int n_per_cluster = 100;     // two-Gaussian variant: samples per cluster
    int n_curve = 300;           // cosine variant: samples along the curve
    double cluster_sigma = 0.1;  // isotropic stddev of each Gaussian cluster
    double noise_sigma2 = 0.1;   // variance of the cosine vertical noise
    double x1_min = 0.0;         // cosine abscissa range (two periods)
    double x1_max = 4.0 * M_PI;

    // Planted outlier coordinates, one per row (2 columns). Leave unset for
    // the documented defaults; pass an empty 0x2 matrix for no outliers.
    std::optional<Eigen::MatrixXd> outliers;

    std::uint64_t seed = 42;
};

// Default planted outliers, chosen well clear of the generating process
// (at least five cluster standard deviations from each cluster center, or
// vertically at least five noise standard deviations off the curve).
Eigen::MatrixXd default_two_gaussian_outliers();
Eigen::MatrixXd default_cosine_outliers();

// Two Gaussian clusters centered at (0.5, 0.8) and (2, 0.5) plus the
// planted outliers.
Dataset gen_two_gaussians(const SynthSpec& spec);

// x2 = cos(x1) + noise with x1 uniform over [x1_min, x1_max], plus the
// planted outliers.
Dataset gen_cosine(const SynthSpec& spec);

// Dispatch on spec.variant.
Dataset gen_synthetic(const SynthSpec& spec);

}  // namespace rdos

#endif  // RDOS_DATAGEN_HPP
