#include "rdos/datagen.hpp"

#include <random>
#include <stdexcept>

namespace rdos {

Eigen::MatrixXd default_two_gaussian_outliers() {
    Eigen::MatrixXd out(3, 2);
    out << 1.25, 1.30,   // A: above the gap between the clusters
           1.25, 0.00,   // B: below the gap
           2.75, 1.20;   // C: upper right of the second cluster
    return out;
}

Eigen::MatrixXd default_cosine_outliers() {
    Eigen::MatrixXd out(4, 2);
    out << 2.0,  2.6,
           5.0, -2.8,
           8.0,  2.8,
          11.0, -2.6;
    return out;
}

namespace {

void check_outliers(const Eigen::MatrixXd& outliers) {
    if (outliers.rows() > 0 && outliers.cols() != 2) {
        throw std::invalid_argument("planted outliers must have 2 columns");
    }
}

Dataset assemble(Eigen::MatrixXd inliers, const Eigen::MatrixXd& outliers) {
    Dataset data;
    const Eigen::Index n = inliers.rows();
    const Eigen::Index m = outliers.rows();
    data.points.resize(n + m, 2);
    data.points.topRows(n) = inliers;
    if (m > 0) data.points.bottomRows(m) = outliers;
    data.labels.assign(static_cast<std::size_t>(n), Label::inlier);
    data.labels.insert(data.labels.end(), static_cast<std::size_t>(m), Label::outlier);
    data.feature_names = {"x1", "x2"};
    return data;
}

}  // namespace

Dataset gen_two_gaussians(const SynthSpec& spec) {
    if (spec.n_per_cluster < 1) throw std::invalid_argument("n_per_cluster must be positive");
    if (!(spec.cluster_sigma >= 0.0)) throw std::invalid_argument("cluster_sigma must be nonnegative");
    const Eigen::MatrixXd outliers =
        spec.outliers ? *spec.outliers : default_two_gaussian_outliers();
    check_outliers(outliers);

    const double centers[2][2] = {{0.5, 0.8}, {2.0, 0.5}};
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Eigen::MatrixXd inliers(2 * spec.n_per_cluster, 2);
    for (int c = 0; c < 2; ++c) {
        for (int i = 0; i < spec.n_per_cluster; ++i) {
            const Eigen::Index row = c * spec.n_per_cluster + i;
            inliers(row, 0) = centers[c][0] + spec.cluster_sigma * gauss(rng);
            inliers(row, 1) = centers[c][1] + spec.cluster_sigma * gauss(rng);
        }
    }
    return assemble(std::move(inliers), outliers);
}

Dataset gen_cosine(const SynthSpec& spec) {
    if (spec.n_curve < 1) throw std::invalid_argument("n_curve must be positive");
    if (!(spec.noise_sigma2 >= 0.0)) throw std::invalid_argument("noise_sigma2 must be nonnegative");
    if (!(spec.x1_max > spec.x1_min)) throw std::invalid_argument("empty x1 range");
    const Eigen::MatrixXd outliers =
        spec.outliers ? *spec.outliers : default_cosine_outliers();
    check_outliers(outliers);

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> along(spec.x1_min, spec.x1_max);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double noise_sigma = std::sqrt(spec.noise_sigma2);

    Eigen::MatrixXd inliers(spec.n_curve, 2);
    for (int i = 0; i < spec.n_curve; ++i) {
        const double x1 = along(rng);
        inliers(i, 0) = x1;
        inliers(i, 1) = std::cos(x1) + noise_sigma * gauss(rng);
    }
    return assemble(std::move(inliers), outliers);
}

Dataset gen_synthetic(const SynthSpec& spec) {
    return spec.variant == SynthVariant::cosine ? gen_cosine(spec)
                                                : gen_two_gaussians(spec);
}

}  // namespace rdos
