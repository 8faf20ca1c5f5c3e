#include "rdos/core.hpp"

#include <cmath>
#include <cstring>

namespace rdos {

void validate_dataset(const Dataset& data) {
    if (data.points.rows() < 2) {
        throw std::invalid_argument("dataset must contain at least 2 points, got " +
                                    std::to_string(data.points.rows()));
    }
    if (data.points.cols() < 1) {
        throw std::invalid_argument("dataset must have at least 1 feature");
    }
    if (!data.points.allFinite()) {
        throw std::invalid_argument("dataset contains NaN or infinite coordinates");
    }
    if (!data.labels.empty() &&
        data.labels.size() != static_cast<std::size_t>(data.points.rows())) {
        throw std::invalid_argument("label count does not match point count");
    }
    if (!data.feature_names.empty() &&
        data.feature_names.size() != static_cast<std::size_t>(data.points.cols())) {
        throw std::invalid_argument("feature name count does not match dimension");
    }
}

void validate_params(const Params& params, Eigen::Index n_points) {
    if (params.k < 1 || params.k > n_points - 1) {
        throw std::invalid_argument("k must be in [1, N-1]; got k=" +
                                    std::to_string(params.k) + " with N=" +
                                    std::to_string(n_points));
    }
    if (!(params.h > 0.0)) {
        throw std::invalid_argument("kernel width h must be positive");
    }
    if (params.tau && !(*params.tau > 1.0)) {
        throw std::invalid_argument(
            "tau must exceed 1: RDOS concentrates at 1 for points drawn from the "
            "same distribution as their neighbors, so any threshold <= 1 flags "
            "everything");
    }
    if (params.top_n && (*params.top_n < 1 || *params.top_n > n_points)) {
        throw std::invalid_argument("top_n must be in [1, N]");
    }
}

Dataset minmax_normalize(const Dataset& data) {
    validate_dataset(data);
    const Eigen::RowVectorXd lo = data.points.colwise().minCoeff();
    const Eigen::RowVectorXd hi = data.points.colwise().maxCoeff();

    Dataset out;
    out.labels = data.labels;
    out.feature_names = data.feature_names;
    out.points.resize(data.points.rows(), data.points.cols());
    for (Eigen::Index j = 0; j < data.points.cols(); ++j) {
        const double range = hi(j) - lo(j);
        if (range > 0.0) {
            out.points.col(j) = (data.points.col(j).array() - lo(j)) / range;
        } else {
            out.points.col(j).setZero();  // constant feature: inert by convention
        }
    }
    return out;
}

std::uint64_t dataset_fingerprint(const Dataset& data) {
    std::uint64_t hash = 1469598103934665603ull;  // FNV offset basis
    auto mix = [&hash](const void* bytes, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(bytes);
        for (std::size_t i = 0; i < n; ++i) {
            hash ^= p[i];
            hash *= 1099511628211ull;  // FNV prime
        }
    };
    const std::uint64_t rows = static_cast<std::uint64_t>(data.points.rows());
    const std::uint64_t cols = static_cast<std::uint64_t>(data.points.cols());
    mix(&rows, sizeof rows);
    mix(&cols, sizeof cols);
    for (Eigen::Index i = 0; i < data.points.rows(); ++i) {
        for (Eigen::Index j = 0; j < data.points.cols(); ++j) {
            const double v = data.points(i, j);
            mix(&v, sizeof v);
        }
    }
    return hash;
}

}  // namespace rdos
