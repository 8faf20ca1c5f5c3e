#ifndef RDOS_CORE_HPP
#define RDOS_CORE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Shared domain types and distance/normalization primitives. Everything is
// double precision; all containers are immutable after construction by
// convention (no member mutates, free functions return new values).

namespace rdos {

enum class Label : std::uint8_t { inlier = 0, outlier = 1 };

// A batch of d-dimensional points, one per row. Labels are empty when the
// data is unlabeled, otherwise one per row. Feature names are optional and
// used only for CSV headers.
struct Dataset {
    Eigen::MatrixXd points;                  // N x d
    std::vector<Label> labels;               // empty or size N
    std::vector<std::string> feature_names;  // empty or size d

    Eigen::Index size() const { return points.rows(); }
    Eigen::Index dimension() const { return points.cols(); }
    bool has_labels() const { return !labels.empty(); }
    auto point(Eigen::Index i) const { return points.row(i); }
};

// Throws std::invalid_argument unless: N >= 2, d >= 1, all coordinates
// finite, and label/name lengths match when present.
void validate_dataset(const Dataset& data);

// Run parameters shared by the scorers. tau and top_n select the detection
// mode and are optional; k and h always apply.
struct Params {
    int k = 21;
    double h = 0.01;
    std::optional<double> tau;
    std::optional<int> top_n;
};

// Throws std::invalid_argument when k is outside [1, N-1], h <= 0,
// tau <= 1, or top_n outside [1, N].
void validate_params(const Params& params, Eigen::Index n_points);

template <typename DerivedA, typename DerivedB>
double euclidean_distance(const Eigen::MatrixBase<DerivedA>& a,
                          const Eigen::MatrixBase<DerivedB>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("euclidean_distance: dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
    return std::sqrt((a.derived().template cast<double>().array() -
                      b.derived().template cast<double>().array())
                         .square()
                         .sum());
}

// Per-feature min-max rescale onto [0, 1]. Constant features map to 0
// everywhere. Labels and feature names carry over unchanged.
Dataset minmax_normalize(const Dataset& data);

// FNV-1a over the shape and raw coordinate bytes; identifies the exact
// input a ScoreReport was computed from.
std::uint64_t dataset_fingerprint(const Dataset& data);

}  // namespace rdos

#endif  // RDOS_CORE_HPP
