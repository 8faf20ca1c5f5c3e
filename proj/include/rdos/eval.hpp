#ifndef RDOS_EVAL_HPP
#define RDOS_EVAL_HPP

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "rdos/core.hpp"
#include "rdos/methods.hpp"

// ROC/AUC evaluation of outlier scorers on labeled data. Outliers are the
// positive class and larger scores are more positive.

namespace rdos {

struct RocCurve {
    // (false alarm rate, true positive rate), starting at (0,0) and ending
    // at (1,1), both coordinates nondecreasing
    std::vector<std::pair<double, double>> points;
    double auc = 0.0;  // trapezoidal area of `points`
};

// Sweeps thresholds over the distinct score values; all points tied at one
// value step together, which makes the area equal to the rank statistic
// with half credit for ties. Throws std::invalid_argument unless both
// classes are present.
RocCurve roc_auc(const Eigen::VectorXd& scores, const std::vector<Label>& labels);

struct SweepRow {
    int k = 0;
    double auc = 0.0;
};

// One AUC per requested k, rebuilding the graph each time. Rows come back
// in the order the k values were given.
std::vector<SweepRow> auc_vs_k_sweep(const Dataset& data, Method method,
                                     const std::vector<int>& k_values,
                                     const KernelSpec& spec);

}  // namespace rdos

#endif  // RDOS_EVAL_HPP
