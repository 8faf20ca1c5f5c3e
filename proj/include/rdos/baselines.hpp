#ifndef RDOS_BASELINES_HPP
#define RDOS_BASELINES_HPP

#include <Eigen/Dense>

#include "rdos/core.hpp"
#include "rdos/neighbors.hpp"

// Comparison detectors sharing one KNN graph. Every scorer returns one
// finite value per point with larger = more outlying; ODIN and MNN count
// neighbors (larger = safer), so their counts pass through 1/(count+1).
// AUC comparisons are unaffected by that monotone flip.

namespace rdos {

enum class BaselineMethod { odin, lof, inflo, mnn };

// In-degree score: 1 / (|reverse neighbors| + 1).
Eigen::VectorXd odin_scores(const KnnGraph& graph);

// Local outlier factor with reach-dist(p,o) = max(kdist(o), d(p,o)) and
// lrd = k / sum of reach-dists over the k nearest neighbors. Points whose
// reach-dist sum is zero (all k neighbors are duplicates of duplicates)
// get lrd capped at 1e12 and a LOF of exactly 1.
Eigen::VectorXd lof_scores(const Dataset& data, const KnnGraph& graph);

// Influenced outlierness: density 1/kdist averaged over the influence
// space KNN ∪ RNN, relative to the point's own. Duplicate points with zero
// kdist cap the density at 1e12. Empty RNN falls back to the KNN set.
Eigen::VectorXd inflo_scores(const Dataset& data, const KnnGraph& graph);

// Mutual-neighbor score: 1 / (#{o : o in KNN(p) and p in KNN(o)} + 1).
Eigen::VectorXd mnn_scores(const Dataset& data, const KnnGraph& graph);

}  // namespace rdos

#endif  // RDOS_BASELINES_HPP
