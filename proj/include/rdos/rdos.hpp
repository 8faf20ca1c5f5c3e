#ifndef RDOS_RDOS_HPP
#define RDOS_RDOS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "rdos/core.hpp"
#include "rdos/density.hpp"
#include "rdos/neighbors.hpp"

// The relative density-based outlier score: for each point, the ratio of
// its neighbors' average local density to its own. Scores well above 1
// mark points sitting outside dense regions.

namespace rdos {

struct ScoreReport {
    Eigen::VectorXd density;  // local density per point
    Eigen::VectorXd rdos;     // score per point, > 0
    std::vector<int> rank;    // rank[i]: 1-based, 1 = most outlying
    std::vector<int> order;   // order[r]: point index holding rank r+1

    // run provenance
    int k = 0;
    double h = 0.0;
    BandwidthConvention convention = BandwidthConvention::paper;
    std::uint64_t dataset_fingerprint = 0;
};

// Score ratios from precomputed densities and neighbor sets. Multiplying
// all densities by one positive constant leaves every ratio unchanged.
Eigen::VectorXd rdos_from_densities(const Eigen::VectorXd& densities,
                                    const std::vector<NeighborSets>& sets);

// Two passes over the graph: densities for every point first, then the
// ratio for every point reusing them. Ranks order by descending score,
// ties toward the smaller index.
ScoreReport rdos_scores(const Dataset& data, const KnnGraph& graph,
                        const KernelSpec& spec);

// First n point indices in rank order. n must be in [1, N].
std::vector<int> top_n(const ScoreReport& report, int n);

// flag[i] = score strictly above tau. tau must exceed 1; inlier scores
// concentrate at 1, so smaller thresholds flag everything.
std::vector<bool> threshold_detect(const ScoreReport& report, double tau);

}  // namespace rdos

#endif  // RDOS_RDOS_HPP
