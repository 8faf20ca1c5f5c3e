#ifndef RDOS_NEIGHBORS_HPP
#define RDOS_NEIGHBORS_HPP

#include <Eigen/Dense>

#include <vector>

#include "rdos/core.hpp"

// KNN graph construction and the per-point neighbor sets derived from it:
// outbound edges give the k nearest neighbors, inbound edges the reverse
// neighbors, and inbound edges of the nearest neighbors the shared
// neighbors. Distance ties always break toward the smaller point index, so
// the brute-force and k-d tree builders produce identical graphs.

namespace rdos {

struct KnnGraph {
    int k = 0;
    Eigen::MatrixXi neighbors;              // N x k, ascending (distance, index)
    Eigen::MatrixXd distances;              // N x k, aligned with neighbors
    std::vector<std::vector<int>> inbound;  // inbound[v] = {u : v in row u}, ascending

    Eigen::Index size() const { return neighbors.rows(); }
    // distance from p to its k-th nearest neighbor
    double kth_distance(int p) const { return distances(p, k - 1); }
};

// Per-point neighbor sets. All four are ascending index sets excluding the
// point itself; extended is the union of the other three and is never
// smaller than k.
struct NeighborSets {
    std::vector<int> knn;
    std::vector<int> rnn;
    std::vector<int> snn;
    std::vector<int> extended;
};

// O(N^2) reference builder.
KnnGraph build_knn_graph_bruteforce(const Dataset& data, int k);

// k-d tree builder; identical output to the brute-force builder on every
// input, including tied distances and duplicate points.
KnnGraph build_knn_graph_kdtree(const Dataset& data, int k);

// Points that count p among their own k nearest neighbors. May be empty.
std::vector<int> reverse_neighbors(const KnnGraph& graph, int p);

// Points sharing at least one nearest neighbor with p: the union of the
// inbound edges of p's nearest neighbors, minus p. May overlap knn/rnn.
std::vector<int> shared_neighbors(const KnnGraph& graph, int p);

NeighborSets extended_neighborhood(const KnnGraph& graph, int p);

// All extended neighborhoods at once (parallel across points).
std::vector<NeighborSets> extended_neighborhoods(const KnnGraph& graph);

}  // namespace rdos

#endif  // RDOS_NEIGHBORS_HPP
