#include "rdos/neighbors.hpp"

#include <algorithm>
#include <stdexcept>

#include "rdos/kdtree.hpp"
#include "rdos/parallel.hpp"

namespace rdos {

namespace {

void check_k(const Dataset& data, int k) {
    const Eigen::Index n = data.size();
    if (n < 2) throw std::invalid_argument("knn graph needs at least 2 points");
    if (k < 1 || k > n - 1) {
        throw std::invalid_argument("k must be in [1, N-1]; got k=" + std::to_string(k) +
                                    " with N=" + std::to_string(n));
    }
}

void check_vertex(const KnnGraph& graph, int p) {
    if (p < 0 || p >= graph.size()) {
        throw std::invalid_argument("vertex index out of range: " + std::to_string(p));
    }
}

std::vector<std::vector<int>> collect_inbound(const Eigen::MatrixXi& neighbors) {
    std::vector<std::vector<int>> inbound(static_cast<std::size_t>(neighbors.rows()));
    for (Eigen::Index u = 0; u < neighbors.rows(); ++u) {
        for (Eigen::Index j = 0; j < neighbors.cols(); ++j) {
            inbound[static_cast<std::size_t>(neighbors(u, j))].push_back(
                static_cast<int>(u));
        }
    }
    for (auto& edges : inbound) std::sort(edges.begin(), edges.end());
    return inbound;
}

std::vector<int> sorted_unique(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace

KnnGraph build_knn_graph_bruteforce(const Dataset& data, int k) {
    check_k(data, k);
    const Eigen::Index n = data.size();

    KnnGraph graph;
    graph.k = k;
    graph.neighbors.resize(n, k);
    graph.distances.resize(n, k);

    parallel::parallel_for(n, [&](Eigen::Index p) {
        std::vector<std::pair<double, int>> cand;
        cand.reserve(static_cast<std::size_t>(n - 1));
        for (Eigen::Index q = 0; q < n; ++q) {
            if (q == p) continue;
            cand.emplace_back((data.points.row(q) - data.points.row(p)).squaredNorm(),
                              static_cast<int>(q));
        }
        std::partial_sort(cand.begin(), cand.begin() + k, cand.end());
        for (int j = 0; j < k; ++j) {
            graph.neighbors(p, j) = cand[static_cast<std::size_t>(j)].second;
            graph.distances(p, j) = std::sqrt(cand[static_cast<std::size_t>(j)].first);
        }
    });

    graph.inbound = collect_inbound(graph.neighbors);
    return graph;
}

KnnGraph build_knn_graph_kdtree(const Dataset& data, int k) {
    check_k(data, k);
    const Eigen::Index n = data.size();
    const KdTree tree(data.points);

    KnnGraph graph;
    graph.k = k;
    graph.neighbors.resize(n, k);
    graph.distances.resize(n, k);

    parallel::parallel_for(n, [&](Eigen::Index p) {
        std::vector<int> idx;
        std::vector<double> dist;
        tree.knn_excluding_self(static_cast<int>(p), k, idx, dist);
        for (int j = 0; j < k; ++j) {
            graph.neighbors(p, j) = idx[static_cast<std::size_t>(j)];
            graph.distances(p, j) = dist[static_cast<std::size_t>(j)];
        }
    });

    graph.inbound = collect_inbound(graph.neighbors);
    return graph;
}

std::vector<int> reverse_neighbors(const KnnGraph& graph, int p) {
    check_vertex(graph, p);
    return graph.inbound[static_cast<std::size_t>(p)];
}

std::vector<int> shared_neighbors(const KnnGraph& graph, int p) {
    check_vertex(graph, p);
    std::vector<int> shared;
    for (Eigen::Index j = 0; j < graph.neighbors.cols(); ++j) {
        const auto& senders = graph.inbound[static_cast<std::size_t>(graph.neighbors(p, j))];
        shared.insert(shared.end(), senders.begin(), senders.end());
    }
    shared = sorted_unique(std::move(shared));
    shared.erase(std::remove(shared.begin(), shared.end(), p), shared.end());
    return shared;
}

NeighborSets extended_neighborhood(const KnnGraph& graph, int p) {
    check_vertex(graph, p);
    NeighborSets sets;
    sets.knn.assign(graph.neighbors.row(p).begin(), graph.neighbors.row(p).end());
    std::sort(sets.knn.begin(), sets.knn.end());
    sets.rnn = reverse_neighbors(graph, p);
    sets.snn = shared_neighbors(graph, p);

    sets.extended.reserve(sets.knn.size() + sets.rnn.size() + sets.snn.size());
    sets.extended.insert(sets.extended.end(), sets.knn.begin(), sets.knn.end());
    sets.extended.insert(sets.extended.end(), sets.rnn.begin(), sets.rnn.end());
    sets.extended.insert(sets.extended.end(), sets.snn.begin(), sets.snn.end());
    sets.extended = sorted_unique(std::move(sets.extended));
    return sets;
}

std::vector<NeighborSets> extended_neighborhoods(const KnnGraph& graph) {
    std::vector<NeighborSets> all(static_cast<std::size_t>(graph.size()));
    parallel::parallel_for(graph.size(), [&](Eigen::Index p) {
        all[static_cast<std::size_t>(p)] =
            extended_neighborhood(graph, static_cast<int>(p));
    });
    return all;
}

}  // namespace rdos
