#include "rdos/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "rdos/parallel.hpp"

namespace rdos {

namespace {

constexpr double kDensityCap = 1e12;  // stands in for 1/0 on duplicate stacks

void check_graph(const Dataset& data, const KnnGraph& graph) {
    if (graph.size() != data.size()) {
        throw std::invalid_argument("baseline scorer: graph was built over different data");
    }
}

}  // namespace

Eigen::VectorXd odin_scores(const KnnGraph& graph) {
    Eigen::VectorXd scores(graph.size());
    for (Eigen::Index p = 0; p < graph.size(); ++p) {
        scores(p) = 1.0 / (static_cast<double>(graph.inbound[static_cast<std::size_t>(p)].size()) + 1.0);
    }
    return scores;
}

Eigen::VectorXd lof_scores(const Dataset& data, const KnnGraph& graph) {
    check_graph(data, graph);
    const Eigen::Index n = graph.size();
    const int k = graph.k;

    Eigen::VectorXd lrd(n);
    parallel::parallel_for(n, [&](Eigen::Index p) {
        double reach_sum = 0.0;
        for (int j = 0; j < k; ++j) {
            const int o = graph.neighbors(p, j);
            reach_sum += std::max(graph.kth_distance(o), graph.distances(p, j));
        }
        lrd(p) = reach_sum > 0.0 ? static_cast<double>(k) / reach_sum : kDensityCap;
    });

    Eigen::VectorXd scores(n);
    parallel::parallel_for(n, [&](Eigen::Index p) {
        if (lrd(p) >= kDensityCap) {
            scores(p) = 1.0;  // duplicate stack: as dense as its own neighborhood
            return;
        }
        double neighbor_lrd = 0.0;
        for (int j = 0; j < k; ++j) neighbor_lrd += lrd(graph.neighbors(p, j));
        scores(p) = neighbor_lrd / (static_cast<double>(k) * lrd(p));
    });
    return scores;
}

Eigen::VectorXd inflo_scores(const Dataset& data, const KnnGraph& graph) {
    check_graph(data, graph);
    const Eigen::Index n = graph.size();

    Eigen::VectorXd den(n);
    for (Eigen::Index p = 0; p < n; ++p) {
        const double kdist = graph.kth_distance(static_cast<int>(p));
        den(p) = kdist > 0.0 ? std::min(1.0 / kdist, kDensityCap) : kDensityCap;
    }

    Eigen::VectorXd scores(n);
    parallel::parallel_for(n, [&](Eigen::Index p) {
        // influence space: nearest neighbors plus reverse neighbors
        std::vector<int> space(graph.neighbors.row(p).begin(), graph.neighbors.row(p).end());
        const auto& rnn = graph.inbound[static_cast<std::size_t>(p)];
        space.insert(space.end(), rnn.begin(), rnn.end());
        std::sort(space.begin(), space.end());
        space.erase(std::unique(space.begin(), space.end()), space.end());

        double sum = 0.0;
        for (const int o : space) sum += den(o);
        scores(p) = sum / (static_cast<double>(space.size()) * den(p));
    });
    return scores;
}

Eigen::VectorXd mnn_scores(const Dataset& data, const KnnGraph& graph) {
    check_graph(data, graph);
    const Eigen::Index n = graph.size();
    Eigen::VectorXd scores(n);
    parallel::parallel_for(n, [&](Eigen::Index p) {
        int mutual = 0;
        for (int j = 0; j < graph.k; ++j) {
            const int o = graph.neighbors(p, j);
            const auto& back = graph.inbound[static_cast<std::size_t>(p)];
            // o's outbound edges include p exactly when p is in o's knn row;
            // inbound[p] already collects those senders
            if (std::binary_search(back.begin(), back.end(), o)) ++mutual;
        }
        scores(p) = 1.0 / (static_cast<double>(mutual) + 1.0);
    });
    return scores;
}

}  // namespace rdos
