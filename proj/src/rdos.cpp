#include "rdos/rdos.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rdos/parallel.hpp"

namespace rdos {

Eigen::VectorXd rdos_from_densities(const Eigen::VectorXd& densities,
                                    const std::vector<NeighborSets>& sets) {
    if (sets.size() != static_cast<std::size_t>(densities.size())) {
        throw std::invalid_argument("rdos_from_densities: one neighbor set per density");
    }
    Eigen::VectorXd scores(densities.size());
    parallel::parallel_for(densities.size(), [&](Eigen::Index p) {
        const auto& extended = sets[static_cast<std::size_t>(p)].extended;
        double sum = 0.0;
        for (const int q : extended) sum += densities(q);
        scores(p) = sum / (static_cast<double>(extended.size()) * densities(p));
    });
    return scores;
}

ScoreReport rdos_scores(const Dataset& data, const KnnGraph& graph,
                        const KernelSpec& spec) {
    if (graph.size() != data.size()) {
        throw std::invalid_argument("rdos_scores: graph was built over different data");
    }

    ScoreReport report;
    report.k = graph.k;
    report.h = spec.width;
    report.convention = spec.convention;
    report.dataset_fingerprint = dataset_fingerprint(data);

    const std::vector<NeighborSets> sets = extended_neighborhoods(graph);
    report.density = local_densities(data, sets, spec);
    report.rdos = rdos_from_densities(report.density, sets);

    report.order.resize(static_cast<std::size_t>(data.size()));
    std::iota(report.order.begin(), report.order.end(), 0);
    std::sort(report.order.begin(), report.order.end(), [&](int a, int b) {
        if (report.rdos(a) != report.rdos(b)) return report.rdos(a) > report.rdos(b);
        return a < b;
    });
    report.rank.resize(report.order.size());
    for (std::size_t r = 0; r < report.order.size(); ++r) {
        report.rank[static_cast<std::size_t>(report.order[r])] = static_cast<int>(r) + 1;
    }
    return report;
}

std::vector<int> top_n(const ScoreReport& report, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > report.order.size()) {
        throw std::invalid_argument("top_n: n must be in [1, N]");
    }
    return {report.order.begin(), report.order.begin() + n};
}

std::vector<bool> threshold_detect(const ScoreReport& report, double tau) {
    if (!(tau > 1.0)) {
        throw std::invalid_argument(
            "tau must exceed 1: RDOS concentrates at 1 for points drawn from the same "
            "distribution as their neighbors, so any threshold <= 1 flags everything");
    }
    std::vector<bool> flags(static_cast<std::size_t>(report.rdos.size()));
    for (Eigen::Index i = 0; i < report.rdos.size(); ++i) {
        flags[static_cast<std::size_t>(i)] = report.rdos(i) > tau;
    }
    return flags;
}

}  // namespace rdos
