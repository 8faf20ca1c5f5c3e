#include "rdos/eval.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rdos {

RocCurve roc_auc(const Eigen::VectorXd& scores, const std::vector<Label>& labels) {
    const Eigen::Index n = scores.size();
    if (labels.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("roc_auc: one label per score required");
    }

    Eigen::Index positives = 0;
    for (const Label label : labels) positives += label == Label::outlier;
    const Eigen::Index negatives = n - positives;
    if (positives == 0 || negatives == 0) {
        throw std::invalid_argument("roc_auc: both classes must be present; AUC is undefined otherwise");
    }

    std::vector<int> by_score(static_cast<std::size_t>(n));
    std::iota(by_score.begin(), by_score.end(), 0);
    std::sort(by_score.begin(), by_score.end(),
              [&](int a, int b) { return scores(a) > scores(b); });

    RocCurve curve;
    curve.points.reserve(static_cast<std::size_t>(n) + 1);
    curve.points.emplace_back(0.0, 0.0);

    double auc = 0.0;
    Eigen::Index tp = 0;
    Eigen::Index fp = 0;
    std::size_t i = 0;
    while (i < by_score.size()) {
        // advance over the whole block of equal scores as one threshold step
        std::size_t j = i;
        while (j < by_score.size() && scores(by_score[j]) == scores(by_score[i])) ++j;
        for (std::size_t t = i; t < j; ++t) {
            if (labels[static_cast<std::size_t>(by_score[t])] == Label::outlier) {
                ++tp;
            } else {
                ++fp;
            }
        }
        const auto& prev = curve.points.back();
        const double fpr = static_cast<double>(fp) / static_cast<double>(negatives);
        const double tpr = static_cast<double>(tp) / static_cast<double>(positives);
        auc += (fpr - prev.first) * (tpr + prev.second) / 2.0;
        curve.points.emplace_back(fpr, tpr);
        i = j;
    }
    curve.auc = auc;
    return curve;
}

std::vector<SweepRow> auc_vs_k_sweep(const Dataset& data, Method method,
                                     const std::vector<int>& k_values,
                                     const KernelSpec& spec) {
    if (!data.has_labels()) {
        throw std::invalid_argument("auc_vs_k_sweep: labeled data required");
    }
    std::vector<SweepRow> rows;
    rows.reserve(k_values.size());
    for (const int k : k_values) {
        const KnnGraph graph = build_knn_graph_kdtree(data, k);
        const Eigen::VectorXd scores = method_scores(data, graph, method, spec);
        rows.push_back({k, roc_auc(scores, data.labels).auc});
    }
    return rows;
}

}  // namespace rdos
