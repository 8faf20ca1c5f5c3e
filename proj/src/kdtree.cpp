#include "rdos/kdtree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rdos {

KdTree::KdTree(const Eigen::MatrixXd& points, int leaf_size)
    : points_(points), leaf_size_(leaf_size < 1 ? 1 : leaf_size) {
    order_.resize(static_cast<std::size_t>(points_.rows()));
    std::iota(order_.begin(), order_.end(), 0);
    nodes_.reserve(order_.empty() ? 1 : 2 * order_.size() / leaf_size_ + 2);
    if (!order_.empty()) root_ = build(0, static_cast<int>(order_.size()));
}

int KdTree::build(int begin, int end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    if (end - begin <= leaf_size_) {
        nodes_[id].begin = begin;
        nodes_[id].end = end;
        return id;
    }

    // widest-spread dimension over this node's points
    const Eigen::Index dims = points_.cols();
    int split_dim = 0;
    double best_spread = -1.0;
    for (Eigen::Index dim = 0; dim < dims; ++dim) {
        double lo = points_(order_[begin], dim);
        double hi = lo;
        for (int i = begin + 1; i < end; ++i) {
            const double v = points_(order_[i], dim);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo > best_spread) {
            best_spread = hi - lo;
            split_dim = static_cast<int>(dim);
        }
    }

    const int mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid,
                     order_.begin() + end, [&](int a, int b) {
                         return points_(a, split_dim) < points_(b, split_dim);
                     });

    nodes_[id].split_dim = split_dim;
    nodes_[id].split_value = points_(order_[mid], split_dim);
    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

void KdTree::search(int node, const Eigen::RowVectorXd& q, int skip, int k,
                    std::vector<Candidate>& heap) const {
    const Node& n = nodes_[node];
    if (n.split_dim < 0) {
        for (int i = n.begin; i < n.end; ++i) {
            const int idx = order_[i];
            if (idx == skip) continue;
            const double sq = (points_.row(idx) - q).squaredNorm();
            const Candidate cand{sq, idx};
            if (static_cast<int>(heap.size()) < k) {
                heap.push_back(cand);
                std::push_heap(heap.begin(), heap.end());
            } else if (cand < heap.front()) {
                std::pop_heap(heap.begin(), heap.end());
                heap.back() = cand;
                std::push_heap(heap.begin(), heap.end());
            }
        }
        return;
    }

    const double delta = q(n.split_dim) - n.split_value;
    const int near = delta < 0.0 ? n.left : n.right;
    const int far = delta < 0.0 ? n.right : n.left;
    search(near, q, skip, k, heap);
    // Visit the far side unless every point there is strictly worse than the
    // current k-th candidate. Equality must still descend: a tied distance
    // with a smaller index wins under the tie rule.
    if (static_cast<int>(heap.size()) < k || delta * delta <= heap.front().sq_dist) {
        search(far, q, skip, k, heap);
    }
}

void KdTree::knn_excluding_self(int query, int k, std::vector<int>& neighbors,
                                std::vector<double>& distances) const {
    const int n = static_cast<int>(points_.rows());
    if (query < 0 || query >= n) {
        throw std::invalid_argument("kdtree query index out of range");
    }
    if (k < 1 || k > n - 1) {
        throw std::invalid_argument("kdtree k must be in [1, N-1]");
    }

    std::vector<Candidate> heap;
    heap.reserve(static_cast<std::size_t>(k));
    const Eigen::RowVectorXd q = points_.row(query);
    search(root_, q, query, k, heap);

    std::sort(heap.begin(), heap.end());
    neighbors.resize(heap.size());
    distances.resize(heap.size());
    for (std::size_t i = 0; i < heap.size(); ++i) {
        neighbors[i] = heap[i].index;
        distances[i] = std::sqrt(heap[i].sq_dist);
    }
}

}  // namespace rdos
