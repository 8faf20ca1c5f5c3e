#ifndef RDOS_KDTREE_HPP
#define RDOS_KDTREE_HPP

#include <Eigen/Dense>

#include <vector>

namespace rdos {

// Exact k-d tree over the rows of a point matrix. Median split on the
// widest-spread dimension, leaves hold up to leaf_size points. Queries are
// exact and deterministic: candidates are ordered by (distance, index), so
// tied distances resolve to the smaller row index, matching the brute-force
// neighbor builder bit for bit.
//
// The tree keeps a reference to the matrix; the caller keeps it alive.
class KdTree {
public:
    explicit KdTree(const Eigen::MatrixXd& points, int leaf_size = 16);

    // k nearest rows to row `query`, excluding `query` itself. Results are
    // sorted ascending by (distance, index). k must be in [1, N-1].
    void knn_excluding_self(int query, int k, std::vector<int>& neighbors,
                            std::vector<double>& distances) const;

private:
    struct Node {
        int left = -1;        // child node ids, -1 for leaves
        int right = -1;
        int begin = 0;        // index range into order_ (leaves only)
        int end = 0;
        int split_dim = -1;
        double split_value = 0.0;
    };

    struct Candidate {
        double sq_dist;
        int index;
        // max-heap keyed on "worse": larger distance first, larger index on ties
        bool operator<(const Candidate& other) const {
            return sq_dist < other.sq_dist ||
                   (sq_dist == other.sq_dist && index < other.index);
        }
    };

    int build(int begin, int end);
    void search(int node, const Eigen::RowVectorXd& q, int skip, int k,
                std::vector<Candidate>& heap) const;

    const Eigen::MatrixXd& points_;
    int leaf_size_;
    std::vector<int> order_;   // row indices, partitioned by the tree
    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace rdos

#endif  // RDOS_KDTREE_HPP
