#ifndef RDOS_THEORY_HPP
#define RDOS_THEORY_HPP

#include <Eigen/Dense>

#include <cstdint>

#include "rdos/density.hpp"

// Executable forms of the score's analytic guarantees: the closed-form
// false-alarm bound for a point whose neighbors are uniform in a ball, and
// Monte Carlo validators for the unit-expectation and bound statements.

namespace rdos {

struct BoundInput {
    double gamma = 2.0;  // score threshold, > 1
    int s_size = 20;     // neighborhood size |S|
    int dimension = 2;   // ambient dimension d
    double width = 0.1;  // kernel width h
    double radius = 1.0; // neighborhood ball radius r
};

void validate_bound_input(const BoundInput& in);

// Volume pi^(n/2) r^n / Gamma(n/2 + 1). The bound uses n = d - 1.
double ball_volume(double r, int n);

// Closed-form upper bound on P[score > gamma]:
//   exp(-2 (g-1)^2 (s+1)^2 (2 pi)^d h^(2d) / (s (2s+g+1)^2 V^2)),
// clamped to 1. Monotonically decreasing in gamma, increasing in V.
double false_alarm_bound(const BoundInput& in);

struct Theorem1Stats {
    double mean_rdos = 0.0;
    double std_rdos = 0.0;
    Eigen::Index interior_count = 0;
};

// Samples n_points uniformly on the unit square, runs the full scoring
// pipeline, and reports the score mean/stddev over interior points. A point
// is interior when its k-distance is below 10% of the domain width and its
// k-neighborhood ball lies inside the square, so boundary truncation does
// not contaminate the local-uniformity premise. Requires n_points >= 50 k
// and spec.dimension == 2.
Theorem1Stats validate_theorem1(int n_points, int k, const KernelSpec& spec,
                                std::uint64_t seed);

struct Theorem2Result {
    double empirical_rate = 0.0;
    double bound = 1.0;
};

// Per trial: the query point sits at the origin with s_size neighbors
// sampled uniformly in the radius-r ball; densities come from the pairwise
// kernel sums over all s+1 points and the trial counts when the resulting
// score exceeds gamma. Uses the paper exponent convention, matching the
// bound's derivation. Deterministic for a fixed seed independent of thread
// count (trials split over a fixed partition grid). Requires trials >= 1000.
Theorem2Result validate_theorem2(int trials, const BoundInput& in, std::uint64_t seed);

}  // namespace rdos

#endif  // RDOS_THEORY_HPP
