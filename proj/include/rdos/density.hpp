#ifndef RDOS_DENSITY_HPP
#define RDOS_DENSITY_HPP

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rdos/core.hpp"
#include "rdos/neighbors.hpp"

// Gaussian kernel and the local kernel density estimate over a point's
// extended neighborhood.
//
// Two exponent conventions are supported. `paper` divides the squared
// distance by 2h, which combined with the 1/h^d scale is not a
// unit-integral kernel for h != 1; `standard` divides by 2h^2 and
// integrates to one for every h. Reproduction runs use `paper`.

namespace rdos {

enum class BandwidthConvention { paper, standard };

struct KernelSpec {
    double width = 0.01;  // h
    int dimension = 1;    // d
    BandwidthConvention convention = BandwidthConvention::paper;
};

inline void validate_kernel_spec(const KernelSpec& spec) {
    if (!(spec.width > 0.0)) throw std::invalid_argument("kernel width must be positive");
    if (spec.dimension < 1) throw std::invalid_argument("kernel dimension must be >= 1");
}

// Kernel value for a displacement with the given squared norm:
// (2*pi)^(-d/2) * exp(-sq/(2h)) or exp(-sq/(2h^2)) depending on the
// convention. Subnormal results clamp to 0; the self term of the density
// sum keeps every density strictly positive regardless.
inline double gaussian_kernel_sq(double squared_norm, const KernelSpec& spec) {
    const double denom = spec.convention == BandwidthConvention::paper
                             ? 2.0 * spec.width
                             : 2.0 * spec.width * spec.width;
    const double value = std::pow(2.0 * M_PI, -0.5 * spec.dimension) *
                         std::exp(-squared_norm / denom);
    return value < std::numeric_limits<double>::min() ? 0.0 : value;
}

// Same kernel evaluated on an explicit displacement vector X - X_i.
template <typename Derived>
double gaussian_kernel(const Eigen::MatrixBase<Derived>& displacement,
                       const KernelSpec& spec) {
    validate_kernel_spec(spec);
    if (displacement.size() != spec.dimension) {
        throw std::invalid_argument("kernel displacement has wrong dimension");
    }
    return gaussian_kernel_sq(displacement.derived().squaredNorm(), spec);
}

// Density estimate at point p: the average of 1/h^d-scaled kernel values
// over p's extended neighborhood plus p itself. Strictly positive; the
// self term contributes at least K(0) / ((|S|+1) h^d).
double local_density(const Dataset& data, const NeighborSets& sets, int p,
                     const KernelSpec& spec);

// Densities for all points given their neighbor sets (parallel).
Eigen::VectorXd local_densities(const Dataset& data,
                                const std::vector<NeighborSets>& sets,
                                const KernelSpec& spec);

struct KernelMoments {
    double integral;       // ∫ K(u) du
    double first_moment;   // largest-magnitude component of ∫ u K(u) du
    double second_moment;  // ∫ |u|^2 K(u) du
};

// Numerically integrates the implemented kernel as a function of the
// scaled argument u = (X - X_i)/h, with Simpson's rule on a tensor grid of
// `resolution` nodes per axis (resolution must be odd and >= 3). Supports
// d <= 3; used by tests to check the kernel conditions.
KernelMoments kernel_moment_check(const KernelSpec& spec, int resolution);

}  // namespace rdos

#endif  // RDOS_DENSITY_HPP
