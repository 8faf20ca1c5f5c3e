#ifndef RDOS_METHODS_HPP
#define RDOS_METHODS_HPP

#include <Eigen/Dense>

#include <optional>
#include <string_view>

#include "rdos/core.hpp"
#include "rdos/density.hpp"
#include "rdos/neighbors.hpp"

namespace rdos {

// Every detector selectable from the CLI and the evaluation harness.
enum class Method { rdos, odin, lof, inflo, mnn };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method method);

// One outlierness value per point, larger = more outlying. The kernel spec
// only matters for Method::rdos.
Eigen::VectorXd method_scores(const Dataset& data, const KnnGraph& graph,
                              Method method, const KernelSpec& spec);

}  // namespace rdos

#endif  // RDOS_METHODS_HPP
