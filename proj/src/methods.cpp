#include "rdos/methods.hpp"

#include <stdexcept>

#include "rdos/baselines.hpp"
#include "rdos/rdos.hpp"

namespace rdos {

std::optional<Method> parse_method(std::string_view name) {
    if (name == "rdos") return Method::rdos;
    if (name == "odin") return Method::odin;
    if (name == "lof") return Method::lof;
    if (name == "inflo") return Method::inflo;
    if (name == "mnn") return Method::mnn;
    return std::nullopt;
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::rdos: return "rdos";
        case Method::odin: return "odin";
        case Method::lof: return "lof";
        case Method::inflo: return "inflo";
        case Method::mnn: return "mnn";
    }
    throw std::logic_error("unknown method");
}

Eigen::VectorXd method_scores(const Dataset& data, const KnnGraph& graph,
                              Method method, const KernelSpec& spec) {
    switch (method) {
        case Method::rdos: return rdos_scores(data, graph, spec).rdos;
        case Method::odin: return odin_scores(graph);
        case Method::lof: return lof_scores(data, graph);
        case Method::inflo: return inflo_scores(data, graph);
        case Method::mnn: return mnn_scores(data, graph);
    }
    throw std::logic_error("unknown method");
}

}  // namespace rdos
