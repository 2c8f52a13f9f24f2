#include "modgsp/shift_operator.hpp"

namespace modgsp {

std::string_view kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Adjacency: return "adjacency";
        case OperatorKind::Laplacian: return "laplacian";
        case OperatorKind::Modularity: return "modularity";
        case OperatorKind::ModularityPlus: return "modularity_plus";
        case OperatorKind::ModularityMinus: return "modularity_minus";
    }
    return "unknown";
}

OperatorKind kind_from_name(std::string_view name) {
    if (name == "adjacency") return OperatorKind::Adjacency;
    if (name == "laplacian") return OperatorKind::Laplacian;
    if (name == "modularity") return OperatorKind::Modularity;
    if (name == "modularity_plus" || name == "qplus") return OperatorKind::ModularityPlus;
    if (name == "modularity_minus" || name == "qminus") return OperatorKind::ModularityMinus;
    throw config_error("unknown operator kind '" + std::string(name) + "'");
}

ShiftOperator::ShiftOperator(OperatorKind kind, const Graph& g,
                             std::optional<double> shift_constant)
    : kind_(kind), graph_(&g) {
    const bool shifted =
        kind == OperatorKind::ModularityPlus || kind == OperatorKind::ModularityMinus;
    if (shifted && !shift_constant)
        throw config_error(std::string(kind_name(kind)) +
                           " requires the extreme modularity eigenvalue as shift constant");
    if (shift_constant) shift_constant_ = *shift_constant;
}

Signal modularity_times(const Graph& g, const Signal& x) {
    const Eigen::VectorXd& k = g.degrees();
    double scale = k.dot(x) / (2.0 * g.total_weight());
    return g.adjacency_times(x) - scale * k;
}

Signal ShiftOperator::apply(const Signal& x) const {
    const Graph& g = *graph_;
    g.check_signal(x);
    switch (kind_) {
        case OperatorKind::Adjacency:
            return g.adjacency_times(x);
        case OperatorKind::Laplacian:
            return g.degrees().cwiseProduct(x) - g.adjacency_times(x);
        case OperatorKind::Modularity:
            return modularity_times(g, x);
        case OperatorKind::ModularityPlus:
            return shift_constant_ * x - modularity_times(g, x);
        case OperatorKind::ModularityMinus:
            return modularity_times(g, x) - shift_constant_ * x;
    }
    throw config_error("invalid operator kind");
}

double ShiftOperator::quadratic_form(const Signal& x) const {
    return x.dot(apply(x));
}

double null_model_edge(const Graph& g, int i, int j) {
    if (i < 0 || j < 0 || i >= g.node_count() || j >= g.node_count())
        throw data_error("node index out of range");
    return g.degree(i) * g.degree(j) / (2.0 * g.total_weight());
}

double modularity_index(const Graph& g, const Signal& signs) {
    g.check_signal(signs);
    for (int i = 0; i < signs.size(); ++i)
        if (signs[i] != 1.0 && signs[i] != -1.0)
            throw data_error("partition vector entry " + std::to_string(i) +
                             " is not +/-1");
    return 0.25 * signs.dot(modularity_times(g, signs));
}

} // namespace modgsp
