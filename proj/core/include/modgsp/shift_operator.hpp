#pragma once

#include <optional>
#include <string_view>

#include "modgsp/graph.hpp"

namespace modgsp {

enum class OperatorKind {
    Adjacency,
    Laplacian,
    Modularity,
    ModularityPlus,
    ModularityMinus,
};

std::string_view kind_name(OperatorKind kind);
OperatorKind kind_from_name(std::string_view name);

/// Symmetric shift operator on graph signals: A, L = D - A,
/// Q = A - k k^T / 2M, or the spectrum-shifted positive semi-definite
/// variants Q+ = c I - Q and Q- = Q - c I.
///
/// Application is matrix-free: Q x costs one sparse mat-vec plus the
/// rank-one null-model term evaluated as (k^T x / 2M) k, O(M' + n), and a
/// dense n x n matrix is never formed. The +/- kinds require the exact
/// extreme modularity eigenvalue as shift constant (see
/// spectral::extreme_eigenvalues).
class ShiftOperator {
public:
    ShiftOperator(OperatorKind kind, const Graph& g,
                  std::optional<double> shift_constant = std::nullopt);

    static ShiftOperator adjacency(const Graph& g) { return {OperatorKind::Adjacency, g}; }
    static ShiftOperator laplacian(const Graph& g) { return {OperatorKind::Laplacian, g}; }
    static ShiftOperator modularity(const Graph& g) { return {OperatorKind::Modularity, g}; }
    static ShiftOperator modularity_plus(const Graph& g, double lambda_max) {
        return {OperatorKind::ModularityPlus, g, lambda_max};
    }
    static ShiftOperator modularity_minus(const Graph& g, double lambda_min) {
        return {OperatorKind::ModularityMinus, g, lambda_min};
    }

    OperatorKind kind() const { return kind_; }
    const Graph& graph() const { return *graph_; }
    double shift_constant() const { return shift_constant_; }

    /// S x, O(M' + n).
    Signal apply(const Signal& x) const;

    /// x^T S x, evaluated through apply().
    double quadratic_form(const Signal& x) const;

private:
    OperatorKind kind_;
    const Graph* graph_;
    double shift_constant_ = 0.0;
};

/// Null-model edge probability z_ij = k_i k_j / 2M.
double null_model_edge(const Graph& g, int i, int j);

/// Modularity index of a two-way split encoded by a +/-1 sign vector:
/// (1/4) s^T Q s. Throws data_error if any entry is not exactly +/-1.
double modularity_index(const Graph& g, const Signal& signs);

/// Q x without constructing a ShiftOperator: A x - (k^T x / 2M) k.
Signal modularity_times(const Graph& g, const Signal& x);

} // namespace modgsp
