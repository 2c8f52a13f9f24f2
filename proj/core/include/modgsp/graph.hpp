#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "modgsp/errors.hpp"

namespace modgsp {

/// One undirected edge, stored once with u < v and weight > 0.
struct Edge {
    int u;
    int v;
    double w;
};

/// A graph signal is a real value per node, indexed by dense node index.
using Signal = Eigen::VectorXd;

/// Undirected weighted graph without self-loops.
///
/// Nodes carry external string ids (file formats speak ids, numerics speak
/// dense 0..n-1 indices). Storage is an edge list plus a CSR adjacency for
/// matrix-free operator application; both are O(M' + n). Immutable after
/// construction and safe to share across threads.
class Graph {
public:
    /// Builds from an edge list. Endpoints are normalized to u < v and
    /// duplicate edges are summed into one weight. Throws data_error on
    /// self-loops, non-positive weights, out-of-range endpoints, or a
    /// graph with zero total edge weight.
    Graph(int node_count, std::vector<Edge> edges,
          std::vector<std::string> node_ids = {});

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    /// Canonical edge list: sorted by (u, v), u < v, duplicates merged.
    const std::vector<Edge>& edges() const { return edges_; }

    double degree(int i) const { return degree_[i]; }
    const Eigen::VectorXd& degrees() const { return degree_; }

    /// Total edge weight M = sum_i k_i / 2, strictly positive.
    double total_weight() const { return total_weight_; }

    /// y = A x in O(M' + n). Never materializes a dense matrix.
    Signal adjacency_times(const Signal& x) const;

    const std::string& node_id(int i) const { return ids_[i]; }
    const std::vector<std::string>& node_ids() const { return ids_; }

    /// Dense index of an external id, or -1 if unknown.
    int index_of(const std::string& id) const;

    /// Deterministic 64-bit hash of (n, canonical edge list); used as a
    /// cache key for spectral decompositions.
    std::uint64_t structural_hash() const;

    /// Bytes held by edge/CSR/degree storage (allocation accounting for
    /// the O(M' + n) memory contract).
    std::size_t memory_footprint() const;

    void check_signal(const Signal& x) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> row_ptr_;
    std::vector<int> col_idx_;
    std::vector<double> csr_weight_;
    Eigen::VectorXd degree_;
    double total_weight_ = 0.0;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> id_index_;
};

/// Incremental construction from external ids. Nodes are indexed in order
/// of first appearance; duplicate edges accumulate.
class GraphBuilder {
public:
    int add_node(const std::string& id);
    void add_edge(const std::string& u, const std::string& v, double w = 1.0);

    /// Force all final edge weights to 1 regardless of multiplicity.
    GraphBuilder& binarize(bool on = true) {
        binarize_ = on;
        return *this;
    }

    int node_count() const { return static_cast<int>(ids_.size()); }

    Graph build() const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
    bool binarize_ = false;
};

} // namespace modgsp
