#include "modgsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace modgsp {

namespace {

void fnv1a_mix(std::uint64_t& h, std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
        h ^= (v >> (8 * byte)) & 0xffu;
        h *= 0x100000001b3ull;
    }
}

} // namespace

Graph::Graph(int node_count, std::vector<Edge> edges, std::vector<std::string> node_ids)
    : n_(node_count), edges_(std::move(edges)), ids_(std::move(node_ids)) {
    if (n_ <= 0) throw data_error("graph must have at least one node");

    for (auto& e : edges_) {
        if (e.u == e.v)
            throw data_error("self-loop on node index " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw data_error("edge endpoint out of range: (" + std::to_string(e.u) +
                             ", " + std::to_string(e.v) + ")");
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw data_error("edge weight must be finite and > 0");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    // merge duplicates by summing weights
    std::size_t out = 0;
    for (std::size_t in = 0; in < edges_.size(); ++in) {
        if (out > 0 && edges_[out - 1].u == edges_[in].u && edges_[out - 1].v == edges_[in].v) {
            edges_[out - 1].w += edges_[in].w;
        } else {
            edges_[out++] = edges_[in];
        }
    }
    edges_.resize(out);

    if (ids_.empty()) {
        ids_.reserve(n_);
        for (int i = 0; i < n_; ++i) ids_.push_back(std::to_string(i));
    }
    if (static_cast<int>(ids_.size()) != n_)
        throw data_error("node id list length does not match node count");
    id_index_.reserve(ids_.size());
    for (int i = 0; i < n_; ++i) {
        if (!id_index_.emplace(ids_[i], i).second)
            throw data_error("duplicate node id '" + ids_[i] + "'");
    }

    degree_ = Eigen::VectorXd::Zero(n_);
    std::vector<int> adj_count(n_, 0);
    for (const auto& e : edges_) {
        degree_[e.u] += e.w;
        degree_[e.v] += e.w;
        ++adj_count[e.u];
        ++adj_count[e.v];
    }
    total_weight_ = degree_.sum() / 2.0;
    if (!(total_weight_ > 0.0))
        throw data_error("total edge weight M must be > 0");

    row_ptr_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) row_ptr_[i + 1] = row_ptr_[i] + adj_count[i];
    col_idx_.resize(row_ptr_[n_]);
    csr_weight_.resize(row_ptr_[n_]);
    std::vector<std::int64_t> cursor(row_ptr_.begin(), row_ptr_.end() - 1);
    for (const auto& e : edges_) {
        col_idx_[cursor[e.u]] = e.v;
        csr_weight_[cursor[e.u]++] = e.w;
        col_idx_[cursor[e.v]] = e.u;
        csr_weight_[cursor[e.v]++] = e.w;
    }
}

Signal Graph::adjacency_times(const Signal& x) const {
    check_signal(x);
    Signal y = Signal::Zero(n_);
    for (int i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::int64_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
            acc += csr_weight_[p] * x[col_idx_[p]];
        y[i] = acc;
    }
    return y;
}

int Graph::index_of(const std::string& id) const {
    auto it = id_index_.find(id);
    return it == id_index_.end() ? -1 : it->second;
}

std::uint64_t Graph::structural_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    fnv1a_mix(h, static_cast<std::uint64_t>(n_));
    for (const auto& e : edges_) {
        fnv1a_mix(h, static_cast<std::uint64_t>(e.u));
        fnv1a_mix(h, static_cast<std::uint64_t>(e.v));
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(e.w));
        std::memcpy(&bits, &e.w, sizeof(bits));
        fnv1a_mix(h, bits);
    }
    return h;
}

std::size_t Graph::memory_footprint() const {
    return edges_.capacity() * sizeof(Edge) +
           row_ptr_.capacity() * sizeof(std::int64_t) +
           col_idx_.capacity() * sizeof(int) +
           csr_weight_.capacity() * sizeof(double) +
           static_cast<std::size_t>(degree_.size()) * sizeof(double);
}

void Graph::check_signal(const Signal& x) const {
    if (x.size() != n_)
        throw data_error("signal length " + std::to_string(x.size()) +
                         " does not match graph node count " + std::to_string(n_));
}

int GraphBuilder::add_node(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, idx);
    return idx;
}

void GraphBuilder::add_edge(const std::string& u, const std::string& v, double w) {
    if (u == v) throw data_error("self-loop on node '" + u + "'");
    int iu = add_node(u);
    int iv = add_node(v);
    edges_.push_back({iu, iv, w});
}

Graph GraphBuilder::build() const {
    std::vector<Edge> edges = edges_;
    Graph g(static_cast<int>(ids_.size()), std::move(edges), ids_);
    if (!binarize_) return g;
    std::vector<Edge> unit = g.edges();
    for (auto& e : unit) e.w = 1.0;
    return Graph(g.node_count(), std::move(unit), g.node_ids());
}

} // namespace modgsp
