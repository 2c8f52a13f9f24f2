#include "modgsp/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace modgsp {

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw data_error("partition has no nodes");
    int max_label = *std::max_element(labels_.begin(), labels_.end());
    int min_label = *std::min_element(labels_.begin(), labels_.end());
    if (min_label < 0) throw data_error("partition labels must be non-negative");
    count_ = max_label + 1;
    members_.resize(count_);
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        members_[labels_[i]].push_back(i);
    for (int c = 0; c < count_; ++c)
        if (members_[c].empty())
            throw data_error("community " + std::to_string(c) +
                             " is empty; labels must be contiguous 0..C-1");
}

Partition Partition::from_signs(const Signal& signs) {
    std::vector<int> labels(signs.size());
    for (int i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1.0 && signs[i] != -1.0)
            throw data_error("sign vector entry " + std::to_string(i) + " is not +/-1");
        labels[i] = signs[i] > 0 ? 0 : 1;
    }
    return Partition(std::move(labels));
}

double cut_size(const Graph& g, const Signal& signs) {
    g.check_signal(signs);
    for (int i = 0; i < signs.size(); ++i)
        if (signs[i] != 1.0 && signs[i] != -1.0)
            throw data_error("sign vector entry " + std::to_string(i) + " is not +/-1");
    Signal ls = g.degrees().cwiseProduct(signs) - g.adjacency_times(signs);
    return 0.25 * signs.dot(ls);
}

Signal spectral_bipartition(const SpectralBasis& basis) {
    int column = -1;
    if (basis.kind == OperatorKind::Modularity) {
        column = 0; // descending order, leading eigenvector first
    } else if (basis.kind == OperatorKind::Laplacian) {
        double tol = spectral_zero_tolerance(basis);
        for (int i = 0; i < basis.size(); ++i) {
            if (basis.values[i] > tol) {
                column = i;
                break;
            }
        }
        if (column < 0)
            throw config_error("Laplacian basis has no non-zero eigenvalue; "
                               "cannot form a Fiedler bipartition");
    } else {
        throw config_error("spectral bipartition needs a Modularity or Laplacian basis");
    }
    Signal s(basis.size());
    for (int i = 0; i < basis.size(); ++i)
        s[i] = basis.vectors(i, column) < 0.0 ? -1.0 : 1.0;
    return s;
}

NodeRoleScores z_scores(const Graph& g, const Partition& partition) {
    const int n = g.node_count();
    if (partition.size() != n)
        throw data_error("partition does not cover the graph");

    Eigen::VectorXd internal = Eigen::VectorXd::Zero(n);
    for (const Edge& e : g.edges()) {
        if (partition.label(e.u) == partition.label(e.v)) {
            internal[e.u] += e.w;
            internal[e.v] += e.w;
        }
    }
    Eigen::VectorXd external = g.degrees() - internal;

    NodeRoleScores scores;
    scores.z_in = Eigen::VectorXd::Zero(n);
    scores.z_out = Eigen::VectorXd::Zero(n);
    scores.z_in_defined.assign(n, 0);
    scores.z_out_defined.assign(n, 0);

    auto standardize = [&](const Eigen::VectorXd& deg, Eigen::VectorXd& z,
                           std::vector<std::uint8_t>& defined) {
        for (const auto& community : partition.members()) {
            double mean = 0.0;
            for (int i : community) mean += deg[i];
            mean /= static_cast<double>(community.size());
            double var = 0.0;
            for (int i : community) var += (deg[i] - mean) * (deg[i] - mean);
            var /= static_cast<double>(community.size()); // population
            double sd = std::sqrt(var);
            for (int i : community) {
                if (sd > 0.0) {
                    z[i] = (deg[i] - mean) / sd;
                    defined[i] = 1;
                } else {
                    z[i] = std::numeric_limits<double>::quiet_NaN();
                }
            }
        }
    };
    standardize(internal, scores.z_in, scores.z_in_defined);
    standardize(external, scores.z_out, scores.z_out_defined);
    return scores;
}

} // namespace modgsp
