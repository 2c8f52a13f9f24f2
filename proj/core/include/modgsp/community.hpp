#pragma once

#include <vector>

#include "modgsp/spectral.hpp"

namespace modgsp {

/// Node -> community labeling with contiguous ids 0..C-1, every community
/// non-empty.
class Partition {
public:
    explicit Partition(std::vector<int> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    int community_count() const { return count_; }
    int label(int node) const { return labels_[node]; }
    const std::vector<int>& labels() const { return labels_; }

    /// Nodes of each community, by community id.
    const std::vector<std::vector<int>>& members() const { return members_; }

    /// Two-way partition from a +/-1 sign vector (+1 -> 0, -1 -> 1).
    static Partition from_signs(const Signal& signs);

private:
    std::vector<int> labels_;
    std::vector<std::vector<int>> members_;
    int count_ = 0;
};

/// Graph cut size of a +/-1 split: (1/4) s^T L s, equal to the number
/// (total weight) of edges crossing the cut.
double cut_size(const Graph& g, const Signal& signs);

/// Sign pattern of the relevant extreme eigenvector: the leading modularity
/// eigenvector for a Modularity basis, or the Fiedler vector (smallest
/// non-zero eigenvalue) for a Laplacian basis. Zero entries map to +1.
Signal spectral_bipartition(const SpectralBasis& basis);

/// Within/outside-community z-scored degrees. A node's scores are
/// standardized over its own community; where a community's degree standard
/// deviation is zero the scores are undefined and flagged.
struct NodeRoleScores {
    Eigen::VectorXd z_in;
    Eigen::VectorXd z_out;
    std::vector<std::uint8_t> z_in_defined;
    std::vector<std::uint8_t> z_out_defined;
};

NodeRoleScores z_scores(const Graph& g, const Partition& partition);

} // namespace modgsp
