#pragma once

#include <vector>

#include "modgsp/spectral.hpp"

namespace modgsp {

/// Bandlimiting projector B = U Sigma U^T restricted to the eigen-index set
/// `band` (0-based, in the basis ordering). B is idempotent.
class BandlimitingOperator {
public:
    BandlimitingOperator(const SpectralBasis& basis, std::vector<int> band);

    const SpectralBasis& basis() const { return *basis_; }
    const std::vector<int>& band() const { return band_; }
    int bandwidth() const { return static_cast<int>(band_.size()); }

    /// B x.
    Signal apply(const Signal& x) const;

    /// n x |F| matrix of the selected eigenvectors U_F.
    const Eigen::MatrixXd& band_vectors() const { return u_band_; }

private:
    const SpectralBasis* basis_;
    std::vector<int> band_;
    Eigen::MatrixXd u_band_;
};

/// First `bandwidth` eigen-indices in basis order (lowest Laplacian
/// frequencies / highest modularity eigenvalues).
std::vector<int> leading_band(const SpectralBasis& basis, int bandwidth);

/// Sampling set with its selection scores. nodes are ordered by rank
/// (descending column norm of Sigma U^T, ties by lower node index).
struct SamplingSet {
    std::vector<int> nodes;
    Eigen::VectorXd column_norms; // norm per rank, aligned with nodes
};

/// Optimal-sampling selection: the m nodes whose columns of Sigma U^T have
/// the largest l2 norms, which maximizes ||Sigma U^T R||_F exactly.
SamplingSet select_sampling_set(const BandlimitingOperator& projector, int m);

/// x_s = R y: keeps sampled entries, zeroes the rest.
Signal sample(const SamplingSet& samples, const Signal& y, int node_count);

struct ReconstructionResult {
    Signal signal;
    int effective_rank = 0;
    bool underdetermined = false; // effective rank below the bandwidth
};

/// Least-squares reconstruction x_rec = V Psi^+ V^T x_s, where (V, Psi)
/// eigendecompose B R B. Eigenvalues <= rank_tol * max(Psi) are treated as
/// zero. Rank deficiency yields a flagged (not failed) result.
ReconstructionResult reconstruct(const BandlimitingOperator& projector,
                                 const SamplingSet& samples, const Signal& sampled,
                                 double rank_tol = 1e-10);

} // namespace modgsp
