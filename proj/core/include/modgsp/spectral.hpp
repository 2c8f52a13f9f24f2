#pragma once

#include <filesystem>
#include <utility>

#include "modgsp/shift_operator.hpp"

namespace modgsp {

enum class SpectralOrdering { Ascending, Descending };

/// Full orthonormal eigenbasis of a shift operator.
///
/// Ordering convention: Laplacian ascending (frequencies), Adjacency and
/// Modularity descending (most modular component first), ModularityPlus /
/// ModularityMinus ascending in the transformed eigenvalues (they share
/// eigenvectors with Q up to degenerate subspaces). Eigenvector signs are
/// fixed so each column's largest-magnitude entry is positive, ties broken
/// by lowest index.
struct SpectralBasis {
    Eigen::MatrixXd vectors;  // columns u_1..u_n
    Eigen::VectorXd values;   // matching eigenvalues, ordered per convention
    OperatorKind kind = OperatorKind::Laplacian;
    SpectralOrdering ordering = SpectralOrdering::Ascending;

    int size() const { return static_cast<int>(values.size()); }
};

SpectralOrdering ordering_for(OperatorKind kind);

/// Dense symmetric eigendecomposition of the shift operator. Throws
/// numerical_error (carrying the residual norm) if the solver fails.
SpectralBasis decompose(const ShiftOperator& op);

/// (lambda_min, lambda_max), consistent with decompose().
std::pair<double, double> extreme_eigenvalues(const ShiftOperator& op);

/// Graph Fourier transform xhat = U^T x and its inverse x = U xhat.
Eigen::VectorXd gft(const SpectralBasis& basis, const Signal& x);
Signal igft(const SpectralBasis& basis, const Eigen::VectorXd& coefficients);

/// Relative tolerance separating "strictly positive/negative" eigenvalues
/// from the numerically-zero band: 1e-9 * max |lambda|.
double spectral_zero_tolerance(const SpectralBasis& basis);

/// Spectrum export/caching. Eigenvalues go to CSV (`index,eigenvalue`,
/// 17 significant digits); eigenvectors to a binary column-major file with
/// a small header (magic, version, operator kind, n).
void write_spectrum_csv(const std::filesystem::path& path, const SpectralBasis& basis);
void write_eigenvectors(const std::filesystem::path& path, const SpectralBasis& basis);
SpectralBasis read_basis(const std::filesystem::path& csv_path,
                         const std::filesystem::path& eigenvectors_path);

} // namespace modgsp
