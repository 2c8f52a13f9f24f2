#pragma once

#include <string>
#include <vector>

#include "modgsp/community.hpp"
#include "modgsp/spectral.hpp"

namespace modgsp {

enum class WindowKind { Modular, AntiModular, Smooth, NonSmooth, ExplicitRange };

/// An eigen-index passband, 1-based inclusive, in the basis ordering.
/// For ExplicitRange, abs_weighted selects |lambda|-normalized weights
/// instead of a flat window.
struct PassbandSpec {
    WindowKind kind = WindowKind::ExplicitRange;
    int first = 1;
    int last = 1;
    bool abs_weighted = false;
};

/// Band of the named filters, resolved against the matching basis:
/// Modular -> all strictly positive modularity eigenvalues, AntiModular ->
/// all strictly negative ones (tolerance spectral_zero_tolerance). Throws
/// data_error if the band is empty, config_error on a basis/kind mismatch.
PassbandSpec resolve_passband(const SpectralBasis& basis, WindowKind kind);

/// Smooth / NonSmooth bands on a Laplacian basis, matched in size to the
/// Modular / AntiModular bands of the same graph's modularity basis.
PassbandSpec resolve_passband(const SpectralBasis& laplacian_basis, WindowKind kind,
                              const SpectralBasis& modularity_basis);

/// Spectral window weights. Inside the band, |lambda_i| / sum_band |lambda|
/// for Modular/AntiModular/NonSmooth (and ExplicitRange abs_weighted),
/// 1 - |lambda_i| / sum_band |lambda| for Smooth, 1 for ExplicitRange flat;
/// zero outside the band.
Eigen::VectorXd make_window(const SpectralBasis& basis, const PassbandSpec& band);

/// x_out = U diag(window) U^T x.
Signal apply_window(const SpectralBasis& basis, const Eigen::VectorXd& window,
                    const Signal& x);

/// Vertex-domain polynomial filter p(S) = sum_k h_k S^k, evaluated with K
/// operator applications (Horner); never materializes p(S).
struct PolynomialFilter {
    std::vector<double> coefficients; // h_0 .. h_K
};

Signal apply_polynomial(const PolynomialFilter& filter, const ShiftOperator& op,
                        const Signal& x);

/// Mean over communities of the population standard deviation of x inside
/// each community.
double within_community_variability(const Signal& x, const Partition& partition);

/// Parses the CLI filter specification:
///   modular | antimodular | smooth | nonsmooth |
///   band:N1:N2:flat | band:N1:N2:absweighted
PassbandSpec parse_filter_spec(const std::string& spec);

std::string window_kind_name(WindowKind kind);

} // namespace modgsp
