#include "modgsp/filters.hpp"

#include <cmath>

namespace modgsp {

namespace {

int count_above(const SpectralBasis& basis, double tol) {
    int count = 0;
    for (int i = 0; i < basis.size(); ++i)
        if (basis.values[i] > tol) ++count;
    return count;
}

int count_below(const SpectralBasis& basis, double tol) {
    int count = 0;
    for (int i = 0; i < basis.size(); ++i)
        if (basis.values[i] < -tol) ++count;
    return count;
}

PassbandSpec band_or_throw(WindowKind kind, int first, int last, int n) {
    if (first > last || first < 1 || last > n)
        throw data_error("empty or out-of-range passband for " + window_kind_name(kind) +
                         " filter");
    return {kind, first, last, false};
}

} // namespace

std::string window_kind_name(WindowKind kind) {
    switch (kind) {
        case WindowKind::Modular: return "modular";
        case WindowKind::AntiModular: return "antimodular";
        case WindowKind::Smooth: return "smooth";
        case WindowKind::NonSmooth: return "nonsmooth";
        case WindowKind::ExplicitRange: return "band";
    }
    return "unknown";
}

PassbandSpec resolve_passband(const SpectralBasis& basis, WindowKind kind) {
    const double tol = spectral_zero_tolerance(basis);
    const int n = basis.size();
    switch (kind) {
        case WindowKind::Modular: {
            if (basis.kind != OperatorKind::Modularity)
                throw config_error("modular passband needs a modularity basis");
            // descending order: positive eigenvalues lead
            return band_or_throw(kind, 1, count_above(basis, tol), n);
        }
        case WindowKind::AntiModular: {
            if (basis.kind != OperatorKind::Modularity)
                throw config_error("antimodular passband needs a modularity basis");
            int count = count_below(basis, tol);
            return band_or_throw(kind, n - count + 1, count > 0 ? n : 0, n);
        }
        default:
            throw config_error("smooth/nonsmooth passbands need the modularity basis "
                               "for size matching; use the three-argument overload");
    }
}

PassbandSpec resolve_passband(const SpectralBasis& laplacian_basis, WindowKind kind,
                              const SpectralBasis& modularity_basis) {
    if (laplacian_basis.kind != OperatorKind::Laplacian)
        throw config_error("smooth/nonsmooth passbands need a Laplacian basis");
    if (modularity_basis.kind != OperatorKind::Modularity)
        throw config_error("band size matching needs a modularity basis");
    const double tol = spectral_zero_tolerance(modularity_basis);
    const int n = laplacian_basis.size();
    switch (kind) {
        case WindowKind::Smooth: {
            int count = count_above(modularity_basis, tol);
            return band_or_throw(kind, 1, count, n);
        }
        case WindowKind::NonSmooth: {
            int count = count_below(modularity_basis, tol);
            return band_or_throw(kind, n - count + 1, count > 0 ? n : 0, n);
        }
        default:
            throw config_error("three-argument resolve_passband is for smooth/nonsmooth");
    }
}

Eigen::VectorXd make_window(const SpectralBasis& basis, const PassbandSpec& band) {
    const int n = basis.size();
    if (band.first < 1 || band.last > n || band.first > band.last)
        throw data_error("invalid passband [" + std::to_string(band.first) + ", " +
                         std::to_string(band.last) + "] for basis of size " +
                         std::to_string(n));

    Eigen::VectorXd window = Eigen::VectorXd::Zero(n);
    const bool flat = band.kind == WindowKind::ExplicitRange && !band.abs_weighted;
    if (flat) {
        for (int i = band.first - 1; i < band.last; ++i) window[i] = 1.0;
        return window;
    }

    double abs_sum = 0.0;
    for (int i = band.first - 1; i < band.last; ++i) abs_sum += std::abs(basis.values[i]);
    if (abs_sum <= 0.0)
        throw data_error("passband eigenvalues are all zero; |lambda|-weighted window "
                         "is undefined");
    for (int i = band.first - 1; i < band.last; ++i) {
        double w = std::abs(basis.values[i]) / abs_sum;
        window[i] = band.kind == WindowKind::Smooth ? 1.0 - w : w;
    }
    return window;
}

Signal apply_window(const SpectralBasis& basis, const Eigen::VectorXd& window,
                    const Signal& x) {
    if (window.size() != basis.size())
        throw data_error("window length does not match spectral basis");
    Eigen::VectorXd coefficients = gft(basis, x);
    return igft(basis, window.cwiseProduct(coefficients));
}

Signal apply_polynomial(const PolynomialFilter& filter, const ShiftOperator& op,
                        const Signal& x) {
    if (filter.coefficients.empty())
        throw config_error("polynomial filter needs at least one coefficient");
    if (static_cast<int>(filter.coefficients.size()) > op.graph().node_count())
        throw config_error("polynomial degree exceeds n - 1");
    op.graph().check_signal(x);
    // Horner: K applications of S
    const auto& h = filter.coefficients;
    Signal result = h.back() * x;
    for (int k = static_cast<int>(h.size()) - 2; k >= 0; --k)
        result = op.apply(result) + h[k] * x;
    return result;
}

double within_community_variability(const Signal& x, const Partition& partition) {
    if (x.size() != partition.size())
        throw data_error("signal length does not match partition");
    double total = 0.0;
    for (const auto& community : partition.members()) {
        double mean = 0.0;
        for (int i : community) mean += x[i];
        mean /= static_cast<double>(community.size());
        double var = 0.0;
        for (int i : community) var += (x[i] - mean) * (x[i] - mean);
        var /= static_cast<double>(community.size());
        total += std::sqrt(var);
    }
    return total / static_cast<double>(partition.community_count());
}

PassbandSpec parse_filter_spec(const std::string& spec) {
    if (spec == "modular") return {WindowKind::Modular, 0, 0, false};
    if (spec == "antimodular") return {WindowKind::AntiModular, 0, 0, false};
    if (spec == "smooth") return {WindowKind::Smooth, 0, 0, false};
    if (spec == "nonsmooth") return {WindowKind::NonSmooth, 0, 0, false};
    if (spec.rfind("band:", 0) == 0) {
        auto rest = spec.substr(5);
        auto c1 = rest.find(':');
        auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw config_error("band filter spec must be band:N1:N2:flat|absweighted");
        int first = 0, last = 0;
        try {
            first = std::stoi(rest.substr(0, c1));
            last = std::stoi(rest.substr(c1 + 1, c2 - c1 - 1));
        } catch (const std::exception&) {
            throw config_error("band filter spec has non-numeric indices: " + spec);
        }
        std::string weighting = rest.substr(c2 + 1);
        if (weighting != "flat" && weighting != "absweighted")
            throw config_error("band weighting must be 'flat' or 'absweighted'");
        return {WindowKind::ExplicitRange, first, last, weighting == "absweighted"};
    }
    throw config_error("unknown filter spec '" + spec + "'");
}

} // namespace modgsp
