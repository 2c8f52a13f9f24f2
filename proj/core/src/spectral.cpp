#include "modgsp/spectral.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

namespace modgsp {

namespace {

constexpr char kEigenvectorMagic[8] = {'M', 'G', 'S', 'P', 'E', 'V', 'C', '1'};

// Dense materialization used by the eigensolver only; operator application
// stays matrix-free.
Eigen::MatrixXd dense_matrix(const ShiftOperator& op) {
    const Graph& g = op.graph();
    const int n = g.node_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        a(e.u, e.v) = e.w;
        a(e.v, e.u) = e.w;
    }
    const Eigen::VectorXd& k = g.degrees();
    switch (op.kind()) {
        case OperatorKind::Adjacency:
            return a;
        case OperatorKind::Laplacian: {
            Eigen::MatrixXd l = -a;
            l.diagonal() += k;
            return l;
        }
        case OperatorKind::Modularity:
            return a - (k * k.transpose()) / (2.0 * g.total_weight());
        case OperatorKind::ModularityPlus: {
            Eigen::MatrixXd q = a - (k * k.transpose()) / (2.0 * g.total_weight());
            Eigen::MatrixXd m = -q;
            m.diagonal().array() += op.shift_constant();
            return m;
        }
        case OperatorKind::ModularityMinus: {
            Eigen::MatrixXd q = a - (k * k.transpose()) / (2.0 * g.total_weight());
            q.diagonal().array() -= op.shift_constant();
            return q;
        }
    }
    throw config_error("invalid operator kind");
}

void fix_column_signs(Eigen::MatrixXd& u) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        Eigen::Index best = 0;
        double best_mag = std::abs(u(0, c));
        for (Eigen::Index r = 1; r < u.rows(); ++r) {
            double mag = std::abs(u(r, c));
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        if (u(best, c) < 0.0) u.col(c) = -u.col(c);
    }
}

} // namespace

SpectralOrdering ordering_for(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Adjacency:
        case OperatorKind::Modularity:
            return SpectralOrdering::Descending;
        default:
            return SpectralOrdering::Ascending;
    }
}

SpectralBasis decompose(const ShiftOperator& op) {
    Eigen::MatrixXd s = dense_matrix(op);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success) {
        double residual = (s * solver.eigenvectors() -
                           solver.eigenvectors() * solver.eigenvalues().asDiagonal())
                              .norm();
        std::ostringstream msg;
        msg << "eigendecomposition of " << kind_name(op.kind())
            << " failed to converge (residual " << residual << ")";
        throw numerical_error(msg.str());
    }

    SpectralBasis basis;
    basis.kind = op.kind();
    basis.ordering = ordering_for(op.kind());

    const Eigen::VectorXd& vals = solver.eigenvalues(); // ascending from Eigen
    const int n = static_cast<int>(vals.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (basis.ordering == SpectralOrdering::Descending) {
        // stable sort keeps solver order inside degenerate eigenvalue groups
        std::stable_sort(perm.begin(), perm.end(),
                         [&](int a, int b) { return vals[a] > vals[b]; });
    }

    basis.values.resize(n);
    basis.vectors.resize(n, n);
    for (int c = 0; c < n; ++c) {
        basis.values[c] = vals[perm[c]];
        basis.vectors.col(c) = solver.eigenvectors().col(perm[c]);
    }
    fix_column_signs(basis.vectors);
    return basis;
}

std::pair<double, double> extreme_eigenvalues(const ShiftOperator& op) {
    SpectralBasis basis = decompose(op);
    return {basis.values.minCoeff(), basis.values.maxCoeff()};
}

Eigen::VectorXd gft(const SpectralBasis& basis, const Signal& x) {
    if (x.size() != basis.vectors.rows())
        throw data_error("signal length does not match spectral basis");
    return basis.vectors.transpose() * x;
}

Signal igft(const SpectralBasis& basis, const Eigen::VectorXd& coefficients) {
    if (coefficients.size() != basis.vectors.cols())
        throw data_error("coefficient length does not match spectral basis");
    return basis.vectors * coefficients;
}

double spectral_zero_tolerance(const SpectralBasis& basis) {
    return 1e-9 * basis.values.cwiseAbs().maxCoeff();
}

void write_spectrum_csv(const std::filesystem::path& path, const SpectralBasis& basis) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open '" + path.string() + "' for writing");
    out << "index,eigenvalue\n" << std::setprecision(17);
    for (int i = 0; i < basis.size(); ++i)
        out << (i + 1) << "," << basis.values[i] << "\n";
    if (!out) throw data_error("write failed for '" + path.string() + "'");
}

void write_eigenvectors(const std::filesystem::path& path, const SpectralBasis& basis) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open '" + path.string() + "' for writing");
    out.write(kEigenvectorMagic, sizeof(kEigenvectorMagic));
    std::uint32_t version = 1;
    std::int32_t kind = static_cast<std::int32_t>(basis.kind);
    std::int64_t n = basis.size();
    out.write(reinterpret_cast<const char*>(&version), sizeof(version));
    out.write(reinterpret_cast<const char*>(&kind), sizeof(kind));
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(basis.vectors.data()),
              static_cast<std::streamsize>(sizeof(double) * basis.vectors.size()));
    if (!out) throw data_error("write failed for '" + path.string() + "'");
}

SpectralBasis read_basis(const std::filesystem::path& csv_path,
                         const std::filesystem::path& eigenvectors_path) {
    std::ifstream bin(eigenvectors_path, std::ios::binary);
    if (!bin) throw data_error("cannot open '" + eigenvectors_path.string() + "'");
    char magic[8];
    bin.read(magic, sizeof(magic));
    if (!bin || std::memcmp(magic, kEigenvectorMagic, sizeof(magic)) != 0)
        throw data_error("'" + eigenvectors_path.string() + "' is not an eigenvector file");
    std::uint32_t version = 0;
    std::int32_t kind = 0;
    std::int64_t n = 0;
    bin.read(reinterpret_cast<char*>(&version), sizeof(version));
    bin.read(reinterpret_cast<char*>(&kind), sizeof(kind));
    bin.read(reinterpret_cast<char*>(&n), sizeof(n));
    if (!bin || version != 1 || n <= 0)
        throw data_error("bad eigenvector file header in '" + eigenvectors_path.string() + "'");

    SpectralBasis basis;
    basis.kind = static_cast<OperatorKind>(kind);
    basis.ordering = ordering_for(basis.kind);
    basis.vectors.resize(n, n);
    bin.read(reinterpret_cast<char*>(basis.vectors.data()),
             static_cast<std::streamsize>(sizeof(double) * n * n));
    if (!bin) throw data_error("truncated eigenvector file '" + eigenvectors_path.string() + "'");

    std::ifstream csv(csv_path);
    if (!csv) throw data_error("cannot open '" + csv_path.string() + "'");
    std::string line;
    std::getline(csv, line); // header
    basis.values.resize(n);
    std::int64_t count = 0;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos || count >= n)
            throw data_error("malformed spectrum CSV '" + csv_path.string() + "'");
        basis.values[count++] = std::stod(line.substr(comma + 1));
    }
    if (count != n)
        throw data_error("spectrum CSV '" + csv_path.string() + "' has " +
                         std::to_string(count) + " rows, expected " + std::to_string(n));
    return basis;
}

} // namespace modgsp
