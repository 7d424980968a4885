#include "revival/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace revival {

Complex hs_inner(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner: dimension mismatch");
    return (a.matrix.conjugate().array() * b.matrix.array()).sum() / static_cast<double>(a.dim());
}

double hs_norm(const DenseOperator& a) {
    return a.matrix.norm() / std::sqrt(static_cast<double>(a.dim()));
}

StateVector evolve_state(const SpectralDecomposition& spec, const StateVector& psi, double t) {
    if (spec.dim() != psi.dim()) throw std::invalid_argument("evolve_state: dimension mismatch");
    if (!std::isfinite(t)) throw std::invalid_argument("evolve_state: non-finite time");
    const Vector coeffs = spec.eigenvectors.adjoint() * psi.amplitudes;
    const Vector rotated = spec.propagator_phases(t).cwiseProduct(coeffs);
    return {spec.eigenvectors * rotated, psi.n_qubits};
}

DenseOperator evolve_operator(const SpectralDecomposition& spec, const DenseOperator& o, double t) {
    if (spec.dim() != o.dim()) throw std::invalid_argument("evolve_operator: dimension mismatch");
    if (!std::isfinite(t)) throw std::invalid_argument("evolve_operator: non-finite time");
    // O(t) = (V e^{iEt}) (V^dag O V) (V e^{iEt})^dag
    const Vector ph = spec.propagator_phases(-t);
    const Matrix w = spec.eigenvectors * ph.asDiagonal();
    const Matrix in_eigenbasis = spec.eigenvectors.adjoint() * o.matrix * spec.eigenvectors;
    return {w * in_eigenbasis * w.adjoint(), o.n_qubits};
}

DensityMatrix evolve_density(const SpectralDecomposition& spec, const DensityMatrix& rho, double t) {
    if (spec.dim() != rho.dim()) throw std::invalid_argument("evolve_density: dimension mismatch");
    const Vector ph = spec.propagator_phases(t);
    const Matrix w = spec.eigenvectors * ph.asDiagonal();
    const Matrix in_eigenbasis = spec.eigenvectors.adjoint() * rho.matrix * spec.eigenvectors;
    return {w * in_eigenbasis * w.adjoint(), rho.n_qubits};
}

DenseOperator partial_trace(const DenseOperator& rho, std::span<const int> keep) {
    const int n = rho.n_qubits;
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    for (int s : keep) {
        if (s < 1 || s > n) throw std::out_of_range("partial_trace: site out of range");
        kept[static_cast<std::size_t>(s - 1)] = true;
    }

    // Split each basis index into kept bits and traced bits, preserving the
    // original site order within each group.
    std::vector<int> keep_bits, trace_bits;
    for (int s = 0; s < n; ++s) {
        const int bit = n - 1 - s;
        if (kept[static_cast<std::size_t>(s)]) keep_bits.push_back(bit);
        else trace_bits.push_back(bit);
    }
    const int nk = static_cast<int>(keep_bits.size());
    const int nt = static_cast<int>(trace_bits.size());
    const Eigen::Index dk = dim_of_qubits(nk);
    const Eigen::Index dt = dim_of_qubits(nt);

    const auto compose = [](const std::vector<int>& bits, Eigen::Index sub) {
        Eigen::Index full = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            const Eigen::Index b = (sub >> (bits.size() - 1 - i)) & 1;
            full |= b << bits[i];
        }
        return full;
    };

    Matrix out = Matrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i) {
        const Eigen::Index fi = compose(keep_bits, i);
        for (Eigen::Index j = 0; j < dk; ++j) {
            const Eigen::Index fj = compose(keep_bits, j);
            Complex acc{0.0, 0.0};
            for (Eigen::Index m = 0; m < dt; ++m) {
                const Eigen::Index fm = compose(trace_bits, m);
                acc += rho.matrix(fi | fm, fj | fm);
            }
            out(i, j) = acc;
        }
    }
    return {std::move(out), nk};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    DenseOperator reduced = partial_trace(rho.as_operator(), keep);
    return DensityMatrix{std::move(reduced.matrix), reduced.n_qubits};
}

DenseOperator single_site_operator(int n_qubits, int site, const Eigen::Matrix2cd& op) {
    if (site < 1 || site > n_qubits) throw std::out_of_range("single_site_operator: site out of range");
    const Eigen::Index d = dim_of_qubits(n_qubits);
    const int bit = n_qubits - site;
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::Index vj = (j >> bit) & 1;
        for (Eigen::Index vi = 0; vi < 2; ++vi) {
            const Complex val = op(vi, vj);
            if (val != Complex{0.0, 0.0}) {
                const Eigen::Index i = (j & ~(Eigen::Index{1} << bit)) | (vi << bit);
                m(i, j) = val;
            }
        }
    }
    return {std::move(m), n_qubits};
}

namespace {

template <typename T>
T tree_sum_impl(std::span<const T> terms) {
    if (terms.empty()) return T{};
    std::vector<T> level(terms.begin(), terms.end());
    while (level.size() > 1) {
        std::vector<T> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level.front();
}

}  // namespace

double tree_sum(std::span<const double> terms) { return tree_sum_impl(terms); }
Complex tree_sum(std::span<const Complex> terms) { return tree_sum_impl(terms); }

}  // namespace revival
