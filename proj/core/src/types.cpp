#include "revival/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace revival {

StateVector& StateVector::normalize() {
    const double n = amplitudes.norm();
    if (n < 1e-300) throw std::invalid_argument("StateVector::normalize: zero vector");
    amplitudes /= n;
    return *this;
}

StateVector StateVector::from_amplitudes(Vector a) {
    const int n = qubit_count_of_dim(a.size());
    if (n < 0) throw std::invalid_argument("StateVector: dimension is not a power of two");
    return {std::move(a), n};
}

StateVector StateVector::zero_state(int n_qubits) {
    return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, Eigen::Index index) {
    const Eigen::Index d = dim_of_qubits(n_qubits);
    if (index < 0 || index >= d) throw std::out_of_range("StateVector::basis_state: index out of range");
    Vector a = Vector::Zero(d);
    a(index) = 1.0;
    return {std::move(a), n_qubits};
}

bool DenseOperator::is_hermitian(double tol) const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool DenseOperator::is_unitary(double tol) const {
    const Matrix g = matrix.adjoint() * matrix;
    return (g - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

DenseOperator DenseOperator::from_matrix(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("DenseOperator: matrix is not square");
    const int n = qubit_count_of_dim(m.rows());
    if (n < 0) throw std::invalid_argument("DenseOperator: dimension is not a power of two");
    return {std::move(m), n};
}

DenseOperator DenseOperator::identity(int n_qubits) {
    const Eigen::Index d = dim_of_qubits(n_qubits);
    return {Matrix::Identity(d, d), n_qubits};
}

DensityMatrix DensityMatrix::from_matrix(Matrix m) {
    DenseOperator op = DenseOperator::from_matrix(std::move(m));
    if (!op.is_hermitian(kHermitianTol))
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(op.matrix.trace() - Complex{1.0, 0.0}) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(op.matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    return {std::move(op.matrix), op.n_qubits};
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    return {psi.amplitudes * psi.amplitudes.adjoint(), psi.n_qubits};
}

Vector SpectralDecomposition::propagator_phases(double t) const {
    return (-kImag * t * eigenvalues.array().cast<Complex>()).exp();
}

Matrix SpectralDecomposition::propagator(double t) const {
    return eigenvectors * propagator_phases(t).asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition SpectralDecomposition::diagonalize(const DenseOperator& h) {
    if (!h.is_hermitian(kHermitianTol * std::max(1.0, h.matrix.cwiseAbs().maxCoeff())))
        throw std::invalid_argument("SpectralDecomposition: operator is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("SpectralDecomposition: eigensolver failed");

    SpectralDecomposition out{es.eigenvalues(), es.eigenvectors(), h.n_qubits};

    // Phase-fix each column: first component of non-negligible modulus is made
    // real-positive.
    for (Eigen::Index j = 0; j < out.dim(); ++j) {
        for (Eigen::Index i = 0; i < out.dim(); ++i) {
            const Complex v = out.eigenvectors(i, j);
            if (std::abs(v) > 1e-8) {
                out.eigenvectors.col(j) *= std::conj(v) / std::abs(v);
                break;
            }
        }
    }

    const Matrix rec = out.eigenvectors * out.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                       out.eigenvectors.adjoint();
    const double scale = std::max(1.0, h.matrix.norm());
    if ((rec - h.matrix).norm() / scale > kReconstructTol)
        throw std::runtime_error("SpectralDecomposition: reconstruction residual too large");
    return out;
}

}  // namespace revival
