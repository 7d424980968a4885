// types.hpp — state vectors, density matrices, dense operators, and spectral
// decompositions on n-qubit Hilbert spaces (d = 2^n, computational basis).
//
// All types are plain value types, immutable by convention after construction,
// and safe to share read-only across threads.

#pragma once

#include "revival/linalg.hpp"

#include <stdexcept>

namespace revival {

// Validation tolerances used by the factory functions.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kReconstructTol = 1e-9;

struct StateVector {
    Vector amplitudes;
    int n_qubits = 0;

    Eigen::Index dim() const { return amplitudes.size(); }
    double norm() const { return amplitudes.norm(); }

    StateVector& normalize();

    // Wraps a raw amplitude vector; the length must be a power of two.
    static StateVector from_amplitudes(Vector a);
    // |0...0>
    static StateVector zero_state(int n_qubits);
    // Computational basis state |index>.
    static StateVector basis_state(int n_qubits, Eigen::Index index);
};

struct DenseOperator {
    Matrix matrix;
    int n_qubits = 0;

    Eigen::Index dim() const { return matrix.rows(); }

    DenseOperator adjoint() const { return {matrix.adjoint(), n_qubits}; }
    bool is_hermitian(double tol = kHermitianTol) const;
    bool is_unitary(double tol = kUnitaryTol) const;

    // Wraps a square matrix of power-of-two dimension.
    static DenseOperator from_matrix(Matrix m);
    static DenseOperator identity(int n_qubits);
};

struct DensityMatrix {
    Matrix matrix;
    int n_qubits = 0;

    Eigen::Index dim() const { return matrix.rows(); }

    // Validates Hermiticity, unit trace, and positive semidefiniteness
    // (eigenvalues >= -kPsdTol).
    static DensityMatrix from_matrix(Matrix m);
    static DensityMatrix pure(const StateVector& psi);

    DenseOperator as_operator() const { return {matrix, n_qubits}; }
};

// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
// Hermitian operator. Built once per Hamiltonian and reused as the propagator
// factory: evolving a T-point time sweep costs O(d^3 + T d^2) instead of T
// matrix exponentials.
struct SpectralDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;
    int n_qubits = 0;

    Eigen::Index dim() const { return eigenvalues.size(); }

    // Diagonal of e^{-iHt} in the eigenbasis.
    Vector propagator_phases(double t) const;

    // Full propagator e^{-iHt} in the computational basis.
    Matrix propagator(double t) const;

    // Diagonalizes a Hermitian operator. Eigenvector columns are phase-fixed
    // (first component of modulus > 1e-8 made real-positive) so repeated runs
    // produce identical decompositions. Throws if the input is not Hermitian
    // or the reconstruction V diag(E) V^dag misses the input by more than
    // kReconstructTol in relative Frobenius norm.
    static SpectralDecomposition diagonalize(const DenseOperator& h);
};

}  // namespace revival
