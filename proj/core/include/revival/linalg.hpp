// linalg.hpp — dense complex matrix aliases and small helpers shared across the library

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace revival {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

// d = 2^n for n >= 0; -1 if d is not a power of two.
inline int qubit_count_of_dim(Eigen::Index d) {
    if (d < 1) return -1;
    int n = 0;
    Eigen::Index x = d;
    while ((x & 1) == 0) {
        x >>= 1;
        ++n;
    }
    return x == 1 ? n : -1;
}

inline Eigen::Index dim_of_qubits(int n_qubits) {
    return Eigen::Index{1} << n_qubits;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// tr(A B) without forming the product.
inline Complex trace_product(const Matrix& a, const Matrix& b) {
    return (a.array() * b.transpose().array()).sum();
}

}  // namespace revival
