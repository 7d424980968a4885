// operators.hpp — Hilbert-Schmidt inner products, eigenbasis-driven time
// evolution, and partial traces.

#pragma once

#include "revival/types.hpp"

#include <span>

namespace revival {

// <A, B> = tr(A^dag B) / d
Complex hs_inner(const DenseOperator& a, const DenseOperator& b);

// ||A||_2 = sqrt(tr(A^dag A) / d)
double hs_norm(const DenseOperator& a);

// e^{-iHt} |psi> via the precomputed eigendecomposition.
StateVector evolve_state(const SpectralDecomposition& spec, const StateVector& psi, double t);

// Heisenberg picture O(t) = e^{iHt} O e^{-iHt}.
DenseOperator evolve_operator(const SpectralDecomposition& spec, const DenseOperator& o, double t);

// Schroedinger picture rho(t) = e^{-iHt} rho e^{iHt}.
DensityMatrix evolve_density(const SpectralDecomposition& spec, const DensityMatrix& rho, double t);

// Traces out every site not in `keep` (sites 1-based). The result acts on the
// kept sites in their original order.
DenseOperator partial_trace(const DenseOperator& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

// Places a 2x2 operator on one site (1-based) of an n-qubit register.
DenseOperator single_site_operator(int n_qubits, int site, const Eigen::Matrix2cd& op);

// Fixed-shape pairwise tree sum: the reduction order depends only on the
// number of terms, so parallel producers always combine identically.
double tree_sum(std::span<const double> terms);
Complex tree_sum(std::span<const Complex> terms);

}  // namespace revival
