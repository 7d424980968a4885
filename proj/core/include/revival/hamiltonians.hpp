// hamiltonians.hpp — the PXP chain, the 2-qubit toy model, synthetic spectra
// with exact rational/irrational structure, and affine spectrum rescaling.

#pragma once

#include "revival/rational.hpp"
#include "revival/spectral.hpp"
#include "revival/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace revival {

// H = sum_i P_{i-1} X_i P_{i+1} with P = |0><0|, periodic boundary, 3<=n<=14.
// Real symmetric in the computational basis.
DenseOperator build_pxp(int n_qubits);

// H = sqrt(2)(XX + ZZ) + YY + sum_{P != P'} P(x)P' on two qubits. Exact
// spectrum {3, -1-2*sqrt(2), -1+sqrt(2)-sqrt(10), -1+sqrt(2)+sqrt(10)}: one
// rational eigenvalue, pairwise-irrational spacings among the rest.
DenseOperator build_toy_model();

// (H - e1*I) / e0. Eigenvectors unchanged, eigenvalues mapped affinely.
DenseOperator rescale_spectrum(const DenseOperator& h, double e0, double e1);

// a + b*sqrt(m) with rational a, b and square-free m > 1. b must be nonzero,
// so the value is guaranteed irrational and comparisons against rationals are
// exact.
struct Surd {
    Fraction a;
    Fraction b;
    long long m = 2;

    double value() const;
    void validate() const;

    // s1 - s2 is rational iff both surd parts cancel exactly.
    static bool difference_is_rational(const Surd& s1, const Surd& s2);
};

bool is_square_free(long long m);

// Exact spectrum specification: the generator knows the classification ground
// truth by construction, which makes it the test fixture for everything
// downstream of the classifier.
struct SyntheticSpectrum {
    std::vector<Fraction> rationals;
    std::vector<Surd> irrationals;
    std::optional<Matrix> basis;  // conjugating unitary; Haar-random from seed when absent

    Eigen::Index total() const {
        return static_cast<Eigen::Index>(rationals.size() + irrationals.size());
    }

    // Throws on: non-power-of-two total, invalid surds, rational spacing
    // between two irrational entries, duplicate values.
    void validate() const;
};

struct SyntheticResult {
    DenseOperator hamiltonian;
    EigenClassification truth;  // indices into the ascending spectrum, exact T
};

SyntheticResult build_synthetic(const SyntheticSpectrum& spec, std::uint64_t seed = 0);

// Plain-text Hermitian matrix format: header "dim d", then one line
// "row col re im" per nonzero entry (0-indexed); unlisted entries are zero.
// Hermiticity is validated on load.
DenseOperator load_explicit_matrix(std::istream& in);
DenseOperator load_explicit_matrix(const std::filesystem::path& path);
void save_explicit_matrix(std::ostream& out, const DenseOperator& h);

}  // namespace revival
