// pauli.hpp — n-site Pauli strings with subsystem-restricted enumeration.
//
// Sites are 1-based (1..n); site 1 is the leftmost tensor factor, i.e. the
// most significant bit of a computational basis index.

#pragma once

#include "revival/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revival {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(PauliLetter l);

struct PauliString {
    std::vector<PauliLetter> letters;  // length n, index 0 is site 1

    int n_qubits() const { return static_cast<int>(letters.size()); }
    Eigen::Index dim() const { return dim_of_qubits(n_qubits()); }

    // Sites (1-based) where the letter is not I.
    std::vector<int> support() const;
    bool is_identity() const;

    std::string str() const;

    bool commutes_with(const PauliString& other) const;

    // Basis action P|i> = phase[i] |i ^ flip_mask>; phases are in {+-1, +-i}.
    struct BasisAction {
        std::uint64_t flip_mask = 0;
        Vector phases;
    };
    BasisAction basis_action() const;

    // P M P for Hermitian Pauli P, in O(d^2).
    Matrix conjugate(const Matrix& m) const;

    DenseOperator to_operator() const;

    static PauliString identity(int n_qubits);
    static PauliString single(int n_qubits, int site, PauliLetter l);
    // Parses e.g. "IXYZ".
    static PauliString from_string(std::string_view s);
};

// All 4^{|support|} Pauli strings supported within `support` (identity
// included), in lexicographic I<X<Y<Z order. An empty support yields only the
// identity.
std::vector<PauliString> pauli_enumerate(int n_qubits, std::span<const int> support);

}  // namespace revival
