#include "revival/pauli.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace revival {

char pauli_char(PauliLetter l) {
    switch (l) {
        case PauliLetter::I: return 'I';
        case PauliLetter::X: return 'X';
        case PauliLetter::Y: return 'Y';
        case PauliLetter::Z: return 'Z';
    }
    return '?';
}

std::vector<int> PauliString::support() const {
    std::vector<int> out;
    for (int s = 0; s < n_qubits(); ++s)
        if (letters[s] != PauliLetter::I) out.push_back(s + 1);
    return out;
}

bool PauliString::is_identity() const {
    return std::all_of(letters.begin(), letters.end(),
                       [](PauliLetter l) { return l == PauliLetter::I; });
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(letters.size());
    for (PauliLetter l : letters) s.push_back(pauli_char(l));
    return s;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (other.n_qubits() != n_qubits())
        throw std::invalid_argument("PauliString::commutes_with: size mismatch");
    int anticommuting_sites = 0;
    for (int s = 0; s < n_qubits(); ++s) {
        const PauliLetter a = letters[s], b = other.letters[s];
        if (a != PauliLetter::I && b != PauliLetter::I && a != b) ++anticommuting_sites;
    }
    return anticommuting_sites % 2 == 0;
}

PauliString::BasisAction PauliString::basis_action() const {
    const int n = n_qubits();
    const Eigen::Index d = dim();
    BasisAction act;
    act.phases = Vector::Ones(d);
    for (int s = 0; s < n; ++s) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - s);
        switch (letters[s]) {
            case PauliLetter::I: break;
            case PauliLetter::X: act.flip_mask ^= bit; break;
            case PauliLetter::Y:
                act.flip_mask ^= bit;
                for (Eigen::Index i = 0; i < d; ++i)
                    act.phases(i) *= (i & bit) ? -kImag : kImag;
                break;
            case PauliLetter::Z:
                for (Eigen::Index i = 0; i < d; ++i)
                    if (i & bit) act.phases(i) = -act.phases(i);
                break;
        }
    }
    return act;
}

Matrix PauliString::conjugate(const Matrix& m) const {
    if (m.rows() != dim() || m.cols() != dim())
        throw std::invalid_argument("PauliString::conjugate: dimension mismatch");
    const BasisAction act = basis_action();
    const Eigen::Index d = dim();
    Matrix out(d, d);
    // (P M P)_{ij} = conj(phase_i) phase_j M_{pi(i), pi(j)} with pi(i) = i ^ mask.
    for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::Index pj = static_cast<Eigen::Index>(j ^ static_cast<Eigen::Index>(act.flip_mask));
        const Complex cj = act.phases(j);
        for (Eigen::Index i = 0; i < d; ++i) {
            const Eigen::Index pi = static_cast<Eigen::Index>(i ^ static_cast<Eigen::Index>(act.flip_mask));
            out(i, j) = std::conj(act.phases(i)) * cj * m(pi, pj);
        }
    }
    return out;
}

DenseOperator PauliString::to_operator() const {
    const BasisAction act = basis_action();
    const Eigen::Index d = dim();
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        m(static_cast<Eigen::Index>(i ^ static_cast<Eigen::Index>(act.flip_mask)), i) = act.phases(i);
    return {std::move(m), n_qubits()};
}

PauliString PauliString::identity(int n_qubits) {
    return {std::vector<PauliLetter>(static_cast<std::size_t>(n_qubits), PauliLetter::I)};
}

PauliString PauliString::single(int n_qubits, int site, PauliLetter l) {
    if (site < 1 || site > n_qubits) throw std::out_of_range("PauliString::single: site out of range");
    PauliString p = identity(n_qubits);
    p.letters[static_cast<std::size_t>(site - 1)] = l;
    return p;
}

PauliString PauliString::from_string(std::string_view s) {
    PauliString p;
    p.letters.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case 'I': p.letters.push_back(PauliLetter::I); break;
            case 'X': p.letters.push_back(PauliLetter::X); break;
            case 'Y': p.letters.push_back(PauliLetter::Y); break;
            case 'Z': p.letters.push_back(PauliLetter::Z); break;
            default: throw std::invalid_argument("PauliString::from_string: bad letter");
        }
    }
    return p;
}

std::vector<PauliString> pauli_enumerate(int n_qubits, std::span<const int> support) {
    std::set<int> sites(support.begin(), support.end());
    for (int s : sites)
        if (s < 1 || s > n_qubits) throw std::out_of_range("pauli_enumerate: site out of range");

    const std::vector<int> ordered(sites.begin(), sites.end());
    const std::size_t k = ordered.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= 4;

    std::vector<PauliString> out;
    out.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        PauliString p = PauliString::identity(n_qubits);
        std::size_t c = code;
        for (std::size_t i = k; i-- > 0;) {
            p.letters[static_cast<std::size_t>(ordered[i] - 1)] = static_cast<PauliLetter>(c % 4);
            c /= 4;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace revival
