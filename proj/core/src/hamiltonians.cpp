#include "revival/hamiltonians.hpp"

#include "revival/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace revival {

DenseOperator build_pxp(int n_qubits) {
    if (n_qubits < 3 || n_qubits > 14)
        throw std::invalid_argument("build_pxp: n_qubits must be in [3, 14]");
    const int n = n_qubits;
    const Eigen::Index d = dim_of_qubits(n);
    Matrix h = Matrix::Zero(d, d);
    for (Eigen::Index s = 0; s < d; ++s) {
        for (int i = 0; i < n; ++i) {
            const int left = (i + n - 1) % n;
            const int right = (i + 1) % n;
            const Eigen::Index bit_i = Eigen::Index{1} << (n - 1 - i);
            const Eigen::Index bit_l = Eigen::Index{1} << (n - 1 - left);
            const Eigen::Index bit_r = Eigen::Index{1} << (n - 1 - right);
            if ((s & bit_l) == 0 && (s & bit_r) == 0) h(s ^ bit_i, s) += 1.0;
        }
    }
    return {std::move(h), n};
}

DenseOperator build_toy_model() {
    Eigen::Matrix2cd x, y, z;
    x << 0, 1, 1, 0;
    y << 0, Complex{0, -1}, Complex{0, 1}, 0;
    z << 1, 0, 0, -1;
    const Matrix xm = x, ym = y, zm = z;

    Matrix h = std::sqrt(2.0) * (kron(xm, xm) + kron(zm, zm)) + kron(ym, ym);
    const Matrix paulis[3] = {xm, ym, zm};
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (p != q) h += kron(paulis[p], paulis[q]);
    return {std::move(h), 2};
}

DenseOperator rescale_spectrum(const DenseOperator& h, double e0, double e1) {
    if (e0 == 0.0) throw std::invalid_argument("rescale_spectrum: e0 must be nonzero");
    Matrix m = (h.matrix - e1 * Matrix::Identity(h.dim(), h.dim())) / e0;
    return {std::move(m), h.n_qubits};
}

double Surd::value() const {
    return a.value() + b.value() * std::sqrt(static_cast<double>(m));
}

void Surd::validate() const {
    if (b.num == 0) throw std::invalid_argument("Surd: zero surd coefficient is rational");
    if (m <= 1 || !is_square_free(m))
        throw std::invalid_argument("Surd: radicand must be square-free and > 1");
}

bool Surd::difference_is_rational(const Surd& s1, const Surd& s2) {
    // b1*sqrt(m1) - b2*sqrt(m2) is rational only when it vanishes, which for
    // nonzero b and square-free m requires m1 == m2 and b1 == b2.
    return s1.m == s2.m && s1.b.reduced() == s2.b.reduced();
}

bool is_square_free(long long m) {
    if (m < 1) return false;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
    }
    return true;
}

void SyntheticSpectrum::validate() const {
    if (qubit_count_of_dim(total()) < 0)
        throw std::invalid_argument("SyntheticSpectrum: entry count is not a power of two");
    for (const Surd& s : irrationals) s.validate();
    for (std::size_t i = 0; i < irrationals.size(); ++i) {
        for (std::size_t j = i + 1; j < irrationals.size(); ++j) {
            if (Surd::difference_is_rational(irrationals[i], irrationals[j]))
                throw std::invalid_argument(
                    "SyntheticSpectrum: rational spacing between two irrational entries");
        }
    }
    for (std::size_t i = 0; i < rationals.size(); ++i)
        for (std::size_t j = i + 1; j < rationals.size(); ++j)
            if (rationals[i].reduced() == rationals[j].reduced())
                throw std::invalid_argument("SyntheticSpectrum: duplicate rational entry");
    if (basis) {
        if (basis->rows() != total() || basis->cols() != total())
            throw std::invalid_argument("SyntheticSpectrum: basis dimension mismatch");
        const Matrix g = basis->adjoint() * (*basis);
        if ((g - Matrix::Identity(total(), total())).cwiseAbs().maxCoeff() > kUnitaryTol)
            throw std::invalid_argument("SyntheticSpectrum: basis is not unitary");
    }
}

SyntheticResult build_synthetic(const SyntheticSpectrum& spec, std::uint64_t seed) {
    spec.validate();
    const Eigen::Index d = spec.total();

    struct Entry {
        double value;
        bool rational;
        Fraction fraction;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(d));
    for (const Fraction& f : spec.rationals) entries.push_back({f.value(), true, f.reduced()});
    for (const Surd& s : spec.irrationals) entries.push_back({s.value(), false, {}});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.value < b.value; });

    RealVector values(d);
    EigenClassification truth;
    truth.tolerance = 0.0;
    truth.max_denominator = 1;
    long long t = 1;
    for (Eigen::Index i = 0; i < d; ++i) {
        const Entry& e = entries[static_cast<std::size_t>(i)];
        values(i) = e.value;
        if (e.rational) {
            truth.rational_indices.push_back(static_cast<int>(i));
            truth.rational_values.push_back({static_cast<int>(i), e.fraction});
            t = lcm_ll(t, e.fraction.den);
            truth.max_denominator = std::max(truth.max_denominator, e.fraction.den);
        } else {
            truth.irrational_indices.push_back(static_cast<int>(i));
        }
    }
    if (!truth.rational_values.empty()) truth.common_denominator = t;

    Matrix v;
    if (spec.basis) {
        v = *spec.basis;
    } else {
        std::mt19937_64 rng = substream_rng(seed, 0);
        v = haar_unitary(d, rng);
    }
    Matrix h = v * values.asDiagonal().toDenseMatrix().cast<Complex>() * v.adjoint();
    // Symmetrize away the roundoff from the triple product.
    h = 0.5 * (h + Matrix(h.adjoint()));

    const int n = qubit_count_of_dim(d);
    return {DenseOperator{std::move(h), n}, std::move(truth)};
}

DenseOperator load_explicit_matrix(std::istream& in) {
    std::string tag;
    Eigen::Index d = 0;
    if (!(in >> tag >> d) || tag != "dim" || d < 1)
        throw std::invalid_argument("load_explicit_matrix: expected header 'dim d'");
    if (qubit_count_of_dim(d) < 0)
        throw std::invalid_argument("load_explicit_matrix: dimension is not a power of two");

    Matrix m = Matrix::Zero(d, d);
    std::map<std::pair<Eigen::Index, Eigen::Index>, bool> seen;
    Eigen::Index row, col;
    double re, im;
    while (in >> row >> col >> re >> im) {
        if (row < 0 || row >= d || col < 0 || col >= d)
            throw std::invalid_argument("load_explicit_matrix: index out of range");
        if (seen[{row, col}])
            throw std::invalid_argument("load_explicit_matrix: duplicate entry");
        seen[{row, col}] = true;
        m(row, col) = Complex{re, im};
    }
    if (!in.eof())
        throw std::invalid_argument("load_explicit_matrix: malformed entry line");

    DenseOperator h = DenseOperator::from_matrix(std::move(m));
    if (!h.is_hermitian(1e-12))
        throw std::invalid_argument("load_explicit_matrix: matrix is not Hermitian");
    return h;
}

DenseOperator load_explicit_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_explicit_matrix: cannot open " + path.string());
    return load_explicit_matrix(in);
}

void save_explicit_matrix(std::ostream& out, const DenseOperator& h) {
    out << "dim " << h.dim() << "\n";
    std::ostringstream line;
    line.precision(17);
    for (Eigen::Index i = 0; i < h.dim(); ++i) {
        for (Eigen::Index j = 0; j < h.dim(); ++j) {
            const Complex v = h.matrix(i, j);
            if (v != Complex{0.0, 0.0}) {
                line.str("");
                line << i << " " << j << " " << v.real() << " " << v.imag() << "\n";
                out << line.str();
            }
        }
    }
}

}  // namespace revival
