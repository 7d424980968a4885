// Shared synthetic fixtures for the resource-theory tests. The surd sets are
// chosen so that every irrational revival phase e^{-i E 2 pi T} is separated
// from the others and from 1 by at least 0.2 rad; the checks that rely on
// strict fidelity gaps assert that separation at runtime.

#pragma once

#include "revival/hamiltonians.hpp"
#include "revival/resource.hpp"
#include "revival/rng.hpp"
#include "revival/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace revival::fixtures {

struct SyntheticFixture {
    SpectralDecomposition spec;
    EigenClassification cls;
    EigenClassification truth;
};

inline SyntheticFixture realize(const SyntheticSpectrum& s, std::uint64_t seed,
                                long long max_den = 64) {
    SyntheticFixture f;
    const SyntheticResult res = build_synthetic(s, seed);
    f.spec = SpectralDecomposition::diagonalize(res.hamiltonian);
    f.cls = classify(f.spec, 1e-9, max_den);
    f.truth = res.truth;
    if (f.cls.rational_indices != f.truth.rational_indices)
        throw std::runtime_error("fixture: classifier disagrees with generator ground truth");
    return f;
}

// d = 4: the rescaling-example spectrum diag(1, 2, sqrt(2), 2 sqrt(2)),
// optionally conjugated by a Haar basis. A = {1, 2}, B = {sqrt 2, 2 sqrt 2},
// T = 1.
inline SyntheticFixture diag4(bool haar_basis = false, std::uint64_t seed = 41) {
    SyntheticSpectrum s;
    s.rationals = {make_fraction(1, 1), make_fraction(2, 1)};
    s.irrationals = {Surd{{0, 1}, {1, 1}, 2}, Surd{{0, 1}, {2, 1}, 2}};
    if (!haar_basis) s.basis = Matrix::Identity(4, 4);
    return realize(s, seed);
}

// Five d = 8 spectra with N_R = N_I = 4, T = 1, and well-separated irrational
// phases.
inline std::vector<SyntheticSpectrum> generic8_specs() {
    const auto surd = [](long long bn, long long bd, long long m) {
        return Surd{{0, 1}, {bn, bd}, m};
    };
    std::vector<SyntheticSpectrum> out(5);
    for (auto& s : out)
        s.rationals = {make_fraction(0, 1), make_fraction(1, 1), make_fraction(-1, 1),
                       make_fraction(2, 1)};
    out[0].irrationals = {surd(1, 1, 2), surd(1, 1, 3), surd(1, 1, 5), surd(1, 1, 6)};
    out[1].irrationals = {surd(1, 1, 7), surd(1, 1, 10), surd(1, 1, 11), surd(1, 1, 13)};
    out[2].irrationals = {surd(2, 1, 2), surd(2, 1, 7), surd(2, 1, 13), surd(2, 1, 5)};
    out[3].irrationals = {surd(1, 2, 2), surd(1, 2, 3), surd(1, 2, 5), surd(1, 2, 7)};
    out[4].irrationals = {surd(3, 1, 2), surd(1, 1, 3), surd(1, 1, 10), surd(1, 1, 13)};
    return out;
}

// Minimum circular distance between the irrational revival phases (and from
// the rational phase 1).
inline double min_phase_gap(const SpectralDecomposition& spec, const EigenClassification& cls) {
    const double period = revival_period(cls);
    std::vector<double> angles{0.0};
    for (int i : cls.irrational_indices) {
        double a = std::fmod(spec.eigenvalues(i) * period, 2.0 * std::numbers::pi);
        if (a < 0) a += 2.0 * std::numbers::pi;
        angles.push_back(a);
    }
    double gap = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        for (std::size_t j = i + 1; j < angles.size(); ++j) {
            const double diff = std::abs(angles[i] - angles[j]);
            gap = std::min(gap, std::min(diff, 2.0 * std::numbers::pi - diff));
        }
    }
    return gap;
}

// Random free state over the rational span.
inline StateVector random_free_state(const SyntheticFixture& f, std::mt19937_64& rng) {
    const Vector c = random_unit_vector(f.cls.n_rational(), rng);
    return make_free_state(f.spec, f.cls, c);
}

// Random resourceful state: weight w_b in [0.1, 0.9] on
// one irrational eigenstate, the rest Haar on the remaining coordinates.
inline StateVector random_resourceful_state(const SyntheticFixture& f, std::mt19937_64& rng) {
    const Eigen::Index d = f.spec.dim();
    std::uniform_real_distribution<double> wdist(0.1, 0.9);
    std::uniform_int_distribution<std::size_t> pick(0, f.cls.irrational_indices.size() - 1);
    const int jb = f.cls.irrational_indices[pick(rng)];
    const double wb = wdist(rng);

    const Vector rest = random_unit_vector(d - 1, rng);
    Vector coeffs(d);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        if (static_cast<int>(i) == jb)
            coeffs(i) = std::sqrt(wb);
        else
            coeffs(i) = std::sqrt(1.0 - wb) * rest(r++);
    }
    return StateVector{f.spec.eigenvectors * coeffs, f.spec.n_qubits};
}

}  // namespace revival::fixtures
