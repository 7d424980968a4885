// rng.hpp — deterministic RNG substreams and Haar-random sampling.
//
// Substreams derived from a root seed are independent of scheduling: stream k
// of seed s is the same bits no matter which thread draws it.

#pragma once

#include "revival/linalg.hpp"

#include <Eigen/QR>

#include <random>

namespace revival {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Engine for substream `stream` of `root_seed`.
inline std::mt19937_64 substream_rng(std::uint64_t root_seed, std::uint64_t stream) {
    std::uint64_t s = root_seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
    const std::uint64_t a = splitmix64(s);
    const std::uint64_t b = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

inline Vector random_unit_vector(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = Complex{re, im};
    }
    v /= v.norm();
    return v;
}

// Haar-distributed unitary: QR of a complex Ginibre matrix with the R diagonal
// phases divided out.
inline Matrix haar_unitary(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) g(i, j) = Complex{gauss(rng), gauss(rng)};
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex rjj = r(j, j);
        const double a = std::abs(rjj);
        q.col(j) *= (a > 0) ? rjj / a : Complex{1.0, 0.0};
    }
    return q;
}

}  // namespace revival
