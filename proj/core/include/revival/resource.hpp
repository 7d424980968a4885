// resource.hpp — free states, free unitaries, free observables, revival
// fidelities, and lower-bound estimators for the non-revival monotones.
//
// Every monotone here is a maximum over the free-unitary group; the
// estimators return certified lower bounds (any feasible point lower-bounds a
// maximum) together with their optimizer provenance.

#pragma once

#include "revival/operators.hpp"
#include "revival/spectral.hpp"

#include <nlohmann/json_fwd.hpp>

#include <random>
#include <vector>

namespace revival {

// Block parameterization of a free unitary: an arbitrary unitary on the
// rational span plus a phased permutation of the irrational eigenstates.
struct FreeUnitarySpec {
    Matrix rational_block;             // N_R x N_R unitary
    std::vector<int> irrational_perm;  // sigma over B-slots: slot k maps eigenstate B[sigma(k)] -> B[k]
    RealVector irrational_phases;      // theta_k, one per B-slot

    void validate(double tol = kUnitaryTol) const;

    static FreeUnitarySpec identity(int n_rational, int n_irrational);
    static FreeUnitarySpec random(int n_rational, int n_irrational, std::mt19937_64& rng);
};

// |<psi| e^{-iH 2 pi T} |psi>|, clamped to [0, 1] after a roundoff check.
double revival_fidelity(const SpectralDecomposition& spec, const EigenClassification& cls,
                        const StateVector& psi);

// Uhlmann fidelity tr sqrt(sqrt(rho) rho(2 pi T) sqrt(rho)).
double revival_fidelity_mixed(const SpectralDecomposition& spec, const EigenClassification& cls,
                              const DensityMatrix& rho);

// G(O) = |<O(2 pi T), O>|^2 for a normalized observable (||O||_2 = 1).
double revival_correlator(const SpectralDecomposition& spec, const EigenClassification& cls,
                          const DenseOperator& o);

// Superposition over the rational span; coefficients must have unit norm.
StateVector make_free_state(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const Vector& rational_coefficients);
// A single irrational eigenstate; the index must lie in B. (Mixing rational
// coefficients with an irrational component is the resourceful form and is
// rejected by construction: there is no API for it.)
StateVector make_free_state_irrational(const SpectralDecomposition& spec,
                                       const EigenClassification& cls, int eigen_index);

DenseOperator make_free_unitary(const SpectralDecomposition& spec, const EigenClassification& cls,
                                const FreeUnitarySpec& u);

struct FreenessCheck {
    bool free = false;
    double offblock_residual = 0.0;     // A<->B coupling mass in the eigenbasis
    double permutation_residual = 0.0;  // distance of the B-B block from a phased permutation
};

// Projects U into the eigenbasis and measures the two residuals; free iff both
// are <= tol. Throws on non-unitary input.
FreenessCheck is_free_unitary(const SpectralDecomposition& spec, const EigenClassification& cls,
                              const DenseOperator& u, double tol);

struct OptimizerBudget {
    int restarts = 4;
    int iterations = 6;  // coordinate-ascent sweeps per restart
    std::uint64_t seed = 0;
    int threads = 1;
};

struct MonotoneEstimate {
    double value = 0.0;  // certified lower bound, in [0, 1]
    char kind = 'R';     // 'R', 'D', or 'G'
    OptimizerBudget budget;
    std::vector<double> restart_values;  // best value seen in each restart
    long long evaluations = 0;
    // Argmax parameters (best feasible point found).
    std::vector<int> best_permutation;
    std::vector<double> best_block_params;
    std::vector<double> best_phases;
};

nlohmann::json monotone_report(const MonotoneEstimate& est);

// R(psi): max over free unitaries of 1 - F_R(U_F psi). Permutations of B are
// enumerated exhaustively for N_I <= 6 and sampled otherwise; per permutation
// the rational block (exponential map of a Hermitian generator, N_R^2 real
// parameters) and the B phases are optimized by coordinate-wise golden-section
// ascent with random restarts.
MonotoneEstimate monotone_R(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const StateVector& psi, const OptimizerBudget& budget);

// D(U): max over free states of R(U psi); free states are parameterized as a
// coefficient vector on the rational span plus the individual irrational
// eigenstates.
MonotoneEstimate monotone_D(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const DenseOperator& u, const OptimizerBudget& budget);

// G(O): max over free unitaries of 1 - G(U_F^dag O U_F), same search strategy
// as monotone_R.
MonotoneEstimate monotone_G(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const DenseOperator& o, const OptimizerBudget& budget);

}  // namespace revival
