// protocols.hpp — the weak-measurement channel and the damaged-information
// recovery protocol built on revival dynamics.

#pragma once

#include "revival/operators.hpp"
#include "revival/spectral.hpp"

#include <utility>

namespace revival {

// Joint state on system (x) ancilla after a strength-p weak measurement. The
// ancilla is (d+1)-dimensional (basis state 0 marks "no projection"), so the
// joint dimension d*(d+1) is not a qubit register; the state is stored as a
// raw matrix with joint index i*(d+1) + e.
struct WeakMeasurementOutcome {
    Matrix joint;
    int n_system_qubits = 0;
    double strength = 0.0;

    Eigen::Index system_dim() const { return dim_of_qubits(n_system_qubits); }
    Eigen::Index ancilla_dim() const { return system_dim() + 1; }

    DensityMatrix trace_out_ancilla() const;
    // Trace and PSD invariants; O(dim^3), intended for tests and small d.
    void validate() const;
};

// M_p(rho) = (1-p) rho (x) |0><0|_E + p sum_i |i><i| rho |i><i| (x) |i><i|_E,
// the dephased controlled-rotation channel of strength p in (0, 1).
WeakMeasurementOutcome weak_measure(const DensityMatrix& rho, double p);

struct RecoveryRun {
    StateVector phi;
    double t1 = 0.0;
    double t2 = 0.0;
    int m = 1;
    double p = 0.0;
    DensityMatrix rho_f;            // closed form
    DensityMatrix rho_f_simulated;  // end-to-end circuit path
    double closed_form_gap = 0.0;   // max elementwise |closed - simulated|
    double overlap_phi_rhof = 0.0;  // <phi| rho_f |phi>
    double direct_expectation = 0.0;
    double estimate = 0.0;              // chaotic-decoder estimator
    double exact_reconstruction = 0.0;  // exact correction-sum inversion
    double haar_gap = 0.0;              // |estimate - direct_expectation|
    double scar_overlap_diag = 0.0;     // max_i of the A-span weight of |i>
};

// Runs the five-step protocol: encode |phi> with U(t1), weak-measure at
// strength p, decode with U(t2) where t2 = m*t_R - t1 and t_R = 2 pi T, trace
// out the ancilla. Verifies that |phi> is free (revival fidelity >= 1-1e-8)
// and that the simulated reduced state matches the closed form within 1e-9.
// Registers above 6 qubits must be opted into (the joint state is
// O(d^2 (d+1)^2) memory).
RecoveryRun run_recovery(const SpectralDecomposition& spec, const EigenClassification& cls,
                         const StateVector& phi, double t1, int m, double p,
                         const DenseOperator& observable, bool allow_large = false);

// (tr(O rho_f) - (p/d) tr(O)) / (1 - p): exact when the decoder evolution
// Haar-scrambles every computational basis state; the run's haar_gap and
// scar_overlap_diag report how far the fixture is from that regime.
double estimate_expectation(const RecoveryRun& run, const DenseOperator& observable);

// Monte-Carlo (mean, standard error) of <i|U^dag O U|i> over Haar-random U;
// the population mean is tr(O)/d.
std::pair<double, double> haar_twirl_reference(const DenseOperator& observable,
                                               Eigen::Index basis_index, int samples,
                                               std::uint64_t seed);

}  // namespace revival
