#include "revival/protocols.hpp"

#include "revival/resource.hpp"
#include "revival/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace revival {

DensityMatrix WeakMeasurementOutcome::trace_out_ancilla() const {
    const Eigen::Index d = system_dim();
    const Eigen::Index de = ancilla_dim();
    Matrix out = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            for (Eigen::Index e = 0; e < de; ++e) out(i, j) += joint(i * de + e, j * de + e);
    return DensityMatrix{std::move(out), n_system_qubits};
}

void WeakMeasurementOutcome::validate() const {
    if (std::abs(joint.trace() - Complex{1.0, 0.0}) > kTraceTol)
        throw std::runtime_error("WeakMeasurementOutcome: trace differs from 1");
    if ((joint - joint.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw std::runtime_error("WeakMeasurementOutcome: not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(joint, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::runtime_error("WeakMeasurementOutcome: not PSD");
}

WeakMeasurementOutcome weak_measure(const DensityMatrix& rho, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("weak_measure: p must be in (0, 1)");
    const Eigen::Index d = rho.dim();
    const Eigen::Index de = d + 1;

    WeakMeasurementOutcome out;
    out.n_system_qubits = rho.n_qubits;
    out.strength = p;
    out.joint = Matrix::Zero(d * de, d * de);

    // (1-p) rho (x) |0><0|_E
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) out.joint(i * de, j * de) = (1.0 - p) * rho.matrix(i, j);
    // p sum_i |i><i| rho |i><i| (x) |i><i|_E, with ancilla state i+1 tagging
    // system basis state i.
    for (Eigen::Index i = 0; i < d; ++i)
        out.joint(i * de + (i + 1), i * de + (i + 1)) += p * rho.matrix(i, i).real();

    return out;
}

RecoveryRun run_recovery(const SpectralDecomposition& spec, const EigenClassification& cls,
                         const StateVector& phi, double t1, int m, double p,
                         const DenseOperator& observable, bool allow_large) {
    if (spec.n_qubits > 6 && !allow_large)
        throw std::invalid_argument(
            "run_recovery: joint-state memory grows as d^2 (d+1)^2; pass allow_large for n > 6");
    if (observable.dim() != spec.dim())
        throw std::invalid_argument("run_recovery: observable dimension mismatch");

    const double fidelity = revival_fidelity(spec, cls, phi);
    if (fidelity < 1.0 - 1e-8)
        throw std::invalid_argument("run_recovery: phi is not free (revival fidelity < 1 - 1e-8)");

    const double t_r = revival_period(cls);
    const double t2 = static_cast<double>(m) * t_r - t1;
    if (!(t2 > 0.0)) throw std::invalid_argument("run_recovery: t2 = m*t_R - t1 must be positive");

    const Eigen::Index d = spec.dim();
    const Eigen::Index de = d + 1;

    RecoveryRun run;
    run.phi = phi;
    run.t1 = t1;
    run.t2 = t2;
    run.m = m;
    run.p = p;

    // Steps (1)-(3): encode, transmit, weak-measure.
    const DensityMatrix rho0 = DensityMatrix::pure(phi);
    const DensityMatrix rho1 = evolve_density(spec, rho0, t1);
    WeakMeasurementOutcome outcome = weak_measure(rho1, p);

    // Step (4): decode with U(t2) (x) I_E, applied blockwise on the ancilla
    // indices, then trace out the ancilla.
    const Matrix u2 = spec.propagator(t2);
    Matrix block(d, d);
    for (Eigen::Index e = 0; e < de; ++e) {
        for (Eigen::Index f = 0; f < de; ++f) {
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) block(i, j) = outcome.joint(i * de + e, j * de + f);
            if (block.cwiseAbs().maxCoeff() == 0.0) continue;
            const Matrix rotated = u2 * block * u2.adjoint();
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) outcome.joint(i * de + e, j * de + f) = rotated(i, j);
        }
    }
    run.rho_f_simulated = outcome.trace_out_ancilla();

    // Closed form: (1-p)|phi><phi| + p sum_i U(t2)|i><i|U^dag(t2) |<i|U(t1)|phi>|^2.
    const StateVector phi1 = evolve_state(spec, phi, t1);
    RealVector weights(d);
    for (Eigen::Index i = 0; i < d; ++i) weights(i) = std::norm(phi1.amplitudes(i));
    Matrix closed = (1.0 - p) * (phi.amplitudes * phi.amplitudes.adjoint());
    closed += p * u2 * weights.asDiagonal().toDenseMatrix().cast<Complex>() * u2.adjoint();
    run.rho_f = DensityMatrix{std::move(closed), spec.n_qubits};

    run.closed_form_gap = (run.rho_f.matrix - run.rho_f_simulated.matrix).cwiseAbs().maxCoeff();
    if (run.closed_form_gap > 1e-9)
        throw std::runtime_error("run_recovery: closed form and simulation disagree beyond 1e-9");

    run.overlap_phi_rhof =
        (phi.amplitudes.adjoint() * run.rho_f.matrix * phi.amplitudes)(0, 0).real();

    // Step (5): reconstruct <phi|O|phi>.
    run.direct_expectation =
        (phi.amplitudes.adjoint() * observable.matrix * phi.amplitudes)(0, 0).real();
    run.estimate = estimate_expectation(run, observable);
    const Matrix decoded_obs = u2.adjoint() * observable.matrix * u2;
    double correction = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) correction += decoded_obs(i, i).real() * weights(i);
    run.exact_reconstruction =
        ((run.rho_f_simulated.matrix * observable.matrix).trace().real() - p * correction) / (1.0 - p);
    run.haar_gap = std::abs(run.estimate - run.direct_expectation);

    // How far the fixture is from the "no scar weight on basis states"
    // assumption behind the estimator.
    for (Eigen::Index i = 0; i < d; ++i) {
        double w = 0.0;
        for (int a : cls.rational_indices) w += std::norm(spec.eigenvectors(i, a));
        run.scar_overlap_diag = std::max(run.scar_overlap_diag, w);
    }
    return run;
}

double estimate_expectation(const RecoveryRun& run, const DenseOperator& observable) {
    const double d = static_cast<double>(observable.dim());
    const double tr_o_rho = (run.rho_f_simulated.matrix * observable.matrix).trace().real();
    const double tr_o = observable.matrix.trace().real();
    return (tr_o_rho - run.p / d * tr_o) / (1.0 - run.p);
}

std::pair<double, double> haar_twirl_reference(const DenseOperator& observable,
                                               Eigen::Index basis_index, int samples,
                                               std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("haar_twirl_reference: samples must be >= 2");
    if (basis_index < 0 || basis_index >= observable.dim())
        throw std::out_of_range("haar_twirl_reference: basis index out of range");
    double sum = 0.0, sum_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng = substream_rng(seed, static_cast<std::uint64_t>(s));
        const Matrix u = haar_unitary(observable.dim(), rng);
        const Vector col = u.col(basis_index);
        const double val = (col.adjoint() * observable.matrix * col)(0, 0).real();
        sum += val;
        sum_sq += val * val;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    return {mean, std::sqrt(var / n)};
}

}  // namespace revival
