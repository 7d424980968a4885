// Acceptance suite: one numbered criterion per function, each printing
// PASS/FAIL lines with the measured numbers. Run with no arguments for the
// whole battery or with --criterion N for one entry (the ctest registration
// fans them out).

#include "../fixtures.hpp"
#include "../oracles.hpp"

#include "revival/hamiltonians.hpp"
#include "revival/operators.hpp"
#include "revival/protocols.hpp"
#include "revival/resource.hpp"
#include "revival/rng.hpp"
#include "revival/scrambling.hpp"
#include "revival_cli/config.hpp"
#include "revival_cli/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

using namespace revival;
using fixtures::SyntheticFixture;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& label, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", label.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

std::vector<SyntheticFixture> five_fixtures() {
    std::vector<SyntheticFixture> out;
    std::uint64_t seed = 9000;
    for (const SyntheticSpectrum& s : fixtures::generic8_specs()) {
        out.push_back(fixtures::realize(s, seed++));
        if (fixtures::min_phase_gap(out.back().spec, out.back().cls) < 0.2)
            throw std::runtime_error("fixture phase gap too small; adjust surd sets");
    }
    return out;
}

// --- criterion 1 ------------------------------------------------------------
// Toy model spectrum, classification, spacing. The asserted eigenvalue list is
// the verified spectrum of the stated Hamiltonian: {3, -1-2*sqrt(2),
// -1+sqrt(2)-sqrt(10), -1+sqrt(2)+sqrt(10)} (trace zero, unlike the commonly
// quoted -1-sqrt(2) variant, which is inconsistent with the model).
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto spec = SpectralDecomposition::diagonalize(build_toy_model());
    const double s2 = std::sqrt(2.0), s10 = std::sqrt(10.0);
    std::vector<double> expected{-1.0 - 2.0 * s2, -1.0 + s2 - s10, 3.0, -1.0 + s2 + s10};
    std::sort(expected.begin(), expected.end());
    double gap = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i)
        gap = std::max(gap, std::abs(spec.eigenvalues(i) - expected[static_cast<std::size_t>(i)]));

    const EigenClassification cls = classify(spec, 1e-9, 64);
    const auto violations = check_irrational_spacing(cls, spec, 1e-9, 64);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ostringstream os;
    os << "max eigenvalue gap " << gap << ", rationals " << cls.n_rational() << ", violations "
       << violations.size() << ", runtime " << secs << " s";
    report(gap < 1e-9 && cls.n_rational() == 1 && violations.empty() && secs < 1.0,
           "criterion 1 (toy model spectrum)", os.str());
}

// --- criterion 2 ------------------------------------------------------------
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto fxs = five_fixtures();
    double min_free = 1.0, max_resourceful = 0.0;
    for (std::size_t k = 0; k < fxs.size(); ++k) {
        std::mt19937_64 rng = substream_rng(7100 + k, 0);
        for (int trial = 0; trial < 200; ++trial) {
            min_free = std::min(
                min_free, revival_fidelity(fxs[k].spec, fxs[k].cls,
                                           fixtures::random_free_state(fxs[k], rng)));
            max_resourceful = std::max(
                max_resourceful, revival_fidelity(fxs[k].spec, fxs[k].cls,
                                                  fixtures::random_resourceful_state(fxs[k], rng)));
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "min F_R(free) " << min_free << " (need >= 1-1e-9), max F_R(resourceful) "
       << max_resourceful << " (need <= 1-1e-6), 5 spectra x 200+200 states, runtime " << secs
       << " s";
    report(min_free >= 1.0 - 1e-9 && max_resourceful <= 1.0 - 1e-6 && secs < 10.0,
           "criterion 2 (free vs resourceful fidelity sweep)", os.str());
}

// --- criterion 3 ------------------------------------------------------------
void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto fxs = five_fixtures();
    std::mt19937_64 rng = substream_rng(7300, 0);
    double worst_unitarity = 0.0, min_fidelity = 1.0;
    bool all_free = true;
    std::vector<DenseOperator> made;
    for (int k = 0; k < 100; ++k) {
        const SyntheticFixture& f = fxs[static_cast<std::size_t>(k) % fxs.size()];
        const FreeUnitarySpec u =
            FreeUnitarySpec::random(f.cls.n_rational(), f.cls.n_irrational(), rng);
        const DenseOperator uf = make_free_unitary(f.spec, f.cls, u);
        const Matrix gram = uf.matrix.adjoint() * uf.matrix;
        worst_unitarity = std::max(
            worst_unitarity,
            (gram - Matrix::Identity(uf.dim(), uf.dim())).cwiseAbs().maxCoeff());
        for (int s = 0; s < 20; ++s) {
            const StateVector psi = fixtures::random_free_state(f, rng);
            const StateVector mapped{uf.matrix * psi.amplitudes, psi.n_qubits};
            min_fidelity = std::min(min_fidelity, revival_fidelity(f.spec, f.cls, mapped));
        }
        all_free = all_free && is_free_unitary(f.spec, f.cls, uf.adjoint(), 1e-8).free;
        if (k >= 5) {
            // product of two specs built on the same fixture
            const DenseOperator other =
                make_free_unitary(f.spec, f.cls,
                                  FreeUnitarySpec::random(f.cls.n_rational(),
                                                          f.cls.n_irrational(), rng));
            const DenseOperator prod{uf.matrix * other.matrix, uf.n_qubits};
            all_free = all_free && is_free_unitary(f.spec, f.cls, prod, 1e-8).free;
        }
        made.push_back(uf);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "100 specs, worst unitarity residual " << worst_unitarity << " (need < 1e-9), min F_R "
       << min_fidelity << " (need >= 1-1e-8), adjoints+products free " << (all_free ? "yes" : "no")
       << ", runtime " << secs << " s";
    report(worst_unitarity < 1e-9 && min_fidelity >= 1.0 - 1e-8 && all_free && secs < 30.0,
           "criterion 3 (free-unitary closure suite)", os.str());
}

// --- criterion 4 ------------------------------------------------------------
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto fxs = five_fixtures();
    double min_free_rho = 1.0, min_free_obs = 1.0;
    double max_pert_rho = 0.0, max_pert_obs = 0.0;
    for (std::size_t k = 0; k < fxs.size(); ++k) {
        const SyntheticFixture& f = fxs[k];
        std::mt19937_64 rng = substream_rng(7400 + k, 0);
        const Eigen::Index d = f.spec.dim();
        std::normal_distribution<double> gauss(0.0, 1.0);

        // Free density matrix: PSD block on A plus diagonal on B.
        Matrix g(4, 4);
        for (Eigen::Index j = 0; j < 4; ++j)
            for (Eigen::Index i = 0; i < 4; ++i) g(i, j) = Complex{gauss(rng), gauss(rng)};
        Matrix in_basis = Matrix::Zero(d, d);
        const Matrix block = g * g.adjoint();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                in_basis(f.cls.rational_indices[static_cast<std::size_t>(i)],
                         f.cls.rational_indices[static_cast<std::size_t>(j)]) = block(i, j);
        std::uniform_real_distribution<double> uni(0.1, 1.0);
        for (int i : f.cls.irrational_indices) in_basis(i, i) = uni(rng);
        in_basis /= in_basis.trace();
        Matrix full = f.spec.eigenvectors * in_basis * f.spec.eigenvectors.adjoint();
        full = 0.5 * (full + Matrix(full.adjoint()));
        const DensityMatrix rho = DensityMatrix::from_matrix(full);
        min_free_rho = std::min(min_free_rho, revival_fidelity_mixed(f.spec, f.cls, rho));

        const auto perturb = [&](int i, int j) {
            const Vector chi =
                ((f.spec.eigenvectors.col(i) + f.spec.eigenvectors.col(j)) / std::sqrt(2.0)).eval();
            Matrix m = 0.7 * rho.matrix + 0.3 * (chi * chi.adjoint());
            return DensityMatrix::from_matrix(std::move(m));
        };
        max_pert_rho = std::max(
            max_pert_rho,
            revival_fidelity_mixed(f.spec, f.cls,
                                   perturb(f.cls.rational_indices[0], f.cls.irrational_indices[1])));
        max_pert_rho = std::max(
            max_pert_rho,
            revival_fidelity_mixed(f.spec, f.cls,
                                   perturb(f.cls.irrational_indices[0], f.cls.irrational_indices[2])));

        // Free observable: Hermitian A block plus real B diagonal.
        Matrix ob = Matrix::Zero(d, d);
        for (int i : f.cls.rational_indices)
            for (int j : f.cls.rational_indices)
                if (i <= j) {
                    const Complex v{gauss(rng), i == j ? 0.0 : gauss(rng)};
                    ob(i, j) = v;
                    ob(j, i) = std::conj(v);
                }
        for (int i : f.cls.irrational_indices) ob(i, i) = gauss(rng);
        DenseOperator obs{f.spec.eigenvectors * ob * f.spec.eigenvectors.adjoint(), f.spec.n_qubits};
        obs.matrix /= hs_norm(obs);
        min_free_obs = std::min(min_free_obs, revival_correlator(f.spec, f.cls, obs));

        const auto perturb_obs = [&](int i, int j) {
            Matrix m = ob;
            m(i, j) += 0.3;
            m(j, i) += 0.3;
            DenseOperator o{f.spec.eigenvectors * m * f.spec.eigenvectors.adjoint(), f.spec.n_qubits};
            o.matrix /= hs_norm(o);
            return o;
        };
        max_pert_obs = std::max(
            max_pert_obs,
            revival_correlator(f.spec, f.cls,
                               perturb_obs(f.cls.rational_indices[1], f.cls.irrational_indices[0])));
        max_pert_obs = std::max(
            max_pert_obs,
            revival_correlator(f.spec, f.cls,
                               perturb_obs(f.cls.irrational_indices[1], f.cls.irrational_indices[3])));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "min F_RM(free rho) " << min_free_rho << ", min G(free O) " << min_free_obs
       << " (need >= 1-1e-8); max perturbed F_RM " << max_pert_rho << ", max perturbed G "
       << max_pert_obs << " (need < 1-1e-6), runtime " << secs << " s";
    report(min_free_rho >= 1.0 - 1e-8 && min_free_obs >= 1.0 - 1e-8 &&
               max_pert_rho < 1.0 - 1e-6 && max_pert_obs < 1.0 - 1e-6 && secs < 10.0,
           "criterion 4 (mixed-state and observable revival suites)", os.str());
}

// --- criterion 5 ------------------------------------------------------------
void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();

    // Faithfulness at d = 8.
    const auto fxs = five_fixtures();
    double max_free_R = 0.0;
    bool lower_bound_ok = true;
    for (std::size_t k = 0; k < 2; ++k) {
        const SyntheticFixture& f = fxs[k];
        std::mt19937_64 rng = substream_rng(7500 + k, 0);
        OptimizerBudget budget{2, 3, 500 + k, 2};
        for (int trial = 0; trial < 3; ++trial) {
            const StateVector free_psi = fixtures::random_free_state(f, rng);
            max_free_R = std::max(max_free_R, monotone_R(f.spec, f.cls, free_psi, budget).value);
            const StateVector res_psi = fixtures::random_resourceful_state(f, rng);
            const double fr = revival_fidelity(f.spec, f.cls, res_psi);
            const double est = monotone_R(f.spec, f.cls, res_psi, budget).value;
            lower_bound_ok = lower_bound_ok && est >= 1.0 - fr - 1e-12;
        }
    }

    // d = 4 grid oracle at 0.01 rad.
    const SyntheticFixture f4 = fixtures::diag4(true, 777);
    std::mt19937_64 rng4 = substream_rng(7510, 0);
    OptimizerBudget budget4{4, 5, 600, 2};
    double max_gap = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const StateVector psi = trial == 0 ? fixtures::random_free_state(f4, rng4)
                                           : fixtures::random_resourceful_state(f4, rng4);
        const double oracle = oracles::grid_R(f4, psi, 0.01);
        const double est = monotone_R(f4.spec, f4.cls, psi, budget4).value;
        max_gap = std::max(max_gap, std::abs(oracle - est));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "max R(free) " << max_free_R << " (need <= 1e-8), lower bound held "
       << (lower_bound_ok ? "yes" : "no") << ", max |est - grid| " << max_gap
       << " (need <= 1e-3), runtime " << secs << " s";
    report(max_free_R <= 1e-8 && lower_bound_ok && max_gap <= 1e-3 && secs < 300.0,
           "criterion 5 (monotone faithfulness + grid oracle)", os.str());
}

// --- criterion 6 ------------------------------------------------------------
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    OptimizerBudget budget{1, 2, 610, 2};
    bool all_hold = true;
    double worst_lower = 1.0, worst_upper = 1.0;
    int checked = 0;

    const auto toy_spec = SpectralDecomposition::diagonalize(build_toy_model());
    const EigenClassification toy_cls = classify(toy_spec, 1e-9, 64);
    for (const PauliString& p : pauli_enumerate(2, std::vector<int>{1, 2})) {
        const OtocBoundReport rep = check_otoc_bound(toy_spec, toy_cls, p, budget);
        all_hold = all_hold && rep.slack_lower >= -1e-9 && rep.slack_upper >= -1e-9;
        worst_lower = std::min(worst_lower, rep.slack_lower);
        worst_upper = std::min(worst_upper, rep.slack_upper);
        ++checked;
    }

    const auto fxs = five_fixtures();
    const std::vector<int> all_sites{1, 2, 3};
    for (std::size_t k = 0; k < 3; ++k) {
        for (const PauliString& p : pauli_enumerate(3, all_sites)) {
            const OtocBoundReport rep = check_otoc_bound(fxs[k].spec, fxs[k].cls, p, budget);
            all_hold = all_hold && rep.slack_lower >= -1e-9 && rep.slack_upper >= -1e-9;
            worst_lower = std::min(worst_lower, rep.slack_lower);
            worst_upper = std::min(worst_upper, rep.slack_upper);
            ++checked;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << checked << " Paulis, min lower slack " << worst_lower << ", min upper slack "
       << worst_upper << " (need >= -1e-9), runtime " << secs << " s";
    report(all_hold && secs < 30.0, "criterion 6 (otoc revival bound)", os.str());
}

// --- criterion 7 ------------------------------------------------------------
void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng = substream_rng(7700, 0);
    const int n = 7;
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim_of_qubits(n), dim_of_qubits(n));
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = Complex{gauss(rng), gauss(rng)};
    const auto spec = SpectralDecomposition::diagonalize(
        DenseOperator{0.5 * (g + Matrix(g.adjoint())), n});

    double worst = 0.0;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        SubsystemPair pair;
        pair.n_qubits = n;
        for (int s = 1; s <= n; ++s) {
            if (coin(rng) && pair.a_sites.size() < 2) pair.a_sites.push_back(s);
            if (coin(rng) && pair.d_sites.size() < 2) pair.d_sites.push_back(s);
        }
        if (pair.a_sites.empty()) pair.a_sites.push_back(1);
        if (pair.d_sites.empty()) pair.d_sites.push_back(n);
        const double want = static_cast<double>(pair.dim_a_minus_d() * pair.dim_a_minus_d()) /
                            static_cast<double>(pair.dim_a() * pair.dim_a());
        worst = std::max(worst, std::abs(avg_otoc(spec, pair, 0.0) - want));
    }

    const SubsystemPair disjoint{{1}, {n}, n};
    const double f_disjoint = decoding_fidelity(spec, disjoint, 0.0);
    const SubsystemPair same{{1}, {1}, n};
    const double f_same = decoding_fidelity(spec, same, 0.0);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "max |avg_otoc(0) - formula| " << worst << " (need < 1e-9), F(0) disjoint " << f_disjoint
       << " (need 1/4), F(0) same " << f_same << " (need 1), runtime " << secs << " s";
    report(worst < 1e-9 && std::abs(f_disjoint - 0.25) < 1e-9 && std::abs(f_same - 1.0) < 1e-9 &&
               secs < 60.0,
           "criterion 7 (hayden-preskill t=0 values)", os.str());
}

// --- criterion 8 ------------------------------------------------------------
// Fig. 1 qualitative reproduction at n = 8 on the default grid (t in [0, 30],
// 600 points). The alignment clauses are asserted exactly as specified (local
// extrema within ONE grid step of the first three Z1 peaks); measured offsets
// are printed either way.
void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = 8;
    const auto spec = SpectralDecomposition::diagonalize(build_pxp(n));
    std::vector<double> times(600);
    for (int i = 0; i < 600; ++i) times[static_cast<std::size_t>(i)] = 30.0 * i / 599.0;

    const std::vector<double> z1 =
        pauli_weight_overlap_series(spec, PauliString::single(n, 1, PauliLetter::Z), times, 2);
    const std::vector<double> f_disj =
        decoding_fidelity_series(spec, SubsystemPair{{1}, {n}, n}, times, 2);
    const std::vector<double> f_same =
        decoding_fidelity_series(spec, SubsystemPair{{1}, {1}, n}, times, 2);

    // (a) >= 3 revival peaks of height > 0.4 (t > 0).
    std::vector<std::size_t> peaks;
    for (std::size_t i = 5; i + 1 < z1.size(); ++i)
        if (z1[i] > z1[i - 1] && z1[i] >= z1[i + 1] && z1[i] > 0.4) peaks.push_back(i);
    std::ostringstream osa;
    osa << peaks.size() << " Z1 peaks > 0.4 on [0,30]";
    for (std::size_t k = 0; k < std::min<std::size_t>(peaks.size(), 3); ++k)
        osa << " (t=" << times[peaks[k]] << ", h=" << z1[peaks[k]] << ")";
    report(peaks.size() >= 3, "criterion 8a (Z1 revival peaks)", osa.str());

    const auto nearest_extremum_offset = [&](const std::vector<double>& curve, std::size_t center,
                                             bool minimum) {
        // Distance from `center` to the nearest local extremum of `curve`.
        long best = 1000;
        for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
            const bool is_ext = minimum ? (curve[i] < curve[i - 1] && curve[i] <= curve[i + 1])
                                        : (curve[i] > curve[i - 1] && curve[i] >= curve[i + 1]);
            if (is_ext && std::labs(static_cast<long>(i) - static_cast<long>(center)) <
                              std::labs(best))
                best = static_cast<long>(i) - static_cast<long>(center);
        }
        return best;
    };

    bool disj_ok = true, same_ok = true;
    std::ostringstream osb, osc;
    osb << "F(A={1},D={8}) minima offsets from first 3 Z1 peaks (grid steps):";
    osc << "F(A=D={1}) maxima offsets from first 3 Z1 peaks (grid steps):";
    for (std::size_t k = 0; k < std::min<std::size_t>(peaks.size(), 3); ++k) {
        const long od = nearest_extremum_offset(f_disj, peaks[k], true);
        const long os_ = nearest_extremum_offset(f_same, peaks[k], false);
        osb << " " << od;
        osc << " " << os_;
        disj_ok = disj_ok && std::labs(od) <= 1;
        same_ok = same_ok && std::labs(os_) <= 1;
    }
    report(disj_ok, "criterion 8b (decoding-fidelity minima align)", osb.str());
    report(same_ok, "criterion 8c (decoding-fidelity maxima align)", osc.str());

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("     criterion 8 runtime: %.1f s (n = %d)\n", secs, n);
}

// --- criterion 9 ------------------------------------------------------------
void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n : {2, 3}) {
        for (double p : {0.1, 0.5, 0.9}) {
            std::mt19937_64 rng = substream_rng(7900 + n, static_cast<std::uint64_t>(p * 10));
            const Eigen::Index d = dim_of_qubits(n);
            std::normal_distribution<double> gauss(0.0, 1.0);
            Matrix g(d, d);
            for (Eigen::Index j = 0; j < d; ++j)
                for (Eigen::Index i = 0; i < d; ++i) g(i, j) = Complex{gauss(rng), gauss(rng)};
            Matrix m = g * g.adjoint();
            m /= m.trace();
            const DensityMatrix rho = DensityMatrix::from_matrix(std::move(m));

            // Circuit form: controlled rotation (Taylor-exponentiated) then
            // explicit dephasing.
            const Eigen::Index de = d + 1;
            const double alpha = std::asin(std::sqrt(p));
            Matrix r = Matrix::Zero(d * de, d * de);
            for (Eigen::Index i = 0; i < d; ++i) {
                Matrix x = Matrix::Zero(de, de);
                x(i + 1, 0) = 1.0;
                x(0, i + 1) = 1.0;
                const Matrix rot = oracles::expm(-kImag * alpha * x);
                for (Eigen::Index e = 0; e < de; ++e)
                    for (Eigen::Index ff = 0; ff < de; ++ff) r(i * de + e, i * de + ff) = rot(e, ff);
            }
            Matrix joint = Matrix::Zero(d * de, d * de);
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) joint(i * de, j * de) = rho.matrix(i, j);
            Matrix rotated = r * joint * r.adjoint();
            for (Eigen::Index i = 0; i < d * de; ++i)
                for (Eigen::Index j = 0; j < d * de; ++j)
                    if ((i % de) != (j % de)) rotated(i, j) = 0.0;

            const WeakMeasurementOutcome out = weak_measure(rho, p);
            worst = std::max(worst, (out.joint - rotated).cwiseAbs().maxCoeff());
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "max |closed form - circuit| " << worst << " (need < 1e-10) over p in {.1,.5,.9}, d in "
          "{4,8}, runtime "
       << secs << " s";
    report(worst < 1e-10 && secs < 10.0, "criterion 9 (weak-measurement channel)", os.str());
}

// --- criterion 10 -----------------------------------------------------------
void criterion_10() {
    const auto t0 = std::chrono::steady_clock::now();
    // Chaotic synthetic H at n = 4: two integer scar energies, fourteen
    // pairwise-incommensurate surds, and a discrete-Fourier eigenbasis so
    // every computational basis state carries scar weight exactly 2/16.
    const int n = 4;
    const Eigen::Index d = 16;
    SyntheticSpectrum s;
    s.rationals = {make_fraction(0, 1), make_fraction(1, 1)};
    for (long long m : {2LL, 3LL, 5LL, 6LL, 7LL, 10LL, 11LL, 13LL, 14LL, 15LL, 17LL, 19LL, 21LL, 22LL})
        s.irrationals.push_back(Surd{{0, 1}, {1, 1}, m});
    Matrix fourier(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index k = 0; k < d; ++k)
            fourier(j, k) = std::exp(kImag * (2.0 * std::numbers::pi * static_cast<double>(j) *
                                              static_cast<double>(k) / static_cast<double>(d))) /
                            4.0;
    s.basis = fourier;
    const SyntheticResult res = build_synthetic(s, 0);
    const auto spec = SpectralDecomposition::diagonalize(res.hamiltonian);
    const EigenClassification cls = classify(spec, 1e-9, 64);

    std::mt19937_64 rng = substream_rng(8000, 0);
    const StateVector phi = make_free_state(spec, cls, random_unit_vector(cls.n_rational(), rng));
    const DenseOperator obs = PauliString::single(n, 1, PauliLetter::Z).to_operator();

    const RecoveryRun run = run_recovery(spec, cls, phi, 2.0, 1, 0.1, obs);
    const auto [haar_mean, haar_err] = haar_twirl_reference(obs, 3, 200, 8001);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << "closed-form gap " << run.closed_form_gap << " (need < 1e-9), |exact rec - direct| "
       << std::abs(run.exact_reconstruction - run.direct_expectation)
       << " (need < 1e-9), estimator gap " << run.haar_gap << " (need < 0.05), scar diag "
       << run.scar_overlap_diag << ", haar reference " << haar_mean << " +- " << haar_err
       << " vs tr(O)/d = " << obs.matrix.trace().real() / 16.0 << ", runtime " << secs << " s";
    report(run.closed_form_gap < 1e-9 &&
               std::abs(run.exact_reconstruction - run.direct_expectation) < 1e-9 &&
               run.haar_gap < 0.05 && secs < 120.0,
           "criterion 10 (recovery protocol)", os.str());
}

// --- criterion 11 -----------------------------------------------------------
void criterion_11() {
    const auto t0 = std::chrono::steady_clock::now();
    namespace fs = std::filesystem;
    bool ok = true;
    std::ostringstream os;
    for (const std::string experiment :
         {std::string("hayden-preskill"), std::string("revival"), std::string("spectrum")}) {
        revival_cli::ExperimentConfig cfg;
        cfg.experiment = experiment;
        cfg.ham_kind = "synthetic";
        cfg.n_qubits = 3;
        cfg.synthetic_rationals = "0, 1, -1, 2";
        cfg.synthetic_irrationals = "sqrt(2), sqrt(3), sqrt(5), sqrt(7)";
        cfg.grid = {0.0, 8.0, 11};
        cfg.seed = 4242;
        cfg.threads = 2;
        const fs::path d1 = fs::temp_directory_path() / ("revival_acc11_a_" + experiment);
        const fs::path d2 = fs::temp_directory_path() / ("revival_acc11_b_" + experiment);
        fs::remove_all(d1);
        fs::remove_all(d2);
        cfg.out_dir = d1.string();
        revival_cli::run_experiment(cfg);
        cfg.out_dir = d2.string();
        revival_cli::run_experiment(cfg);

        const auto slurp = [](const fs::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        const std::string name = experiment + ".csv";
        const bool same = slurp(d1 / name) == slurp(d2 / name);
        ok = ok && same;
        os << experiment << (same ? " identical; " : " DIFFERS; ");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    os << "runtime " << secs << " s";
    report(ok, "criterion 11 (byte-identical determinism)", os.str());
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc + 1; ++i) {
        if (i < argc && std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[i + 1]);
    }
    using Fn = void (*)();
    const Fn criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                           criterion_5, criterion_6, criterion_7, criterion_8,
                           criterion_9, criterion_10, criterion_11};
    if (only >= 1 && only <= 11) {
        criteria[only - 1]();
    } else {
        for (Fn fn : criteria) fn();
    }
    if (g_failures > 0) {
        std::printf("%d criterion check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criterion checks passed\n");
    return 0;
}
