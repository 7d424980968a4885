#include "revival/scrambling.hpp"

#include "revival/operators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace revival {

namespace {

void check_sites(std::span<const int> sites, int n) {
    std::set<int> seen;
    for (int s : sites) {
        if (s < 1 || s > n) throw std::out_of_range("SubsystemPair: site out of range");
        if (!seen.insert(s).second) throw std::invalid_argument("SubsystemPair: duplicate site");
    }
}

template <typename Fn>
void parallel_over(std::size_t count, int threads, Fn&& fn) {
    const int width = std::max(1, threads);
    if (width == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(width));
    for (int w = 0; w < width; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (std::thread& th : pool) th.join();
}

// Precomputed data for an avg_otoc sweep: the A-Paulis rotated into the
// eigenbasis and the basis actions of the D-Paulis.
struct AvgOtocPlan {
    std::vector<Matrix> a_in_basis;
    std::vector<PauliString::BasisAction> d_actions;
    Eigen::Index d = 0;

    AvgOtocPlan(const SpectralDecomposition& spec, const SubsystemPair& pair) {
        pair.validate();
        if (pair.n_qubits != spec.n_qubits)
            throw std::invalid_argument("avg_otoc: subsystem register size differs from spectrum");
        if (pair.term_count() > kMaxOtocTerms)
            throw std::invalid_argument("avg_otoc: enumeration exceeds the term guard");
        d = spec.dim();
        for (const PauliString& p : pauli_enumerate(pair.n_qubits, pair.a_sites))
            a_in_basis.push_back(spec.eigenvectors.adjoint() * p.to_operator().matrix *
                                 spec.eigenvectors);
        for (const PauliString& p : pauli_enumerate(pair.n_qubits, pair.d_sites))
            d_actions.push_back(p.basis_action());
    }

    double evaluate(const SpectralDecomposition& spec, double t) const {
        // W(t) = V e^{iEt}; each evolved A-Pauli is M = W a W^dag, then every
        // D-term costs O(d^2) through the permutation-phase action:
        //   tr(M P M P) = sum_j conj(ph_j) sum_i ph_i M_{i,j} M_{pi(j), pi(i)}
        // with pi(i) = i ^ mask. Reading the second factor through the
        // transpose keeps both inner accesses within one column.
        const Vector ph = spec.propagator_phases(-t);
        const Matrix w = spec.eigenvectors * ph.asDiagonal();
        std::vector<double> terms;
        terms.reserve(a_in_basis.size() * d_actions.size());
        Matrix m(d, d), mt(d, d);
        Vector gathered(d);
        for (const Matrix& a : a_in_basis) {
            m.noalias() = w * a * w.adjoint();
            mt = m.transpose();
            for (const PauliString::BasisAction& act : d_actions) {
                const auto mask = static_cast<Eigen::Index>(act.flip_mask);
                Complex acc{0.0, 0.0};
                for (Eigen::Index j = 0; j < d; ++j) {
                    const auto col_a = m.col(j);
                    const auto col_b = mt.col(j ^ mask);
                    for (Eigen::Index i = 0; i < d; ++i)
                        gathered(i) = act.phases(i) * col_b(i ^ mask);
                    acc += std::conj(act.phases(j)) * col_a.cwiseProduct(gathered).sum();
                }
                terms.push_back(acc.real() / static_cast<double>(d));
            }
        }
        return tree_sum(std::span<const double>(terms)) / static_cast<double>(terms.size());
    }
};

}  // namespace

void SubsystemPair::validate() const {
    if (n_qubits < 1) throw std::invalid_argument("SubsystemPair: empty register");
    check_sites(a_sites, n_qubits);
    check_sites(d_sites, n_qubits);
}

Eigen::Index SubsystemPair::dim_a() const { return dim_of_qubits(static_cast<int>(a_sites.size())); }
Eigen::Index SubsystemPair::dim_d() const { return dim_of_qubits(static_cast<int>(d_sites.size())); }

Eigen::Index SubsystemPair::dim_a_minus_d() const {
    const std::set<int> ds(d_sites.begin(), d_sites.end());
    int count = 0;
    for (int s : a_sites)
        if (!ds.contains(s)) ++count;
    return dim_of_qubits(count);
}

std::size_t SubsystemPair::term_count() const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < a_sites.size() + d_sites.size(); ++i) c *= 4;
    return c;
}

Complex otoc(const SpectralDecomposition& spec, const DenseOperator& o1, const DenseOperator& o2,
             double t) {
    if (o1.dim() != o2.dim() || o1.dim() != spec.dim())
        throw std::invalid_argument("otoc: dimension mismatch");
    const DenseOperator evolved = evolve_operator(spec, o1, t);
    const Matrix prod = evolved.matrix * o2.matrix;
    return trace_product(prod, prod) / static_cast<double>(o1.dim());
}

double avg_otoc(const SpectralDecomposition& spec, const SubsystemPair& pair, double t) {
    return AvgOtocPlan(spec, pair).evaluate(spec, t);
}

std::vector<double> avg_otoc_series(const SpectralDecomposition& spec, const SubsystemPair& pair,
                                    std::span<const double> times, int threads) {
    const AvgOtocPlan plan(spec, pair);
    std::vector<double> out(times.size());
    parallel_over(times.size(), threads,
                  [&](std::size_t i) { out[i] = plan.evaluate(spec, times[i]); });
    return out;
}

double decoding_fidelity(const SpectralDecomposition& spec, const SubsystemPair& pair, double t) {
    const double avg = avg_otoc(spec, pair, t);
    const double da2 = static_cast<double>(pair.dim_a() * pair.dim_a());
    if (avg <= 1e-12) return std::numeric_limits<double>::infinity();
    return 1.0 / (da2 * avg);
}

std::vector<double> decoding_fidelity_series(const SpectralDecomposition& spec,
                                             const SubsystemPair& pair,
                                             std::span<const double> times, int threads) {
    const std::vector<double> avg = avg_otoc_series(spec, pair, times, threads);
    const double da2 = static_cast<double>(pair.dim_a() * pair.dim_a());
    std::vector<double> out(avg.size());
    for (std::size_t i = 0; i < avg.size(); ++i)
        out[i] = avg[i] <= 1e-12 ? std::numeric_limits<double>::infinity() : 1.0 / (da2 * avg[i]);
    return out;
}

double pauli_weight_overlap(const SpectralDecomposition& spec, const PauliString& p, double t) {
    const double val = pauli_weight_overlap_series(spec, p, std::vector<double>{t}, 1).front();
    return val;
}

std::vector<double> pauli_weight_overlap_series(const SpectralDecomposition& spec,
                                                const PauliString& p, std::span<const double> times,
                                                int threads) {
    if (p.dim() != spec.dim()) throw std::invalid_argument("pauli_weight_overlap: dimension mismatch");
    const Matrix in_basis = spec.eigenvectors.adjoint() * p.to_operator().matrix * spec.eigenvectors;
    const Eigen::MatrixXd weights = in_basis.cwiseAbs2();
    const Eigen::Index d = spec.dim();
    std::vector<double> out(times.size());
    parallel_over(times.size(), threads, [&](std::size_t k) {
        // <P(t), P> = (1/d) sum_ij e^{-i(E_i - E_j) t} |Ptil_ij|^2
        Vector u(d);
        for (Eigen::Index i = 0; i < d; ++i) u(i) = std::exp(kImag * spec.eigenvalues(i) * times[k]);
        const Vector v = weights.cast<Complex>() * u;
        Complex s{0.0, 0.0};
        for (Eigen::Index i = 0; i < d; ++i) s += std::conj(u(i)) * v(i);
        out[k] = s.real() / static_cast<double>(d);
    });
    return out;
}

OtocBoundReport check_otoc_bound(const SpectralDecomposition& spec, const EigenClassification& cls,
                                 const PauliString& o1, const OptimizerBudget& budget) {
    const double t = revival_period(cls);
    const DenseOperator op = o1.to_operator();

    OtocBoundReport rep;
    rep.otoc_value = otoc(spec, op, op, t).real();
    rep.overlap = pauli_weight_overlap(spec, o1, t);
    rep.intermediate_bound = 2.0 * rep.overlap * rep.overlap - 1.0;
    rep.monotone_g_lower = monotone_G(spec, cls, op, budget).value;
    rep.slack_lower = rep.otoc_value - rep.intermediate_bound;
    rep.slack_upper = 1.0 - rep.otoc_value;
    rep.holds = rep.slack_lower >= -1e-9 && rep.slack_upper >= -1e-9;
    return rep;
}

}  // namespace revival
