#include "revival/resource.hpp"

#include "revival/rng.hpp"

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace revival {

namespace {

constexpr double kFidelityRoundoff = 1e-10;

double clamp_fidelity(double f, const char* where) {
    if (f > 1.0 + kFidelityRoundoff)
        throw std::runtime_error(std::string(where) + ": fidelity exceeds 1 beyond roundoff");
    return std::clamp(f, 0.0, 1.0);
}

Vector eigen_coefficients(const SpectralDecomposition& spec, const StateVector& psi) {
    if (spec.dim() != psi.dim()) throw std::invalid_argument("dimension mismatch with spectrum");
    return spec.eigenvectors.adjoint() * psi.amplitudes;
}

// (1/d) sum_ij e^{-i(E_i - E_j) t} W_ij for elementwise weights W = |O_tilde|^2.
Complex operator_revival_overlap(const Eigen::MatrixXd& weights, const RealVector& energies, double t) {
    const Eigen::Index d = energies.size();
    Vector u(d);
    for (Eigen::Index i = 0; i < d; ++i) u(i) = std::exp(kImag * energies(i) * t);
    const Vector v = weights.cast<Complex>() * u;
    Complex s{0.0, 0.0};
    for (Eigen::Index i = 0; i < d; ++i) s += std::conj(u(i)) * v(i);
    return s / static_cast<double>(d);
}

// exp(i K) for the Hermitian generator packed as n diagonal entries followed
// by (re, im) pairs for the strict upper triangle, row-major.
Matrix unitary_from_generator(std::span<const double> params, int n) {
    Matrix k(n, n);
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) k(i, i) = params[p++];
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Complex v{params[p], params[p + 1]};
            p += 2;
            k(i, j) = v;
            k(j, i) = std::conj(v);
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(k);
    Vector ph(n);
    for (int i = 0; i < n; ++i) ph(i) = std::exp(kImag * es.eigenvalues()(i));
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

std::size_t generator_param_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
}

// Golden-section maximization on [lo, hi]; returns the best x found. The
// objective need not be unimodal: the caller compares against its incumbent.
template <typename F>
double golden_max(F&& f, double lo, double hi, int iters, long long& evals) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - (b - a) * invphi;
    double d = a + (b - a) * invphi;
    double fc = f(c), fd = f(d);
    evals += 2;
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * invphi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * invphi;
            fd = f(d);
        }
        ++evals;
    }
    return fc > fd ? c : d;
}

struct AscentOutcome {
    double value = -1.0;
    std::vector<double> params;
};

// Coordinate-wise golden-section ascent over [-pi, pi]^k.
template <typename F>
AscentOutcome coordinate_ascent(F&& objective, std::vector<double> params, int sweeps,
                                long long& evals) {
    constexpr double pi = std::numbers::pi;
    AscentOutcome out;
    out.value = objective(params);
    ++evals;
    out.params = params;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (std::size_t c = 0; c < params.size(); ++c) {
            const double incumbent = out.value;
            const double x = golden_max(
                [&](double v) {
                    params[c] = v;
                    return objective(params);
                },
                -pi, pi, 28, evals);
            params[c] = x;
            const double fx = objective(params);
            ++evals;
            if (fx > incumbent) {
                out.value = fx;
                out.params = params;
            } else {
                params[c] = out.params[c];
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> permutation_set(int n_irr, int restarts, std::uint64_t seed) {
    std::vector<int> base(static_cast<std::size_t>(n_irr));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    if (n_irr <= 6) {
        std::vector<int> p = base;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    } else {
        perms.push_back(base);  // identity always included
        std::mt19937_64 rng = substream_rng(seed, 0x7065726dULL);
        for (int r = 1; r < std::max(2, restarts); ++r) {
            std::vector<int> p = base;
            std::shuffle(p.begin(), p.end(), rng);
            perms.push_back(std::move(p));
        }
    }
    return perms;
}

// objective_factory(perm) must return a thread-safe callable
// double(std::span<const double> params) over the block+phase parameters.
template <typename ObjectiveFactory>
MonotoneEstimate run_free_unitary_search(char kind, int n_rat, int n_irr,
                                         const OptimizerBudget& budget,
                                         ObjectiveFactory&& objective_factory) {
    if (budget.restarts < 1 || budget.iterations < 1)
        throw std::invalid_argument("monotone estimator: budget must be positive");

    const std::size_t block_params = generator_param_count(n_rat);
    const std::size_t total_params = block_params + static_cast<std::size_t>(n_irr);
    const auto perms = permutation_set(n_irr, budget.restarts, budget.seed);

    struct Task {
        int restart;
        std::size_t perm_index;
    };
    std::vector<Task> tasks;
    for (int r = 0; r < budget.restarts; ++r)
        for (std::size_t p = 0; p < perms.size(); ++p) tasks.push_back({r, p});

    struct TaskResult {
        double value = -1.0;
        std::vector<double> params;
        long long evals = 0;
    };
    std::vector<TaskResult> results(tasks.size());

    const auto run_task = [&](std::size_t ti) {
        const Task& task = tasks[ti];
        auto objective = objective_factory(perms[task.perm_index]);
        std::vector<double> init(total_params, 0.0);
        if (task.restart > 0) {
            std::mt19937_64 rng =
                substream_rng(budget.seed, static_cast<std::uint64_t>(ti) + 1);
            std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);
            for (double& v : init) v = uni(rng);
        }
        TaskResult res;
        const AscentOutcome outcome = coordinate_ascent(
            [&](const std::vector<double>& p) { return objective(std::span<const double>(p)); },
            std::move(init), budget.iterations, res.evals);
        res.value = outcome.value;
        res.params = outcome.params;
        results[ti] = std::move(res);
    };

    const int width = std::max(1, budget.threads);
    if (width == 1) {
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) run_task(ti);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < width; ++w)
            pool.emplace_back([&] {
                for (std::size_t ti = next.fetch_add(1); ti < tasks.size(); ti = next.fetch_add(1))
                    run_task(ti);
            });
        for (std::thread& th : pool) th.join();
    }

    MonotoneEstimate est;
    est.kind = kind;
    est.budget = budget;
    est.restart_values.assign(static_cast<std::size_t>(budget.restarts), 0.0);
    double best = -1.0;
    std::size_t best_task = 0;
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        est.evaluations += results[ti].evals;
        auto& rv = est.restart_values[static_cast<std::size_t>(tasks[ti].restart)];
        rv = std::max(rv, std::clamp(results[ti].value, 0.0, 1.0));
        if (results[ti].value > best) {
            best = results[ti].value;
            best_task = ti;
        }
    }
    est.value = std::clamp(best, 0.0, 1.0);
    est.best_permutation = perms[tasks[best_task].perm_index];
    const std::vector<double>& bp = results[best_task].params;
    est.best_block_params.assign(bp.begin(), bp.begin() + static_cast<std::ptrdiff_t>(block_params));
    est.best_phases.assign(bp.begin() + static_cast<std::ptrdiff_t>(block_params), bp.end());
    return est;
}

// Revival fidelity of the eigenbasis coefficient vector b under the phased
// permutation (perm, phases) and rational block applied to it.
struct StateObjective {
    Vector a_rational;       // coefficients on A
    RealVector b_weights;    // |a_i|^2 on B
    Vector phases_rational;  // e^{-i E_i 2 pi T}, i in A
    Vector phases_irrational;
    int n_rat;
    int n_irr;

    double fidelity(std::span<const double> params, std::span<const int> perm) const {
        Complex s{0.0, 0.0};
        if (n_rat > 0) {
            const Matrix block = unitary_from_generator(params.subspan(0, generator_param_count(n_rat)),
                                                        n_rat);
            const Vector b = block * a_rational;
            for (int i = 0; i < n_rat; ++i) s += phases_rational(i) * std::norm(b(i));
        }
        const std::size_t off = generator_param_count(n_rat);
        for (int k = 0; k < n_irr; ++k) {
            // The slot phase multiplies the coefficient; |.|^2 keeps the
            // parameter in the search space without affecting the value.
            const Complex c = std::exp(kImag * params[off + static_cast<std::size_t>(k)]) *
                              std::sqrt(b_weights(perm[static_cast<std::size_t>(k)]));
            s += phases_irrational(k) * std::norm(c);
        }
        return std::abs(s);
    }
};

StateObjective make_state_objective(const SpectralDecomposition& spec,
                                    const EigenClassification& cls, const Vector& coeffs) {
    const double t = revival_period(cls);
    StateObjective obj;
    obj.n_rat = cls.n_rational();
    obj.n_irr = cls.n_irrational();
    obj.a_rational.resize(obj.n_rat);
    obj.phases_rational.resize(obj.n_rat);
    obj.b_weights.resize(obj.n_irr);
    obj.phases_irrational.resize(obj.n_irr);
    for (int i = 0; i < obj.n_rat; ++i) {
        const int idx = cls.rational_indices[static_cast<std::size_t>(i)];
        obj.a_rational(i) = coeffs(idx);
        obj.phases_rational(i) = std::exp(-kImag * spec.eigenvalues(idx) * t);
    }
    for (int k = 0; k < obj.n_irr; ++k) {
        const int idx = cls.irrational_indices[static_cast<std::size_t>(k)];
        obj.b_weights(k) = std::norm(coeffs(idx));
        obj.phases_irrational(k) = std::exp(-kImag * spec.eigenvalues(idx) * t);
    }
    return obj;
}

MonotoneEstimate estimate_R_from_coefficients(const SpectralDecomposition& spec,
                                              const EigenClassification& cls, const Vector& coeffs,
                                              const OptimizerBudget& budget, char kind) {
    const StateObjective obj = make_state_objective(spec, cls, coeffs);
    return run_free_unitary_search(kind, obj.n_rat, obj.n_irr, budget,
                                   [&obj](const std::vector<int>& perm) {
                                       return [&obj, perm](std::span<const double> params) {
                                           return 1.0 - obj.fidelity(params, perm);
                                       };
                                   });
}

}  // namespace

void FreeUnitarySpec::validate(double tol) const {
    const Eigen::Index n_rat = rational_block.rows();
    if (rational_block.cols() != n_rat)
        throw std::invalid_argument("FreeUnitarySpec: rational block is not square");
    const Matrix g = rational_block.adjoint() * rational_block;
    if ((g - Matrix::Identity(n_rat, n_rat)).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("FreeUnitarySpec: rational block is not unitary");
    if (irrational_phases.size() != static_cast<Eigen::Index>(irrational_perm.size()))
        throw std::invalid_argument("FreeUnitarySpec: phases and permutation sizes differ");
    std::vector<bool> hit(irrational_perm.size(), false);
    for (int v : irrational_perm) {
        if (v < 0 || v >= static_cast<int>(irrational_perm.size()) || hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("FreeUnitarySpec: not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
    for (Eigen::Index i = 0; i < irrational_phases.size(); ++i)
        if (!std::isfinite(irrational_phases(i)))
            throw std::invalid_argument("FreeUnitarySpec: non-finite phase");
}

FreeUnitarySpec FreeUnitarySpec::identity(int n_rational, int n_irrational) {
    FreeUnitarySpec u;
    u.rational_block = Matrix::Identity(n_rational, n_rational);
    u.irrational_perm.resize(static_cast<std::size_t>(n_irrational));
    std::iota(u.irrational_perm.begin(), u.irrational_perm.end(), 0);
    u.irrational_phases = RealVector::Zero(n_irrational);
    return u;
}

FreeUnitarySpec FreeUnitarySpec::random(int n_rational, int n_irrational, std::mt19937_64& rng) {
    FreeUnitarySpec u;
    u.rational_block = haar_unitary(n_rational, rng);
    u.irrational_perm.resize(static_cast<std::size_t>(n_irrational));
    std::iota(u.irrational_perm.begin(), u.irrational_perm.end(), 0);
    std::shuffle(u.irrational_perm.begin(), u.irrational_perm.end(), rng);
    u.irrational_phases.resize(n_irrational);
    std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < n_irrational; ++i) u.irrational_phases(i) = uni(rng);
    return u;
}

double revival_fidelity(const SpectralDecomposition& spec, const EigenClassification& cls,
                        const StateVector& psi) {
    const double t = revival_period(cls);
    const Vector a = eigen_coefficients(spec, psi);
    const Vector ph = spec.propagator_phases(t);
    Complex s{0.0, 0.0};
    for (Eigen::Index i = 0; i < a.size(); ++i) s += ph(i) * std::norm(a(i));
    return clamp_fidelity(std::abs(s), "revival_fidelity");
}

double revival_fidelity_mixed(const SpectralDecomposition& spec, const EigenClassification& cls,
                              const DensityMatrix& rho) {
    const double t = revival_period(cls);
    if (spec.dim() != rho.dim()) throw std::invalid_argument("revival_fidelity_mixed: dimension mismatch");

    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::invalid_argument("revival_fidelity_mixed: rho is not PSD within tolerance");
    RealVector lam = es.eigenvalues().cwiseMax(0.0);
    const Matrix sqrt_rho =
        es.eigenvectors() * lam.cwiseSqrt().asDiagonal().toDenseMatrix().cast<Complex>() *
        es.eigenvectors().adjoint();

    // tr sqrt(sqrt(rho) rho(t) sqrt(rho)) = || sqrt(rho(t)) sqrt(rho) ||_1;
    // the singular-value route keeps near-zero modes at O(eps) error instead
    // of O(sqrt(eps)). rho(t) is a unitary conjugation of rho, so its square
    // root is the conjugated sqrt_rho.
    const Matrix u = spec.propagator(t);
    const Matrix sqrt_evolved = u * sqrt_rho * u.adjoint();
    const Matrix a = sqrt_evolved * sqrt_rho;
    Eigen::BDCSVD<Matrix> svd(a);
    const double f = svd.singularValues().sum();
    return clamp_fidelity(f, "revival_fidelity_mixed");
}

double revival_correlator(const SpectralDecomposition& spec, const EigenClassification& cls,
                          const DenseOperator& o) {
    if (spec.dim() != o.dim()) throw std::invalid_argument("revival_correlator: dimension mismatch");
    if (std::abs(hs_norm(o) - 1.0) > 1e-9)
        throw std::invalid_argument("revival_correlator: observable is not normalized");
    const double t = revival_period(cls);
    const Matrix in_basis = spec.eigenvectors.adjoint() * o.matrix * spec.eigenvectors;
    const Eigen::MatrixXd weights = in_basis.cwiseAbs2();
    const Complex overlap = operator_revival_overlap(weights, spec.eigenvalues, t);
    return clamp_fidelity(std::norm(overlap), "revival_correlator");
}

StateVector make_free_state(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const Vector& rational_coefficients) {
    if (rational_coefficients.size() != cls.n_rational())
        throw std::invalid_argument("make_free_state: coefficient count differs from |A|");
    if (cls.n_rational() == 0) throw std::invalid_argument("make_free_state: A is empty");
    if (std::abs(rational_coefficients.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("make_free_state: coefficients are not normalized");
    Vector amps = Vector::Zero(spec.dim());
    for (int i = 0; i < cls.n_rational(); ++i)
        amps += rational_coefficients(i) *
                spec.eigenvectors.col(cls.rational_indices[static_cast<std::size_t>(i)]);
    StateVector out{std::move(amps), spec.n_qubits};
    return out.normalize();
}

StateVector make_free_state_irrational(const SpectralDecomposition& spec,
                                       const EigenClassification& cls, int eigen_index) {
    if (!std::binary_search(cls.irrational_indices.begin(), cls.irrational_indices.end(), eigen_index))
        throw std::invalid_argument("make_free_state_irrational: index is not in B");
    return {spec.eigenvectors.col(eigen_index), spec.n_qubits};
}

DenseOperator make_free_unitary(const SpectralDecomposition& spec, const EigenClassification& cls,
                                const FreeUnitarySpec& u) {
    u.validate();
    const int n_rat = cls.n_rational();
    const int n_irr = cls.n_irrational();
    if (u.rational_block.rows() != n_rat)
        throw std::invalid_argument("make_free_unitary: block size differs from |A|");
    if (static_cast<int>(u.irrational_perm.size()) != n_irr)
        throw std::invalid_argument("make_free_unitary: permutation size differs from |B|");

    const Eigen::Index d = spec.dim();
    Matrix in_basis = Matrix::Zero(d, d);
    for (int i = 0; i < n_rat; ++i)
        for (int j = 0; j < n_rat; ++j)
            in_basis(cls.rational_indices[static_cast<std::size_t>(i)],
                     cls.rational_indices[static_cast<std::size_t>(j)]) = u.rational_block(i, j);
    for (int k = 0; k < n_irr; ++k) {
        const int row = cls.irrational_indices[static_cast<std::size_t>(k)];
        const int col = cls.irrational_indices[static_cast<std::size_t>(
            u.irrational_perm[static_cast<std::size_t>(k)])];
        in_basis(row, col) = std::exp(kImag * u.irrational_phases(k));
    }
    Matrix full = spec.eigenvectors * in_basis * spec.eigenvectors.adjoint();
    DenseOperator out{std::move(full), spec.n_qubits};
    if (!out.is_unitary(1e-9)) throw std::runtime_error("make_free_unitary: result is not unitary");
    return out;
}

FreenessCheck is_free_unitary(const SpectralDecomposition& spec, const EigenClassification& cls,
                              const DenseOperator& u, double tol) {
    if (spec.dim() != u.dim()) throw std::invalid_argument("is_free_unitary: dimension mismatch");
    if (!u.is_unitary(std::max(tol, kUnitaryTol)))
        throw std::invalid_argument("is_free_unitary: input is not unitary");

    const Matrix in_basis = spec.eigenvectors.adjoint() * u.matrix * spec.eigenvectors;
    const auto& a = cls.rational_indices;
    const auto& b = cls.irrational_indices;

    FreenessCheck check;
    double off2 = 0.0;
    for (int ia : a)
        for (int jb : b) off2 += std::norm(in_basis(ia, jb)) + std::norm(in_basis(jb, ia));
    check.offblock_residual = std::sqrt(off2);

    // The B-B block must be a phased permutation: per row, all mass on one
    // unit-modulus entry.
    bool bijective = true;
    std::vector<bool> used(b.size(), false);
    double dev2 = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double mag = std::abs(in_basis(b[k], b[j]));
            if (mag > best) {
                best = mag;
                arg = j;
            }
        }
        if (used[arg]) bijective = false;
        used[arg] = true;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Complex v = in_basis(b[k], b[j]);
            if (j == arg) {
                const double mag = std::abs(v);
                dev2 += (mag > 0) ? std::norm(v - v / mag) : 1.0;
            } else {
                dev2 += std::norm(v);
            }
        }
    }
    check.permutation_residual = std::sqrt(dev2);
    check.free = bijective && check.offblock_residual <= tol && check.permutation_residual <= tol;
    return check;
}

nlohmann::json monotone_report(const MonotoneEstimate& est) {
    return nlohmann::json{{"kind", std::string(1, est.kind)},
                          {"value", est.value},
                          {"seed", est.budget.seed},
                          {"budget", {{"restarts", est.budget.restarts},
                                      {"iterations", est.budget.iterations},
                                      {"threads", est.budget.threads}}},
                          {"restart_values", est.restart_values},
                          {"evaluations", est.evaluations},
                          {"best_permutation", est.best_permutation},
                          {"best_block_params", est.best_block_params},
                          {"best_phases", est.best_phases}};
}

MonotoneEstimate monotone_R(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const StateVector& psi, const OptimizerBudget& budget) {
    const Vector a = eigen_coefficients(spec, psi);
    return estimate_R_from_coefficients(spec, cls, a, budget, 'R');
}

MonotoneEstimate monotone_G(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const DenseOperator& o, const OptimizerBudget& budget) {
    if (std::abs(hs_norm(o) - 1.0) > 1e-9)
        throw std::invalid_argument("monotone_G: observable is not normalized");
    const double t = revival_period(cls);
    const Matrix in_basis = spec.eigenvectors.adjoint() * o.matrix * spec.eigenvectors;
    const int n_rat = cls.n_rational();
    const int n_irr = cls.n_irrational();
    const Eigen::Index d = spec.dim();

    const auto objective_factory = [&, in_basis](const std::vector<int>& perm) {
        return [&, in_basis, perm](std::span<const double> params) {
            Matrix u = Matrix::Zero(d, d);
            Matrix block;
            if (n_rat > 0)
                block = unitary_from_generator(params.subspan(0, generator_param_count(n_rat)), n_rat);
            for (int i = 0; i < n_rat; ++i)
                for (int j = 0; j < n_rat; ++j)
                    u(cls.rational_indices[static_cast<std::size_t>(i)],
                      cls.rational_indices[static_cast<std::size_t>(j)]) = block(i, j);
            const std::size_t off = generator_param_count(n_rat);
            for (int k = 0; k < n_irr; ++k) {
                const int row = cls.irrational_indices[static_cast<std::size_t>(k)];
                const int col = cls.irrational_indices[static_cast<std::size_t>(
                    perm[static_cast<std::size_t>(k)])];
                u(row, col) = std::exp(kImag * params[off + static_cast<std::size_t>(k)]);
            }
            const Matrix conj = u.adjoint() * in_basis * u;
            const Eigen::MatrixXd weights = conj.cwiseAbs2();
            const Complex overlap = operator_revival_overlap(weights, spec.eigenvalues, t);
            return 1.0 - std::min(1.0, std::norm(overlap));
        };
    };
    return run_free_unitary_search('G', n_rat, n_irr, budget, objective_factory);
}

MonotoneEstimate monotone_D(const SpectralDecomposition& spec, const EigenClassification& cls,
                            const DenseOperator& u, const OptimizerBudget& budget) {
    if (spec.dim() != u.dim()) throw std::invalid_argument("monotone_D: dimension mismatch");
    if (!u.is_unitary(1e-8)) throw std::invalid_argument("monotone_D: input is not unitary");
    (void)revival_period(cls);

    const int n_rat = cls.n_rational();
    const Eigen::Index d = spec.dim();
    // Coefficients of U|psi_j> in the eigenbasis, all j at once.
    const Matrix u_in_basis = spec.eigenvectors.adjoint() * u.matrix * spec.eigenvectors;

    OptimizerBudget inner = budget;
    inner.restarts = 1;
    inner.iterations = std::max(1, budget.iterations / 2);
    inner.threads = 1;

    const auto inner_value = [&](const Vector& coeffs) {
        return estimate_R_from_coefficients(spec, cls, coeffs, inner, 'R').value;
    };

    MonotoneEstimate best;
    best.kind = 'D';
    best.budget = budget;
    best.value = -1.0;
    long long evals = 0;

    // Irrational eigenstate inputs.
    std::vector<double> best_state;
    for (int jb : cls.irrational_indices) {
        const double v = inner_value(u_in_basis.col(jb));
        ++evals;
        if (v > best.value) {
            best.value = v;
            best_state = {static_cast<double>(jb)};
        }
    }

    // Rational-span inputs: ascent over the complex coefficient vector
    // (re/im interleaved, normalized on evaluation).
    if (n_rat > 0) {
        const Matrix u_cols_a = [&] {
            Matrix m(d, n_rat);
            for (int i = 0; i < n_rat; ++i)
                m.col(i) = u_in_basis.col(cls.rational_indices[static_cast<std::size_t>(i)]);
            return m;
        }();
        const auto state_objective = [&](const std::vector<double>& p) {
            Vector c(n_rat);
            for (int i = 0; i < n_rat; ++i) c(i) = Complex{p[2 * static_cast<std::size_t>(i)],
                                                           p[2 * static_cast<std::size_t>(i) + 1]};
            const double nrm = c.norm();
            if (nrm < 1e-12) return 0.0;
            c /= nrm;
            return inner_value(u_cols_a * c);
        };
        best.restart_values.assign(static_cast<std::size_t>(budget.restarts), 0.0);
        for (int r = 0; r < budget.restarts; ++r) {
            std::vector<double> init(2 * static_cast<std::size_t>(n_rat), 0.0);
            if (r == 0) {
                init[0] = 1.0;
            } else {
                std::mt19937_64 rng = substream_rng(budget.seed, 0x44551100ULL + static_cast<std::uint64_t>(r));
                std::normal_distribution<double> gauss(0.0, 1.0);
                for (double& v : init) v = gauss(rng);
            }
            const AscentOutcome outcome = coordinate_ascent(state_objective, std::move(init),
                                                            budget.iterations, evals);
            best.restart_values[static_cast<std::size_t>(r)] =
                std::clamp(outcome.value, 0.0, 1.0);
            if (outcome.value > best.value) {
                best.value = outcome.value;
                best_state = outcome.params;
            }
        }
    }

    best.value = std::clamp(best.value, 0.0, 1.0);
    best.evaluations = evals;
    best.best_block_params = std::move(best_state);
    return best;
}

}  // namespace revival
