#include "revival_cli/runner.hpp"

#include "revival/hamiltonians.hpp"
#include "revival/operators.hpp"
#include "revival/pauli.hpp"
#include "revival/protocols.hpp"
#include "revival/resource.hpp"
#include "revival/rng.hpp"
#include "revival/scrambling.hpp"
#include "revival/version.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

namespace revival_cli {

using namespace revival;

namespace {

std::vector<double> make_grid(const TimeGrid& g) {
    std::vector<double> t(static_cast<std::size_t>(g.points));
    for (int i = 0; i < g.points; ++i)
        t[static_cast<std::size_t>(i)] =
            g.start + (g.stop - g.start) * static_cast<double>(i) / static_cast<double>(g.points - 1);
    return t;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// CSV contract: comma separators, '.' decimal point, LF endings, 17
// significant digits.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::string& header) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open " + path.string());
        out_ << header << "\n";
    }
    void row(std::initializer_list<double> values) {
        bool first = true;
        for (double v : values) {
            if (!first) out_ << ",";
            out_ << format_value(v);
            first = false;
        }
        out_ << "\n";
    }

  private:
    std::ofstream out_;
};

Fraction parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_fraction(std::stoll(text), 1);
        return make_fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ConfigError("bad fraction: " + text);
    }
}

// "a+b*sqrt(m)" with optional rational a and b; "sqrt(2)", "2*sqrt(3)",
// "1/2+1/3*sqrt(5)", "-1+sqrt(7)".
Surd parse_surd(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](char c) { return c == ' '; }), text.end());
    const auto sq = text.find("sqrt(");
    if (sq == std::string::npos || text.back() != ')')
        throw ConfigError("bad surd (expected a+b*sqrt(m)): " + text);
    Surd s;
    try {
        s.m = std::stoll(text.substr(sq + 5, text.size() - sq - 6));
    } catch (const std::exception&) {
        throw ConfigError("bad surd radicand: " + text);
    }
    std::string head = text.substr(0, sq);  // "", "b*", "a+b*", "a-"...
    s.a = Fraction{0, 1};
    s.b = Fraction{1, 1};
    if (!head.empty() && head.back() == '*') head.pop_back();
    // Split an additive head at the last +/- that is not a leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < head.size(); ++i)
        if (head[i] == '+' || head[i] == '-') split = i;
    if (split != std::string::npos) {
        s.a = parse_fraction(head.substr(0, split));
        std::string btext = head.substr(split);
        if (btext == "+") btext = "1";
        else if (btext == "-") btext = "-1";
        else if (btext.front() == '+') btext.erase(0, 1);
        s.b = parse_fraction(btext);
    } else if (!head.empty()) {
        s.b = parse_fraction(head);
    }
    return s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

DenseOperator realize_hamiltonian(const ExperimentConfig& cfg) {
    if (cfg.n_qubits > 12 && cfg.ham_kind != "file" && !cfg.allow_large)
        throw GuardError("dense full-space treatment is capped at n = 12; set guards.allow_large "
                         "to override");
    if (cfg.ham_kind == "pxp") return build_pxp(cfg.n_qubits);
    if (cfg.ham_kind == "toy") return build_toy_model();
    if (cfg.ham_kind == "file") {
        if (cfg.matrix_file.empty()) throw ConfigError("hamiltonian.file is required for kind=file");
        return load_explicit_matrix(std::filesystem::path(cfg.matrix_file));
    }
    SyntheticSpectrum s;
    for (const std::string& r : split_list(cfg.synthetic_rationals)) s.rationals.push_back(parse_fraction(r));
    for (const std::string& r : split_list(cfg.synthetic_irrationals)) s.irrationals.push_back(parse_surd(r));
    if (s.total() == 0) throw ConfigError("synthetic hamiltonian needs rationals/irrationals");
    if (s.total() != dim_of_qubits(cfg.n_qubits))
        throw ConfigError("synthetic entry count " + std::to_string(s.total()) +
                          " does not match hamiltonian.n = " + std::to_string(cfg.n_qubits));
    return build_synthetic(s, cfg.seed).hamiltonian;
}

PauliString parse_pauli(const std::string& text, int n_qubits, int default_site) {
    if (text.empty()) return PauliString::single(n_qubits, default_site, PauliLetter::Z);
    const PauliString p = PauliString::from_string(text);
    if (p.n_qubits() != n_qubits) throw ConfigError("observable length differs from hamiltonian.n");
    return p;
}

StateVector make_state(const ExperimentConfig& cfg, const SpectralDecomposition& spec,
                       const EigenClassification* cls) {
    if (cfg.state == "free-random") {
        if (cls == nullptr || cls->n_rational() == 0)
            throw ConfigError("state.kind=free-random needs rational eigenvalues");
        std::mt19937_64 rng = substream_rng(cfg.seed, 0x57a7eULL);
        return make_free_state(spec, *cls, random_unit_vector(cls->n_rational(), rng));
    }
    if (cfg.state == "haar") {
        std::mt19937_64 rng = substream_rng(cfg.seed, 0x57a7eULL);
        return StateVector{random_unit_vector(spec.dim(), rng), spec.n_qubits};
    }
    if (cfg.state == "neel") {
        Eigen::Index idx = 0;
        for (int site = 1; site <= spec.n_qubits; site += 2)
            idx |= Eigen::Index{1} << (spec.n_qubits - site);
        return StateVector::basis_state(spec.n_qubits, idx);
    }
    if (cfg.state.rfind("basis:", 0) == 0) {
        const Eigen::Index idx = std::stoll(cfg.state.substr(6));
        return StateVector::basis_state(spec.n_qubits, idx);
    }
    throw ConfigError("unknown state.kind: " + cfg.state);
}

int effective_threads(const ExperimentConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Context {
    std::filesystem::path dir;
    nlohmann::json meta;
    std::vector<std::filesystem::path> artifacts;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Context(const ExperimentConfig& cfg) : dir(cfg.out_dir) {
        std::filesystem::create_directories(dir);
        meta["config"] = config_to_json(cfg);
        meta["library_version"] = kVersion;
    }

    std::filesystem::path path(const std::string& name) {
        artifacts.push_back(dir / name);
        return dir / name;
    }

    void finish() {
        meta["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        nlohmann::json names = nlohmann::json::array();
        for (const auto& a : artifacts) names.push_back(a.filename().string());
        meta["artifacts"] = names;
        const auto sidecar = dir / (meta["config"]["experiment"]["kind"].get<std::string>() + ".meta.json");
        std::ofstream out(sidecar, std::ios::binary);
        out << meta.dump(2) << "\n";
    }
};

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << j.dump(2) << "\n";
}

// ---- experiments -----------------------------------------------------------

void run_spectrum(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    const EigenClassification cls = classify(spec, cfg.tolerance, cfg.max_denominator);
    const auto violations = check_irrational_spacing(cls, spec, cfg.tolerance, cfg.max_denominator);

    CsvWriter csv(ctx.path("spectrum.csv"), "index,eigenvalue");
    for (Eigen::Index i = 0; i < spec.dim(); ++i)
        csv.row({static_cast<double>(i), spec.eigenvalues(i)});
    write_json(ctx.path("spectrum.json"), classification_report(cls, violations));
}

void run_revival(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    EigenClassification cls;
    bool have_cls = true;
    try {
        cls = classify(spec, cfg.tolerance, cfg.max_denominator);
    } catch (const std::exception&) {
        have_cls = false;
    }
    const StateVector psi = make_state(cfg, spec, have_cls ? &cls : nullptr);

    CsvWriter csv(ctx.path("revival.csv"), "t,overlap");
    for (double t : make_grid(cfg.grid)) {
        const StateVector evolved = evolve_state(spec, psi, t);
        csv.row({t, std::abs(psi.amplitudes.dot(evolved.amplitudes))});
    }
    if (have_cls && cls.common_denominator) {
        ctx.meta["revival_period"] = revival_period(cls);
        ctx.meta["revival_fidelity"] = revival_fidelity(spec, cls, psi);
    }
}

void run_monotone(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    const EigenClassification cls = classify(spec, cfg.tolerance, cfg.max_denominator);
    const OptimizerBudget budget{cfg.restarts, cfg.iterations, cfg.seed, effective_threads(cfg)};

    MonotoneEstimate est;
    nlohmann::json extra;
    if (cfg.monotone_kind == "R") {
        const StateVector psi = make_state(cfg, spec, &cls);
        est = monotone_R(spec, cls, psi, budget);
        extra["revival_fidelity"] = revival_fidelity(spec, cls, psi);
    } else if (cfg.monotone_kind == "G") {
        DenseOperator o = parse_pauli(cfg.observable, cfg.n_qubits, 1).to_operator();
        est = monotone_G(spec, cls, o, budget);
        extra["revival_correlator"] = revival_correlator(spec, cls, o);
    } else {
        DenseOperator u = DenseOperator::identity(spec.n_qubits);
        if (cfg.monotone_target == "haar") {
            std::mt19937_64 rng = substream_rng(cfg.seed, 0xd00dULL);
            u = DenseOperator{haar_unitary(spec.dim(), rng), spec.n_qubits};
        } else if (cfg.monotone_target.rfind("propagator:", 0) == 0) {
            u = DenseOperator{spec.propagator(std::stod(cfg.monotone_target.substr(11))),
                              spec.n_qubits};
        } else if (cfg.monotone_target.rfind("mixing:", 0) == 0) {
            if (cls.n_rational() == 0 || cls.n_irrational() == 0)
                throw ConfigError("mixing target needs both eigenvalue classes");
            const double angle = std::stod(cfg.monotone_target.substr(7));
            Matrix mix = Matrix::Identity(spec.dim(), spec.dim());
            const int a0 = cls.rational_indices[0], b0 = cls.irrational_indices[0];
            mix(a0, a0) = std::cos(angle / 2);
            mix(a0, b0) = -std::sin(angle / 2);
            mix(b0, a0) = std::sin(angle / 2);
            mix(b0, b0) = std::cos(angle / 2);
            u = DenseOperator{spec.eigenvectors * mix * spec.eigenvectors.adjoint(), spec.n_qubits};
        } else {
            throw ConfigError("unknown monotone.target: " + cfg.monotone_target);
        }
        est = monotone_D(spec, cls, u, budget);
    }
    nlohmann::json j = monotone_report(est);
    j["context"] = extra;
    write_json(ctx.path("monotone.json"), j);
}

void run_otoc(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    const DenseOperator o1 = parse_pauli(cfg.observable, cfg.n_qubits, 1).to_operator();
    const DenseOperator o2 = parse_pauli(cfg.observable2, cfg.n_qubits, cfg.n_qubits).to_operator();

    CsvWriter csv(ctx.path("otoc.csv"), "t,re,im");
    for (double t : make_grid(cfg.grid)) {
        const Complex v = otoc(spec, o1, o2, t);
        csv.row({t, v.real(), v.imag()});
    }
}

void run_hayden_preskill(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    SubsystemPair pair{cfg.a_sites, cfg.d_sites, cfg.n_qubits};
    if (pair.d_sites.empty()) pair.d_sites = {cfg.n_qubits};
    pair.validate();
    if (pair.term_count() > kMaxOtocTerms)
        throw GuardError("Pauli enumeration exceeds 1e6 terms; shrink subsystems.a/d");

    const std::vector<double> times = make_grid(cfg.grid);
    const std::vector<double> avg = avg_otoc_series(spec, pair, times, effective_threads(cfg));
    const double da2 = static_cast<double>(pair.dim_a() * pair.dim_a());

    CsvWriter csv(ctx.path("hayden-preskill.csv"), "t,avg_otoc,decoding_fidelity");
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double f = avg[i] <= 1e-12 ? std::numeric_limits<double>::infinity()
                                         : 1.0 / (da2 * avg[i]);
        csv.row({times[i], avg[i], f});
    }
}

void run_z1_overlap(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    const PauliString p = parse_pauli(cfg.observable, cfg.n_qubits, 1);
    const std::vector<double> times = make_grid(cfg.grid);
    const std::vector<double> overlap =
        pauli_weight_overlap_series(spec, p, times, effective_threads(cfg));
    CsvWriter csv(ctx.path("z1-overlap.csv"), "t,overlap");
    for (std::size_t i = 0; i < times.size(); ++i) csv.row({times[i], overlap[i]});
}

void run_recovery(const ExperimentConfig& cfg, Context& ctx) {
    if (cfg.n_qubits > 6 && !cfg.allow_large)
        throw GuardError("recovery joint state is O(d^2 (d+1)^2); capped at n = 6 unless "
                         "guards.allow_large is set");
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    const EigenClassification cls = classify(spec, cfg.tolerance, cfg.max_denominator);
    const StateVector phi = make_state(cfg, spec, &cls);
    const DenseOperator obs = parse_pauli(cfg.observable, cfg.n_qubits, 1).to_operator();

    const RecoveryRun run = revival::run_recovery(spec, cls, phi, cfg.t1, cfg.m_periods,
                                                  cfg.strength, obs, cfg.allow_large);
    write_json(ctx.path("recovery.json"),
               nlohmann::json{{"n", cfg.n_qubits},
                              {"seed", cfg.seed},
                              {"t1", run.t1},
                              {"t2", run.t2},
                              {"m", run.m},
                              {"p", run.p},
                              {"overlap_phi_rhof", run.overlap_phi_rhof},
                              {"estimate", run.estimate},
                              {"direct_expectation", run.direct_expectation},
                              {"haar_gap", run.haar_gap},
                              {"scar_overlap_diag", run.scar_overlap_diag},
                              {"closed_form_gap", run.closed_form_gap},
                              {"exact_reconstruction", run.exact_reconstruction}});
}

void run_bound_check(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(realize_hamiltonian(cfg));
    const EigenClassification cls = classify(spec, cfg.tolerance, cfg.max_denominator);
    const OptimizerBudget budget{cfg.restarts, cfg.iterations, cfg.seed, effective_threads(cfg)};

    std::vector<PauliString> targets;
    if (!cfg.observable.empty()) {
        targets.push_back(parse_pauli(cfg.observable, cfg.n_qubits, 1));
    } else {
        if (cfg.n_qubits > 3)
            throw GuardError("bound-check over all Pauli strings is capped at n = 3; set "
                             "observable.o1 for one string");
        std::vector<int> all_sites(static_cast<std::size_t>(cfg.n_qubits));
        for (int i = 0; i < cfg.n_qubits; ++i) all_sites[static_cast<std::size_t>(i)] = i + 1;
        for (PauliString& p : pauli_enumerate(cfg.n_qubits, all_sites))
            if (!p.is_identity()) targets.push_back(std::move(p));
    }

    nlohmann::json reports = nlohmann::json::array();
    bool all_hold = true;
    for (const PauliString& p : targets) {
        const OtocBoundReport rep = check_otoc_bound(spec, cls, p, budget);
        all_hold = all_hold && rep.holds;
        reports.push_back({{"pauli", p.str()},
                           {"otoc", rep.otoc_value},
                           {"overlap", rep.overlap},
                           {"intermediate_bound", rep.intermediate_bound},
                           {"monotone_g_lower", rep.monotone_g_lower},
                           {"slack_lower", rep.slack_lower},
                           {"slack_upper", rep.slack_upper},
                           {"holds", rep.holds}});
    }
    write_json(ctx.path("bound-check.json"),
               nlohmann::json{{"all_hold", all_hold}, {"reports", reports}});
    if (!all_hold) throw std::runtime_error("OTOC bound violated");
}

void run_toy_verify(const ExperimentConfig& cfg, Context& ctx) {
    const auto spec = SpectralDecomposition::diagonalize(build_toy_model());
    const EigenClassification cls = classify(spec, cfg.tolerance, cfg.max_denominator);
    const auto violations = check_irrational_spacing(cls, spec, cfg.tolerance, cfg.max_denominator);

    const double s2 = std::sqrt(2.0), s10 = std::sqrt(10.0);
    std::vector<double> expected{-1.0 - 2.0 * s2, -1.0 + s2 - s10, 3.0, -1.0 + s2 + s10};
    std::sort(expected.begin(), expected.end());
    double max_gap = 0.0;
    for (Eigen::Index i = 0; i < 4; ++i)
        max_gap = std::max(max_gap, std::abs(spec.eigenvalues(i) - expected[static_cast<std::size_t>(i)]));

    const bool ok = max_gap < 1e-9 && cls.n_rational() == 1 && violations.empty();
    nlohmann::json j{{"eigenvalues", std::vector<double>(spec.eigenvalues.begin(), spec.eigenvalues.end())},
                     {"expected", expected},
                     {"max_eigenvalue_gap", max_gap},
                     {"classification", classification_report(cls, violations)},
                     {"ok", ok}};
    write_json(ctx.path("toy-verify.json"), j);
    if (!ok) throw std::runtime_error("toy model verification failed");
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    Context ctx(cfg);
    if (cfg.experiment == "spectrum") run_spectrum(cfg, ctx);
    else if (cfg.experiment == "revival") run_revival(cfg, ctx);
    else if (cfg.experiment == "monotone") run_monotone(cfg, ctx);
    else if (cfg.experiment == "otoc") run_otoc(cfg, ctx);
    else if (cfg.experiment == "hayden-preskill") run_hayden_preskill(cfg, ctx);
    else if (cfg.experiment == "z1-overlap") run_z1_overlap(cfg, ctx);
    else if (cfg.experiment == "recovery") run_recovery(cfg, ctx);
    else if (cfg.experiment == "bound-check") run_bound_check(cfg, ctx);
    else if (cfg.experiment == "toy-verify") run_toy_verify(cfg, ctx);
    else throw ConfigError("unknown experiment: " + cfg.experiment);
    ctx.finish();
    return {std::move(ctx.artifacts)};
}

int run_experiment_cli(const ExperimentConfig& cfg) {
    try {
        run_experiment(cfg);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const GuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace revival_cli
