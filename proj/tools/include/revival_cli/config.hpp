// config.hpp — experiment configuration: INI-style key/value files with
// sections, or JSON with the same schema.

#pragma once

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace revival_cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Size-guard violations exit with a distinct code so batch drivers can tell
// "too big" from "broken".
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeGrid {
    double start = 0.0;
    double stop = 30.0;
    int points = 600;
};

struct ExperimentConfig {
    std::string experiment;  // spectrum, revival, monotone, otoc, hayden-preskill,
                             // z1-overlap, recovery, bound-check, toy-verify

    // [hamiltonian]
    std::string ham_kind = "pxp";  // pxp | toy | synthetic | file
    int n_qubits = 8;
    std::string matrix_file;
    std::string synthetic_rationals;    // e.g. "1, 2" or "1/2, 3/2"
    std::string synthetic_irrationals;  // e.g. "sqrt(2), 2*sqrt(2), 1/2+1/3*sqrt(5)"

    TimeGrid grid;

    // [subsystems] (1-based sites; d defaults to {n})
    std::vector<int> a_sites{1};
    std::vector<int> d_sites;

    // [classification]
    double tolerance = 1e-9;
    long long max_denominator = 1000;

    // [budget]
    int restarts = 4;
    int iterations = 6;

    // [state]: free-random | basis:<index> | neel | haar
    std::string state = "free-random";

    // [observable]
    std::string observable;   // Pauli string, defaults to Z on site 1
    std::string observable2;  // second OTOC operator, defaults to Z on site n

    // [monotone]
    std::string monotone_kind = "R";      // R | D | G
    std::string monotone_target = "haar"; // D only: haar | mixing:<angle> | propagator:<t>

    // [recovery]
    double strength = 0.1;
    double t1 = 1.0;
    int m_periods = 1;

    // [guards]
    bool allow_large = false;

    std::uint64_t seed = 0;
    int threads = 0;  // 0 = logical cores
    std::string out_dir = ".";

    void validate() const;  // throws ConfigError
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_json(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::filesystem::path& path);

// Full schema echo; parse_config_json(config_to_json(c)) == c.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);
bool operator==(const TimeGrid& a, const TimeGrid& b);

}  // namespace revival_cli
