#include "revival_cli/config.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace revival_cli {

namespace {

const std::set<std::string> kExperiments{"spectrum",  "revival",  "monotone",
                                         "otoc",      "hayden-preskill", "z1-overlap",
                                         "recovery",  "bound-check",     "toy-verify"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ConfigError("bad integer list entry: " + item);
        }
    }
    return out;
}

template <typename T>
T parse_number(const std::string& value, const std::string& key) {
    std::stringstream ss(value);
    T out;
    ss >> out;
    if (ss.fail()) throw ConfigError("bad numeric value for " + key + ": " + value);
    std::string rest;
    ss >> rest;
    if (!rest.empty()) throw ConfigError("trailing characters in " + key + ": " + value);
    return out;
}

void apply_key(ExperimentConfig& cfg, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string full = section.empty() ? key : section + "." + key;
    if (full == "experiment.kind") cfg.experiment = value;
    else if (full == "experiment.seed") cfg.seed = parse_number<std::uint64_t>(value, full);
    else if (full == "experiment.threads") cfg.threads = parse_number<int>(value, full);
    else if (full == "experiment.out") cfg.out_dir = value;
    else if (full == "hamiltonian.kind") cfg.ham_kind = value;
    else if (full == "hamiltonian.n") cfg.n_qubits = parse_number<int>(value, full);
    else if (full == "hamiltonian.file") cfg.matrix_file = value;
    else if (full == "hamiltonian.rationals") cfg.synthetic_rationals = value;
    else if (full == "hamiltonian.irrationals") cfg.synthetic_irrationals = value;
    else if (full == "grid.start") cfg.grid.start = parse_number<double>(value, full);
    else if (full == "grid.stop") cfg.grid.stop = parse_number<double>(value, full);
    else if (full == "grid.points") cfg.grid.points = parse_number<int>(value, full);
    else if (full == "subsystems.a") cfg.a_sites = parse_int_list(value);
    else if (full == "subsystems.d") cfg.d_sites = parse_int_list(value);
    else if (full == "classification.tolerance") cfg.tolerance = parse_number<double>(value, full);
    else if (full == "classification.max_denominator")
        cfg.max_denominator = parse_number<long long>(value, full);
    else if (full == "budget.restarts") cfg.restarts = parse_number<int>(value, full);
    else if (full == "budget.iterations") cfg.iterations = parse_number<int>(value, full);
    else if (full == "state.kind") cfg.state = value;
    else if (full == "observable.o1") cfg.observable = value;
    else if (full == "observable.o2") cfg.observable2 = value;
    else if (full == "monotone.kind") cfg.monotone_kind = value;
    else if (full == "monotone.target") cfg.monotone_target = value;
    else if (full == "recovery.p") cfg.strength = parse_number<double>(value, full);
    else if (full == "recovery.t1") cfg.t1 = parse_number<double>(value, full);
    else if (full == "recovery.m") cfg.m_periods = parse_number<int>(value, full);
    else if (full == "guards.allow_large") cfg.allow_large = (value == "true" || value == "1");
    else throw ConfigError("unknown config key: " + full);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!kExperiments.contains(experiment))
        throw ConfigError("unknown experiment: '" + experiment + "'");
    if (ham_kind != "pxp" && ham_kind != "toy" && ham_kind != "synthetic" && ham_kind != "file")
        throw ConfigError("unknown hamiltonian kind: " + ham_kind);
    if (n_qubits < 1) throw ConfigError("hamiltonian.n must be positive");
    if (grid.points < 2) throw ConfigError("grid.points must be >= 2");
    if (!(grid.stop > grid.start)) throw ConfigError("grid.stop must exceed grid.start");
    if (tolerance <= 0) throw ConfigError("classification.tolerance must be positive");
    if (max_denominator < 1) throw ConfigError("classification.max_denominator must be >= 1");
    if (restarts < 1 || iterations < 1) throw ConfigError("budget must be positive");
    if (!(strength > 0.0 && strength < 1.0)) throw ConfigError("recovery.p must be in (0, 1)");
    if (threads < 0) throw ConfigError("threads must be >= 0");
    const auto check_sites = [this](const std::vector<int>& sites, const char* name) {
        for (int s : sites)
            if (s < 1 || s > n_qubits)
                throw ConfigError(std::string("site out of range in subsystems.") + name);
    };
    check_sites(a_sites, "a");
    check_sites(d_sites, "d");
    if (monotone_kind != "R" && monotone_kind != "D" && monotone_kind != "G")
        throw ConfigError("monotone.kind must be R, D, or G");
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("malformed section header at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        apply_key(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

ExperimentConfig parse_config_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    for (const auto& [section, body] : j.items()) {
        if (!body.is_object()) throw ConfigError("config section is not an object: " + section);
        for (const auto& [key, value] : body.items()) {
            std::string text;
            if (value.is_array()) {
                for (const auto& v : value) {
                    if (!text.empty()) text += ",";
                    text += std::to_string(v.get<int>());
                }
            } else if (value.is_string()) {
                text = value.get<std::string>();
            } else if (value.is_boolean()) {
                text = value.get<bool>() ? "true" : "false";
            } else {
                std::ostringstream os;
                os.precision(17);
                if (value.is_number_integer()) os << value.get<long long>();
                else if (value.is_number_unsigned()) os << value.get<std::uint64_t>();
                else os << value.get<double>();
                text = os.str();
            }
            apply_key(cfg, section, key, text);
        }
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (path.extension() == ".json" || (first != std::string::npos && text[first] == '{'))
        return parse_config_json(nlohmann::json::parse(text));
    return parse_config_text(text);
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["experiment"] = {{"kind", cfg.experiment},
                       {"seed", cfg.seed},
                       {"threads", cfg.threads},
                       {"out", cfg.out_dir}};
    j["hamiltonian"] = {{"kind", cfg.ham_kind},
                        {"n", cfg.n_qubits},
                        {"file", cfg.matrix_file},
                        {"rationals", cfg.synthetic_rationals},
                        {"irrationals", cfg.synthetic_irrationals}};
    j["grid"] = {{"start", cfg.grid.start}, {"stop", cfg.grid.stop}, {"points", cfg.grid.points}};
    j["subsystems"] = {{"a", cfg.a_sites}, {"d", cfg.d_sites}};
    j["classification"] = {{"tolerance", cfg.tolerance}, {"max_denominator", cfg.max_denominator}};
    j["budget"] = {{"restarts", cfg.restarts}, {"iterations", cfg.iterations}};
    j["state"] = {{"kind", cfg.state}};
    j["observable"] = {{"o1", cfg.observable}, {"o2", cfg.observable2}};
    j["monotone"] = {{"kind", cfg.monotone_kind}, {"target", cfg.monotone_target}};
    j["recovery"] = {{"p", cfg.strength}, {"t1", cfg.t1}, {"m", cfg.m_periods}};
    j["guards"] = {{"allow_large", cfg.allow_large}};
    return j;
}

bool operator==(const TimeGrid& a, const TimeGrid& b) {
    return a.start == b.start && a.stop == b.stop && a.points == b.points;
}

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    return a.experiment == b.experiment && a.ham_kind == b.ham_kind && a.n_qubits == b.n_qubits &&
           a.matrix_file == b.matrix_file && a.synthetic_rationals == b.synthetic_rationals &&
           a.synthetic_irrationals == b.synthetic_irrationals && a.grid == b.grid &&
           a.a_sites == b.a_sites && a.d_sites == b.d_sites && a.tolerance == b.tolerance &&
           a.max_denominator == b.max_denominator && a.restarts == b.restarts &&
           a.iterations == b.iterations && a.state == b.state && a.observable == b.observable &&
           a.observable2 == b.observable2 && a.monotone_kind == b.monotone_kind &&
           a.monotone_target == b.monotone_target && a.strength == b.strength && a.t1 == b.t1 &&
           a.m_periods == b.m_periods && a.allow_large == b.allow_large && a.seed == b.seed &&
           a.threads == b.threads && a.out_dir == b.out_dir;
}

}  // namespace revival_cli
