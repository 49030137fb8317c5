#include "rhull/config.hpp"

#include <fstream>
#include <sstream>

namespace rhull {

namespace {

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_text(ss.str(), path);
}

ExperimentConfig ExperimentConfig::parse_text(const std::string& text, const std::string& origin) {
    ExperimentConfig cfg;
    std::istringstream ss(text);
    std::string line;
    long lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.kv_[key] = val;
    }
    return cfg;
}

const std::string& ExperimentConfig::get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError("missing config key: " + key);
    return it->second;
}

std::string ExperimentConfig::get_or(const std::string& key, const std::string& fallback) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double ExperimentConfig::get_double(const std::string& key) const {
    try {
        size_t pos = 0;
        const double v = std::stod(get(key), &pos);
        if (pos != get(key).size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not a number: '" + get(key) + "'");
    }
}

long ExperimentConfig::get_long(const std::string& key) const {
    try {
        size_t pos = 0;
        const long v = std::stol(get(key), &pos);
        if (pos != get(key).size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("config key " + key + ": not an integer: '" + get(key) + "'");
    }
}

std::vector<double> ExperimentConfig::get_doubles(const std::string& key) const {
    std::vector<double> out;
    std::istringstream ss(get(key));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError("config key " + key + ": not a number: '" + tok + "'");
        }
    }
    if (out.empty()) throw ConfigError("config key " + key + ": empty list");
    return out;
}

std::vector<long> ExperimentConfig::get_longs(const std::string& key) const {
    std::vector<long> out;
    for (double v : get_doubles(key)) out.push_back(static_cast<long>(v));
    return out;
}

RateExperiment ExperimentConfig::to_experiment() const {
    RateExperiment exp;
    try {
        exp.shape = SupportShape::from_config(get("shape.kind"), get_doubles("shape.params"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (has("shape.alpha")) {
        const double want = get_double("shape.alpha");
        if (want > exp.shape.alpha() * (1.0 + 1e-9))
            throw ConfigError("shape.alpha exceeds the certified rolling radius of this shape");
    }
    const std::string density = get_or("law.density", "uniform");
    if (density == "uniform") {
        exp.law = SamplingLaw::uniform(exp.shape);
    } else if (density == "linear") {
        const std::vector<double> lin = get_doubles("law.linear");
        if (lin.size() != 3) throw ConfigError("law.linear: expected a,gx,gy");
        exp.law = SamplingLaw::linear(exp.shape, lin[0], {lin[1], lin[2]});
    } else {
        throw ConfigError("law.density: unknown density '" + density + "'");
    }
    exp.n_grid = get_longs("experiment.n_grid");
    try {
        exp.r_rule = RRule::parse(get("experiment.r_rule"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    exp.replications = static_cast<int>(get_long("experiment.replications"));
    exp.base_seed = static_cast<std::uint64_t>(get_long("experiment.seed"));
    const std::string metric = get_or("experiment.metric", "loss");
    if (metric == "loss")
        exp.metric = Metric::loss;
    else if (metric == "extremes")
        exp.metric = Metric::extremes;
    else
        throw ConfigError("experiment.metric: expected loss or extremes");
    const std::string lm = get_or("experiment.loss_method", "mc");
    if (lm == "mc")
        exp.loss_method = LossMethod::mc;
    else if (lm == "grid")
        exp.loss_method = LossMethod::grid;
    else
        throw ConfigError("experiment.loss_method: expected mc or grid");
    exp.loss_samples = has("experiment.loss_samples") ? get_long("experiment.loss_samples") : 100000;
    try {
        exp.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return exp;
}

}  // namespace rhull
