#ifndef RHULL_CONFIG_HPP
#define RHULL_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "rhull/experiment.hpp"

namespace rhull {

/** Thrown for invalid or missing configuration keys (CLI exit code 3). */
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Flat key=value configuration with `#` comments.  Keys:
 *   shape.kind, shape.params (comma list), shape.alpha (optional check)
 *   law.density = uniform | linear;  law.linear = a,gx,gy
 *   experiment.n_grid (comma list), experiment.r_rule (fixed:v | pow:c,g)
 *   experiment.replications, experiment.seed, experiment.metric (loss|extremes)
 *   experiment.loss_method (mc|grid), experiment.loss_samples
 *   output.dir
 */
class ExperimentConfig {
public:
    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse_text(const std::string& text, const std::string& origin = "<config>");

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;
    std::vector<double> get_doubles(const std::string& key) const;
    std::vector<long> get_longs(const std::string& key) const;

    RateExperiment to_experiment() const;
    std::string output_dir() const { return get_or("output.dir", "."); }

private:
    std::map<std::string, std::string> kv_;
};

}  // namespace rhull

#endif
