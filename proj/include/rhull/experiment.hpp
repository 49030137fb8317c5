#ifndef RHULL_EXPERIMENT_HPP
#define RHULL_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rhull/metrics.hpp"
#include "rhull/support.hpp"

namespace rhull {

/** Radius rule: fixed value, or r = c * n^(-gamma) with gamma < 1/2. */
struct RRule {
    enum class Kind { fixed, pow };
    Kind kind = Kind::fixed;
    double value = 0.0;  // fixed radius
    double c = 0.0;      // pow coefficient
    double gamma = 0.0;  // pow exponent

    double r_of(long n) const {
        return kind == Kind::fixed ? value : c * std::pow(static_cast<double>(n), -gamma);
    }
    /** Parse "fixed:v" or "pow:c,gamma"; enforces positivity and gamma < 1/2. */
    static RRule parse(const std::string& text);
    std::string str() const;
};

enum class Metric { loss, extremes };

struct RateExperiment {
    SupportShape shape = SupportShape::disk({0, 0}, 1.0);
    SamplingLaw law = SamplingLaw::uniform(SupportShape::disk({0, 0}, 1.0));
    std::vector<long> n_grid;
    RRule r_rule;
    int replications = 2;
    std::uint64_t base_seed = 1;
    Metric metric = Metric::loss;
    LossMethod loss_method = LossMethod::mc;
    long loss_samples = 100000;

    /** Throws std::invalid_argument if r_rule(n) > alpha for some n in the grid. */
    void validate() const;
};

struct RateRow {
    long n = 0;
    double r = 0.0;
    int replications = 0;
    double mean = 0.0;
    double stderr_ = 0.0;   // standard error of the mean over replicates
    double normalized = 0.0;
};

struct RateResult {
    Metric metric = Metric::loss;
    std::vector<RateRow> rows;
    RateFit fit;
    /** Per-replicate raw values, rows-major: values[i][rep] for n_grid[i]. */
    std::vector<std::vector<double>> values;
};

struct ReplicatePair {
    double loss = 0.0;
    long extremes = 0;
};

/**
 * Run the replicated design once, computing both metrics per replicate on the
 * same clouds.  Replicate (n, rep) draws its cloud with seed
 * derive_seed(base_seed, n, rep); results are stored by slot so any thread
 * interleaving yields identical output.  `threads` <= 0 picks
 * hardware_concurrency capped by the RHULL_THREADS environment variable.
 */
std::vector<std::vector<ReplicatePair>> run_replicates(const RateExperiment& exp, int threads = 0);

/** Aggregate one metric of a run into rows, normalized column and log-log fit. */
RateResult summarize(const RateExperiment& exp, const std::vector<std::vector<ReplicatePair>>& raw,
                     Metric metric);

/** run_replicates + summarize for exp.metric. */
RateResult replicate_expectation(const RateExperiment& exp, int threads = 0);

/** Effective worker count after the RHULL_THREADS cap. */
int effective_threads(int requested);

}  // namespace rhull

#endif
