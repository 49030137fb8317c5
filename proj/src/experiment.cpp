#include "rhull/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rhull/mc.hpp"

namespace rhull {

RRule RRule::parse(const std::string& text) {
    RRule r;
    const size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (head == "fixed") {
        if (colon == std::string::npos) throw std::invalid_argument("r_rule: expected fixed:<value>");
        r.kind = Kind::fixed;
        r.value = std::stod(text.substr(colon + 1));
        if (!(r.value > 0.0)) throw std::invalid_argument("r_rule: fixed radius must be positive");
        return r;
    }
    if (head == "pow") {
        if (colon == std::string::npos) throw std::invalid_argument("r_rule: expected pow:<c>,<gamma>");
        const std::string rest = text.substr(colon + 1);
        const size_t comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("r_rule: expected pow:<c>,<gamma>");
        r.kind = Kind::pow;
        r.c = std::stod(rest.substr(0, comma));
        r.gamma = std::stod(rest.substr(comma + 1));
        if (!(r.c > 0.0)) throw std::invalid_argument("r_rule: pow coefficient must be positive");
        // gamma < 1/2 keeps n r^2 / log n divergent.
        if (!(r.gamma >= 0.0 && r.gamma < 0.5))
            throw std::invalid_argument("r_rule: pow exponent must lie in [0, 1/2)");
        return r;
    }
    throw std::invalid_argument("r_rule: unknown kind '" + head + "' (use fixed:v or pow:c,gamma)");
}

std::string RRule::str() const {
    std::ostringstream ss;
    if (kind == Kind::fixed)
        ss << "fixed:" << value;
    else
        ss << "pow:" << c << "," << gamma;
    return ss.str();
}

void RateExperiment::validate() const {
    if (n_grid.empty()) throw std::invalid_argument("experiment: empty n grid");
    if (replications < 2) throw std::invalid_argument("experiment: need at least 2 replications");
    for (long n : n_grid) {
        if (n < 1) throw std::invalid_argument("experiment: n must be positive");
        const double r = r_rule.r_of(n);
        if (!(r > 0.0)) throw std::invalid_argument("experiment: r_rule gives nonpositive radius");
        if (r > shape.alpha() * (1.0 + 1e-12))
            throw std::invalid_argument("experiment: r_rule exceeds the shape's rolling radius");
    }
}

int effective_threads(int requested) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (const char* env = std::getenv("RHULL_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < t) t = cap;
    }
    return t;
}

std::vector<std::vector<ReplicatePair>> run_replicates(const RateExperiment& exp, int threads) {
    exp.validate();
    const size_t kn = exp.n_grid.size();
    const int reps = exp.replications;
    std::vector<std::vector<ReplicatePair>> out(kn, std::vector<ReplicatePair>(reps));

    const long total = static_cast<long>(kn) * reps;
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            const long task = next.fetch_add(1);
            if (task >= total) return;
            const size_t ni = task / reps;
            const int rep = static_cast<int>(task % reps);
            const long n = exp.n_grid[ni];
            const double r = exp.r_rule.r_of(n);
            const std::uint64_t seed = derive_seed(exp.base_seed, static_cast<std::uint64_t>(n),
                                                   static_cast<std::uint64_t>(rep));
            PointCloud cloud = sample(exp.law, n, seed);
            RHull hull(std::move(cloud), r);
            ReplicatePair rp;
            rp.extremes = count_extremes(hull);
            rp.loss = dist_in_measure(exp.shape, hull, exp.loss_method, exp.loss_samples,
                                      mix_seed(seed ^ 0x10555ull))
                          .value;
            out[ni][rep] = rp;
        }
    };

    const int t = effective_threads(threads);
    if (t <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

RateResult summarize(const RateExperiment& exp, const std::vector<std::vector<ReplicatePair>>& raw,
                     Metric metric) {
    RateResult res;
    res.metric = metric;
    std::vector<long> ns;
    std::vector<double> means;
    for (size_t i = 0; i < exp.n_grid.size(); ++i) {
        const long n = exp.n_grid[i];
        const double r = exp.r_rule.r_of(n);
        std::vector<double> vals;
        vals.reserve(raw[i].size());
        for (const ReplicatePair& rp : raw[i])
            vals.push_back(metric == Metric::loss ? rp.loss : static_cast<double>(rp.extremes));
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= vals.size();
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        var = vals.size() > 1 ? var / (vals.size() - 1) : 0.0;
        RateRow row;
        row.n = n;
        row.r = r;
        row.replications = static_cast<int>(vals.size());
        row.mean = mean;
        row.stderr_ = std::sqrt(var / vals.size());
        const double nd = static_cast<double>(n);
        row.normalized = metric == Metric::loss
                             ? std::cbrt(r) * std::pow(nd, 2.0 / 3.0) * mean
                             : std::cbrt(r) * std::pow(nd, -1.0 / 3.0) * mean;
        res.rows.push_back(row);
        res.values.push_back(vals);
        ns.push_back(n);
        means.push_back(mean);
    }
    if (ns.size() >= 3) res.fit = fit_rate(ns, means);
    return res;
}

RateResult replicate_expectation(const RateExperiment& exp, int threads) {
    return summarize(exp, run_replicates(exp, threads), exp.metric);
}

}  // namespace rhull
