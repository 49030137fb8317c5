#ifndef RHULL_METRICS_HPP
#define RHULL_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rhull/hull.hpp"
#include "rhull/support.hpp"

namespace rhull {

enum class LossMethod { grid, mc };

/** Area of S \ S_n with its sampling/resolution error. */
struct LossEstimate {
    double value = 0.0;
    double std_error = 0.0;
    LossMethod method = LossMethod::mc;
    long resolution_or_samples = 0;
};

/**
 * Distance in measure between the support and the hull.  Because the hull of
 * a sample drawn from S stays inside S, the symmetric difference reduces to
 * S \ S_n; the routine also asserts that one-sidedness on probe points and
 * throws if the hull's own samples leave the support.
 *
 * mc: uniform probes in S, excluded fraction times area(S) (unbiased).
 * grid: counts cells whose center is in S but not in the hull.
 */
LossEstimate dist_in_measure(const SupportShape& shape, const RHull& hull, LossMethod method,
                             long resolution_or_samples, std::uint64_t seed);

/** Number of extreme sample points of the hull. */
long count_extremes(const RHull& hull);

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_lo = 0.0;
    double slope_hi = 0.0;
};

/**
 * Ordinary least squares of log(mean) on log(n); the slope confidence
 * interval is t-based from the residual variance (95%).
 */
RateFit fit_rate(const std::vector<long>& ns, const std::vector<double>& means);

}  // namespace rhull

#endif
