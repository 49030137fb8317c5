#include "rhull/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "rhull/mc.hpp"

namespace rhull {

namespace {

// Two-sided 97.5% quantiles of the t distribution for small df; 1.96 beyond.
double t_quantile_975(long df) {
    static const double table[] = {0,     12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306,
                                   2.262, 2.228,  2.201, 2.179, 2.160, 2.145, 2.131, 2.120, 2.110,
                                   2.101, 2.093,  2.086, 2.080, 2.074, 2.069, 2.064, 2.060, 2.056,
                                   2.052, 2.048,  2.045, 2.042};
    if (df <= 0) return 12.706;
    if (df <= 30) return table[df];
    if (df <= 40) return 2.021;
    if (df <= 60) return 2.000;
    if (df <= 120) return 1.980;
    return 1.96;
}

}  // namespace

LossEstimate dist_in_measure(const SupportShape& shape, const RHull& hull, LossMethod method,
                             long resolution_or_samples, std::uint64_t seed) {
    // Contract: the hull was built from a sample of this support.
    for (const Point2& p : hull.cloud().points)
        if (shape.signed_distance(p) > 1e-9)
            throw std::invalid_argument("dist_in_measure: hull sample point lies outside the support");

    LossEstimate out;
    out.method = method;
    out.resolution_or_samples = resolution_or_samples;
    const double mu_s = shape.area();
    const Aabb box = shape.bounding_box();

    // One-sidedness audit: nothing may be in the hull but outside the support
    // (beyond the method's resolution band).
    const double band = method == LossMethod::grid
                            ? 2.0 * std::max(box.width(), box.height()) / resolution_or_samples
                            : 1e-7 * std::max(box.width(), box.height());
    {
        Rng rng(mix_seed(seed ^ 0x517ccull));
        for (int k = 0; k < 1000; ++k) {
            const Point2 p = rng.in_box(box);
            if (hull.contains(p) && shape.signed_distance(p) > band)
                throw std::runtime_error("dist_in_measure: hull escapes the support");
        }
    }

    if (method == LossMethod::mc) {
        if (resolution_or_samples < 1) throw std::domain_error("dist_in_measure: samples must be >= 1");
        Rng rng(seed);
        long excluded = 0;
        long drawn = 0;
        while (drawn < resolution_or_samples) {
            const Point2 p = rng.in_box(box);
            if (!shape.contains(p)) continue;
            ++drawn;
            if (!hull.contains(p)) ++excluded;
        }
        const double ph = static_cast<double>(excluded) / resolution_or_samples;
        out.value = mu_s * ph;
        out.std_error = mu_s * std::sqrt(ph * (1.0 - ph) / resolution_or_samples);
    } else {
        if (resolution_or_samples < 8) throw std::domain_error("dist_in_measure: grid resolution too small");
        const long nx = resolution_or_samples;
        const double cell = std::max(box.width(), box.height()) / nx;
        long inside = 0, missed = 0;
        for (double y = box.lo.y + 0.5 * cell; y < box.hi.y; y += cell)
            for (double x = box.lo.x + 0.5 * cell; x < box.hi.x; x += cell) {
                const Point2 p{x, y};
                if (!shape.contains(p)) continue;
                ++inside;
                if (!hull.contains(p)) ++missed;
            }
        out.value = static_cast<double>(missed) * cell * cell;
        // Resolution-limited: boundary cells dominate the error.
        out.std_error = cell * std::sqrt(static_cast<double>(std::max(1L, missed))) * cell;
        (void)inside;
    }
    return out;
}

long count_extremes(const RHull& hull) { return static_cast<long>(hull.extreme_indices().size()); }

RateFit fit_rate(const std::vector<long>& ns, const std::vector<double>& means) {
    if (ns.size() != means.size() || ns.size() < 3)
        throw std::domain_error("fit_rate: need at least 3 (n, mean) pairs");
    const size_t k = ns.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < k; ++i) {
        if (!(means[i] > 0.0)) throw std::domain_error("fit_rate: means must be positive");
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(means[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(k);
    const double sxx_c = sxx - sx * sx / n;
    if (!(sxx_c > 0.0)) throw std::domain_error("fit_rate: degenerate n grid");
    RateFit fit;
    fit.slope = (sxy - sx * sy / n) / sxx_c;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0.0;
    for (size_t i = 0; i < k; ++i) {
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(means[i]);
        const double e = y - (fit.intercept + fit.slope * x);
        ss_res += e * e;
    }
    const long df = static_cast<long>(k) - 2;
    const double se = df > 0 ? std::sqrt(ss_res / df / sxx_c) : 0.0;
    const double t = t_quantile_975(df);
    fit.slope_lo = fit.slope - t * se;
    fit.slope_hi = fit.slope + t * se;
    return fit;
}

}  // namespace rhull
