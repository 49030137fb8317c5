#include "rhull/mc.hpp"

#include <stdexcept>

namespace rhull {

McArea region_area_mc(const std::function<bool(Point2)>& member, const Aabb& box, long samples,
                      std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("region_area_mc: samples must be >= 1");
    if (!(box.width() > 0.0) || !(box.height() > 0.0))
        throw std::domain_error("region_area_mc: empty bounding box");
    Rng rng(seed);
    long hits = 0;
    for (long i = 0; i < samples; ++i)
        if (member(rng.in_box(box))) ++hits;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    McArea out;
    out.samples = samples;
    out.hits = hits;
    out.estimate = p * box.area();
    out.std_error = box.area() * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return out;
}

}  // namespace rhull
