#ifndef RHULL_MC_HPP
#define RHULL_MC_HPP

#include <cstdint>
#include <functional>
#include <utility>

#include "rhull/geom.hpp"

namespace rhull {

/**
 * Small deterministic RNG (splitmix64).  Every stochastic routine in the
 * library takes an explicit seed and owns its generator, so parallel callers
 * stay reproducible by deriving distinct seeds.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /** Uniform double in [0, 1). */
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    Point2 in_box(const Aabb& box) { return {uniform(box.lo.x, box.hi.x), uniform(box.lo.y, box.hi.y)}; }
    /** Uniform point in the closed disk B(c, r), by rejection from the bounding square. */
    Point2 in_disk(Point2 c, double r) {
        for (;;) {
            const Point2 p{uniform(-r, r), uniform(-r, r)};
            if (norm2(p) <= r * r) return c + p;
        }
    }
    UnitVec unit_dir() {
        const double a = uniform(0.0, 2.0 * M_PI);
        return UnitVec(std::cos(a), std::sin(a));
    }

private:
    std::uint64_t state_;
};

/** One splitmix64 scramble, for deriving well-spread child seeds. */
inline std::uint64_t mix_seed(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/** Seed for replicate `rep` of design point `n`, derived from a base seed. */
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t rep) {
    return mix_seed(mix_seed(base ^ mix_seed(n)) ^ rep);
}

struct McArea {
    double estimate = 0.0;
    double std_error = 0.0;
    long samples = 0;
    long hits = 0;
};

/**
 * Hit-or-miss Monte Carlo area of a region given by a membership predicate
 * and a bounding box that must enclose it.  Unbiased; deterministic per seed.
 */
McArea region_area_mc(const std::function<bool(Point2)>& member, const Aabb& box, long samples,
                      std::uint64_t seed);

}  // namespace rhull

#endif
