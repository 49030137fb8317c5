#ifndef RHULL_SUPPORT_HPP
#define RHULL_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rhull/geom.hpp"
#include "rhull/mc.hpp"

namespace rhull {

/** Finite planar sample.  Duplicate points are permitted but flagged. */
struct PointCloud {
    std::vector<Point2> points;
    bool has_duplicates = false;

    long n() const { return static_cast<long>(points.size()); }
    Aabb bounding_box() const;
};

/** F(z) = area of {x in S : d(x, boundary) <= z}, a polynomial c1 z + c2 z^2 on [0, alpha). */
struct SteinerProfile {
    double c1 = 0.0;
    double c2 = 0.0;
    double valid_to = 0.0;  // alpha

    double operator()(double z) const { return c1 * z + c2 * z * z; }
    double derivative(double z) const { return c1 + 2.0 * c2 * z; }
};

struct RollingReport {
    int boundary_samples = 0;
    int inner_violations = 0;
    int outer_violations = 0;
    double worst_depth = 0.0;  // deepest probe penetration on the wrong side
    bool passed(double tol = 1e-9) const { return worst_depth < tol; }
};

/**
 * Ground-truth support with closed-form membership, area, boundary distance
 * and a certified radius alpha() such that a ball of that radius rolls freely
 * both inside the set and inside the closure of its complement.
 *
 * Catalogue: disk, annulus, disjoint unions of disks (pairwise boundary gap
 * at least 2*alpha), and the stadium (segment inflated by a radius).
 */
class SupportShape {
public:
    enum class Kind { disk, annulus, multi_disk, stadium };

    static SupportShape disk(Point2 center, double radius);
    static SupportShape annulus(Point2 center, double r_in, double r_out);
    static SupportShape multi_disk(const std::vector<std::pair<Point2, double>>& disks);
    static SupportShape stadium(Point2 a, Point2 b, double radius);
    /** Parse from the experiment-config encoding: kind name + flat parameter list. */
    static SupportShape from_config(const std::string& kind, const std::vector<double>& params);

    Kind kind() const { return kind_; }
    std::string kind_name() const;

    /** Negative inside, positive outside, zero on the boundary. */
    double signed_distance(Point2 x) const;
    bool contains(Point2 x) const { return signed_distance(x) <= 0.0; }
    /** Distance to the boundary; precondition: contains(x). */
    double boundary_distance(Point2 x) const;

    double area() const;
    double alpha() const { return alpha_; }
    SteinerProfile steiner_profile() const;

    /** Metric projection of x onto the boundary, with the outward unit normal there. */
    Point2 project_to_boundary(Point2 x, UnitVec* outward_normal = nullptr) const;

    /** Boundary point at parameter t in [0,1) (arclength-proportional per piece). */
    Point2 boundary_point(double t, UnitVec* outward_normal = nullptr) const;

    Aabb bounding_box() const;

    /**
     * Empirically check the rolling condition at radius `alpha`: at sampled
     * boundary points s the inner disk B(s - alpha n, alpha) must stay inside
     * the set and the outer disk B(s + alpha n, alpha) outside of it.
     */
    RollingReport verify_rolling(double alpha, int boundary_samples) const;

private:
    SupportShape() = default;
    Kind kind_ = Kind::disk;
    double alpha_ = 0.0;
    // disk/annulus/stadium parameters
    Point2 center_{0, 0};
    double r_in_ = 0.0, r_out_ = 0.0;
    Point2 seg_a_{0, 0}, seg_b_{0, 0};
    double radius_ = 0.0;
    // multi_disk
    std::vector<std::pair<Point2, double>> disks_;
};

/**
 * Sampling distribution on a support.  `uniform` draws by rejection from the
 * bounding box; `linear` uses density proportional to max(0, a + g.x*x + g.y*y)
 * restricted to the shape.  delta/beta are the density bounds relative to
 * Lebesgue measure on S (delta = beta = 1/area for the uniform law).
 */
struct SamplingLaw {
    enum class Density { uniform, linear };
    SupportShape shape = SupportShape::disk({0, 0}, 1.0);
    Density density = Density::uniform;
    double lin_a = 1.0;
    Point2 lin_g{0, 0};
    double delta = 0.0;
    double beta = 0.0;

    static SamplingLaw uniform(const SupportShape& s);
    static SamplingLaw linear(const SupportShape& s, double a, Point2 g);

    Point2 draw(Rng& rng) const;
};

/** Draw n i.i.d. points; deterministic per seed.  Throws if rejection acceptance < 1e-3. */
PointCloud sample(const SamplingLaw& law, long n, std::uint64_t seed);

}  // namespace rhull

#endif
