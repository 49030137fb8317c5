#ifndef RHULL_HULL_HPP
#define RHULL_HULL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rhull/delaunay.hpp"
#include "rhull/geom.hpp"
#include "rhull/support.hpp"

namespace rhull {

enum class BoundarySemantics { open, closed };

/** Relative tolerance used to resolve touching-disk ties. */
inline constexpr double kTieRel = 1e-9;

/** Uniform bucket grid over points for disk-range queries. */
class PointGrid {
public:
    PointGrid() = default;
    PointGrid(const std::vector<Point2>& pts, double cell);

    /** Call f(index) for every stored point within `radius` of q (plus grid slack). */
    template <class F>
    void visit(Point2 q, double radius, F&& f) const {
        if (cells_.empty()) return;
        const long i0 = clamp_x(static_cast<long>(std::floor((q.x - radius - origin_.x) / cell_)));
        const long i1 = clamp_x(static_cast<long>(std::floor((q.x + radius - origin_.x) / cell_)));
        const long j0 = clamp_y(static_cast<long>(std::floor((q.y - radius - origin_.y) / cell_)));
        const long j1 = clamp_y(static_cast<long>(std::floor((q.y + radius - origin_.y) / cell_)));
        for (long j = j0; j <= j1; ++j)
            for (long i = i0; i <= i1; ++i)
                for (int idx : cells_[j * nx_ + i]) f(idx);
    }
    bool empty() const { return cells_.empty(); }
    /** Index of the closest stored point found in the first non-empty bucket rings, or -1. */
    int any_near(Point2 q) const;

private:
    long clamp_x(long i) const { return std::max(0L, std::min(i, nx_ - 1)); }
    long clamp_y(long j) const { return std::max(0L, std::min(j, ny_ - 1)); }
    Point2 origin_{0, 0};
    double cell_ = 1.0;
    long nx_ = 0, ny_ = 0;
    std::vector<std::vector<int>> cells_;
    std::vector<Point2> pts_;
};

/**
 * One boundary arc of the hull.  Arcs lie on circles of radius r around empty
 * witness centers pinned by two samples; they are traversed clockwise around
 * their center so the hull region stays on the left.  `a0`/`a1` are start/end
 * angles with a1 = a0 - sweep.  An arc ends either at one of its pinning
 * samples or, when a neighboring empty disk cuts it short, at the crossing
 * point of the two witness circles (`from`/`to` are -1 there).
 */
struct BoundaryArc {
    Point2 center{0, 0};
    double r = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
    double sweep = 0.0;  // positive magnitude of the clockwise sweep
    int from = -1;       // sample index at the start, -1 at a circle crossing
    int to = -1;         // sample index at the end, -1 at a circle crossing
    int pin_u = -1;      // the two samples touching the witness circle
    int pin_v = -1;
    Point2 start_point() const { return center + r * Point2{std::cos(a0), std::sin(a0)}; }
    Point2 end_point() const { return center + r * Point2{std::cos(a1), std::sin(a1)}; }
    Point2 point_at(double t) const {  // t in [0,1] along the clockwise sweep
        const double a = a0 - t * sweep;
        return center + r * Point2{std::cos(a), std::sin(a)};
    }
};

/** Boundary arcs linked into closed curves, plus samples isolated in the hull. */
struct HullBoundary {
    std::vector<BoundaryArc> arcs;
    std::vector<std::vector<int>> curves;  // indices into arcs, each a closed loop
    std::vector<int> isolated;             // original sample indices
};

/**
 * The r-convex hull of a point cloud: the morphological closing of the sample
 * by a disk of radius r.
 *
 * Membership is decided exactly (up to the tie tolerance) through the empty
 * -center region E = { y : d(y, sample) > r }: a query x is outside the hull
 * iff some point of E lies within r of x.  The distance from x to E is
 * attained either at x itself, at the radial foot on a touching circle of an
 * arc-carrying (extreme) sample, or at an empty-circle center through two
 * samples; all three candidate classes are finite and indexed on grids, so a
 * query inspects only a neighborhood of x.
 *
 * With closed semantics, centers whose touching samples surround them (no
 * escape half-plane) witness only a measure-zero tie and are not exclusion
 * witnesses; with open semantics they are.  This is the only place the two
 * closings differ.
 */
class RHull {
public:
    RHull(PointCloud cloud, double r, BoundarySemantics sem = BoundarySemantics::closed);

    bool contains(Point2 x) const { return contains(x, sem_); }
    bool contains(Point2 x, BoundarySemantics sem) const;

    const PointCloud& cloud() const { return cloud_; }
    double r() const { return r_; }
    BoundarySemantics semantics() const { return sem_; }

    const std::vector<int>& extreme_indices() const { return extreme_indices_; }
    bool is_extreme(int sample_index) const;
    /** Center of an empty touching disk witnessing extremality, if any. */
    std::optional<Point2> extreme_witness(int sample_index) const;

    const HullBoundary& boundary() const { return boundary_; }
    /** Area enclosed by the boundary arcs (holes subtract; isolated points add none). */
    double area_arcs() const { return area_; }

    const Triangulation& triangulation() const { return *tri_; }
    bool degenerate() const { return tri_->degenerate(); }

private:
    struct Corner {
        Point2 c;
        bool escapable;  // touching samples fit in a closed half-plane
    };
    // Uncovered angular arcs of the touching circle of an extreme site: the
    // directions in which an empty disk of radius r can touch the site.
    struct TouchArcs {
        int site = -1;
        std::vector<std::pair<double, double>> arcs;  // [lo, hi] in (-pi, pi], non-wrapping
        Point2 cone_dir{1, 0};                        // bounding cone over all arcs
        double cone_cos = -2.0;                       // cos(half width); -2 = full circle
    };

    void classify_edges();
    void build_boundary();
    void link_curves();
    void build_touch_arcs();
    double nearest_sample_dist(Point2 q, int hint_site) const;
    bool corner_escapable(Point2 c, double touch_radius) const;

    PointCloud cloud_;
    double r_;
    BoundarySemantics sem_;
    std::unique_ptr<Triangulation> tri_;

    std::vector<char> extreme_;         // per site, at the membership tie tolerance
    std::vector<char> extreme_strict_;  // per site, at arithmetic tolerance (boundary structure)
    std::vector<int> extreme_indices_;  // original indices (all duplicates of extreme sites)
    std::vector<Corner> corners_;
    std::vector<std::uint64_t> link_from_, link_to_;  // arc end identities for linking
    HullBoundary boundary_;
    double area_ = 0.0;

    PointGrid site_grid_;
    std::vector<TouchArcs> touch_;
    PointGrid touch_grid_;  // over the extreme sites backing touch_
    PointGrid corner_grid_;
};

/** One-shot membership test (builds the hull; prefer RHull for repeated queries). */
bool membership(const PointCloud& cloud, double r, Point2 x,
                BoundarySemantics sem = BoundarySemantics::closed);

/** One-shot extreme-point index set (original indexing, ascending). */
std::vector<int> extreme_points(const PointCloud& cloud, double r);

/** One-shot boundary computation. */
HullBoundary boundary_arcs(const PointCloud& cloud, double r);

/** Area enclosed by the hull's boundary arcs. */
double hull_area(const RHull& hull);

/**
 * Reference membership by brute-force candidate enumeration over all sample
 * pairs; no triangulation.  Exact but O(n^2) per query - intended for
 * degenerate inputs and cross-validation.
 */
bool membership_brute(const PointCloud& cloud, double r, Point2 x,
                      BoundarySemantics sem = BoundarySemantics::closed);

/** Brute-force extreme points, O(n^3); for small or degenerate clouds. */
std::vector<int> extreme_points_brute(const PointCloud& cloud, double r);

/** Convex hull vertex indices (Andrew monotone chain), CCW. */
std::vector<int> convex_hull_indices(const std::vector<Point2>& pts);

/** Point-in-convex-polygon test (closed). */
bool convex_polygon_contains(const std::vector<Point2>& poly, Point2 x, double tol = 0.0);

}  // namespace rhull

#endif
