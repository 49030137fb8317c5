#ifndef RHULL_GEOM_HPP
#define RHULL_GEOM_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rhull {

/** A point (or vector) in the plane. Coordinates must be finite. */
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline double dist2(Point2 a, Point2 b) { return norm2(a - b); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

/** Axis-aligned bounding box. */
struct Aabb {
    Point2 lo{0, 0};
    Point2 hi{0, 0};
    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return width() * height(); }
    bool contains(Point2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    Aabb inflated(double m) const { return {{lo.x - m, lo.y - m}, {hi.x + m, hi.y + m}}; }
};

/** Unit vector; construction normalizes and rejects (near-)zero input. */
struct UnitVec {
    double x = 1.0;
    double y = 0.0;

    UnitVec() = default;
    UnitVec(double vx, double vy) {
        const double n = std::hypot(vx, vy);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::domain_error("UnitVec: zero or non-finite vector");
        x = vx / n;
        y = vy / n;
    }
    static UnitVec of(Point2 v) { return UnitVec(v.x, v.y); }
    Point2 vec() const { return {x, y}; }
    UnitVec negated() const {
        UnitVec u;
        u.x = -x;
        u.y = -y;
        return u;
    }
};

/** Counter-clockwise rotation by theta radians. */
struct Rotation {
    double theta = 0.0;

    Point2 apply(Point2 v) const {
        const double c = std::cos(theta), s = std::sin(theta);
        return {c * v.x - s * v.y, s * v.x + c * v.y};
    }
    UnitVec apply(UnitVec u) const { return UnitVec::of(apply(u.vec())); }
    Rotation inverse() const { return {-theta}; }
};

/** Disk with open or closed boundary. */
struct Disk {
    enum class Boundary { open, closed };
    Point2 center{0, 0};
    double radius = 0.0;
    Boundary boundary_kind = Boundary::closed;

    Disk() = default;
    Disk(Point2 c, double r, Boundary b = Boundary::closed) : center(c), radius(r), boundary_kind(b) {
        if (radius < 0.0) throw std::domain_error("Disk: negative radius");
    }
    bool contains(Point2 p) const {
        const double d2 = dist2(p, center);
        return boundary_kind == Boundary::closed ? d2 <= radius * radius : d2 < radius * radius;
    }
};

/**
 * Angle between two nonzero vectors, in [0, pi].
 * The cosine is clamped to [-1, 1] before acos so near-(anti)parallel
 * inputs cannot produce NaN.
 */
double angle_between(Point2 u, Point2 v);

/** True iff x lies in the closed cone {p : <p,u> >= |p| cos(theta)}; x = 0 counts as inside. */
bool cone_contains(UnitVec u, double theta, Point2 x);

/**
 * Circular sector: apex, axis direction, half-angle in [0, pi/2], radius > 0.
 * The full central angle is 2*half_angle.
 */
struct Sector {
    Point2 apex{0, 0};
    UnitVec direction;
    double half_angle = 0.0;
    double radius = 1.0;

    Sector() = default;
    Sector(Point2 a, UnitVec dir, double half_ang, double rad)
        : apex(a), direction(dir), half_angle(half_ang), radius(rad) {
        if (!(half_ang >= 0.0 && half_ang <= M_PI / 2 + 1e-15))
            throw std::domain_error("Sector: half_angle outside [0, pi/2]");
        if (!(rad > 0.0)) throw std::domain_error("Sector: radius must be positive");
    }
    bool contains(Point2 p) const {
        const Point2 v = p - apex;
        if (norm2(v) > radius * radius) return false;
        return dot(v, direction.vec()) >= norm(v) * std::cos(half_angle);
    }
    /** Corner points: the two radius endpoints. */
    std::array<Point2, 2> radius_endpoints() const {
        const Rotation rc{half_angle};
        return {apex + radius * rc.apply(direction).vec(),
                apex + radius * rc.inverse().apply(direction).vec()};
    }
};

/** Area of a sector: half_angle * radius^2. */
double sector_area(const Sector& s);

/**
 * Intersection of the three radius-r disks centered at the apex and at the
 * two points obtained by rotating r*u by +-pi/6 about the apex.  A set of
 * constant width r; its diameter equals r.
 */
struct ReuleauxRegion {
    Point2 apex{0, 0};
    UnitVec direction;
    double radius = 1.0;

    Point2 v1() const { return apex + radius * Rotation{M_PI / 6}.apply(direction).vec(); }
    Point2 v2() const { return apex + radius * Rotation{-M_PI / 6}.apply(direction).vec(); }
    bool contains(Point2 p) const {
        // Closed membership; the slack only absorbs the rounding of the
        // constructed centers (they sit at distance r up to an ulp).
        const double r2 = radius * radius * (1.0 + 4e-15);
        return dist2(p, apex) <= r2 && dist2(p, v1()) <= r2 && dist2(p, v2()) <= r2;
    }
    double area() const { return 0.5 * (M_PI - std::sqrt(3.0)) * radius * radius; }
    Aabb bounding_box() const {
        const Point2 a = apex, b = v1(), c = v2();
        Aabb box{{std::min({a.x, b.x, c.x}) - radius, std::min({a.y, b.y, c.y}) - radius},
                 {std::max({a.x, b.x, c.x}) + radius, std::max({a.y, b.y, c.y}) + radius}};
        return box;
    }
};

ReuleauxRegion reuleaux(UnitVec u, double r);

/**
 * The slab {-h1 <= x2 <= 0} intersected with the disk B((0,-r), r), optionally
 * restricted to the right (x1 >= 0) or left (x1 <= 0) half.  Defined in its
 * own canonical frame; compose with a RigidMotion to place it elsewhere.
 */
struct ChordRegion {
    enum class Side { full, right_half, left_half };
    double r = 1.0;
    double h1 = 0.0;
    Side side = Side::full;

    ChordRegion() = default;
    ChordRegion(double r_, double h1_, Side s = Side::full) : r(r_), h1(h1_), side(s) {
        if (!(r > 0.0)) throw std::domain_error("ChordRegion: r must be positive");
        if (!(h1 >= 0.0 && h1 <= r)) throw std::domain_error("ChordRegion: h1 outside [0, r]");
    }
    /** Half-width of the slab section at depth t = -x2, t in [0, h1]. */
    double half_width(double t) const { return std::sqrt(std::max(0.0, 2.0 * r * t - t * t)); }
    bool contains(Point2 p) const {
        if (p.y > 0.0 || p.y < -h1) return false;
        if (side == Side::right_half && p.x < 0.0) return false;
        if (side == Side::left_half && p.x > 0.0) return false;
        return p.x * p.x + (p.y + r) * (p.y + r) <= r * r;
    }
    Aabb bounding_box() const {
        const double w = half_width(h1);
        switch (side) {
            case Side::right_half: return {{0.0, -h1}, {w, 0.0}};
            case Side::left_half: return {{-w, -h1}, {0.0, 0.0}};
            default: return {{-w, -h1}, {w, 0.0}};
        }
    }
};

/**
 * Area of a chord region.  The full region is the circular segment
 *   r^2 acos((r-h1)/r) - (r-h1) sqrt(2 r h1 - h1^2);
 * each half is exactly half of it by symmetry.
 */
double chord_region_area(const ChordRegion& c);

/** Area of the circular segment of radius `radius` and height h (0 <= h <= radius). */
double circle_segment_area(double radius, double h);

/**
 * Area of the cap slab of height h2 cut from a disk of radius alpha.
 * `rho` is the total contact depth; requires 0 <= h2 <= min(rho, alpha).
 */
double cap_region_area(double alpha, double rho, double h2);

/** Exact area of the intersection of two disks (radii ra, rb, center distance d). */
double disk_overlap_area(double ra, double rb, double d);

/**
 * Contact system for a small disk of radius r touching the inside of a disk
 * of radius alpha, with contact depth rho = h1 + h2:
 *   (r - h1)^2 + lambda^2 = r^2,
 *   (alpha - h2)^2 + lambda^2 = alpha^2,
 *   h1 + h2 = rho,
 * and nu = sqrt(rho (2 alpha - rho)), the half-chord of the big disk at depth rho.
 */
struct ContactGeometry {
    double alpha = 0.0;
    double r = 0.0;
    double rho = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double lambda = 0.0;
    double nu = 0.0;
};

/** Solve the contact system in closed form.  Requires 0 < rho <= r/2 <= alpha/2. */
ContactGeometry contact_geometry(double alpha, double r, double rho);

/**
 * Rigid motion p -> M p + t with M orthogonal (det +-1, columns orthonormal
 * within 1e-12).
 */
struct RigidMotion {
    double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
    Point2 t{0, 0};

    RigidMotion() = default;
    RigidMotion(double a, double b, double c, double d, Point2 trans);

    static RigidMotion identity() { return {}; }
    static RigidMotion rotation(double theta, Point2 trans = {0, 0});
    /** Reflection across the vertical axis: (x1, x2) -> (-x1, x2). */
    static RigidMotion mirror_x(Point2 trans = {0, 0});
    /** Orthogonal map sending e2 = (0,1) to `image_of_e2`, then translating. */
    static RigidMotion map_e2_to(UnitVec image_of_e2, Point2 trans);

    Point2 apply(Point2 p) const { return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y}; }
    Point2 apply_linear(Point2 p) const { return {m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y}; }
    UnitVec apply(UnitVec u) const { return UnitVec::of(apply_linear(u.vec())); }
    double det() const { return m00 * m11 - m01 * m10; }
    RigidMotion inverse() const;
    RigidMotion then(const RigidMotion& second) const;
};

/** Adaptive Simpson quadrature of f over [a, b] to the given relative tolerance. */
double integrate_adaptive(double (*f)(double, const void*), const void* ctx, double a, double b,
                          double rel_tol);

/**
 * Quadrature evaluation of the chord-region integral  int_0^h1 2 sqrt(2 r y - y^2) dy,
 * using the substitution y = s^2 to remove the square-root singularity at 0.
 * Serves as an independent cross-check of chord_region_area.
 */
double chord_region_area_quadrature(double r, double h1, double rel_tol = 1e-12);

/** Same integral family for the cap of radius alpha and height h2. */
double cap_region_area_quadrature(double alpha, double h2, double rel_tol = 1e-12);

}  // namespace rhull

#endif
