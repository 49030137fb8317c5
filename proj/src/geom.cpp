#include "rhull/geom.hpp"

#include <algorithm>

namespace rhull {

double angle_between(Point2 u, Point2 v) {
    const double nu = norm(u), nv = norm(v);
    if (!(nu > 0.0) || !(nv > 0.0)) throw std::domain_error("angle_between: zero vector");
    const double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

bool cone_contains(UnitVec u, double theta, Point2 x) {
    if (!(theta >= 0.0 && theta <= M_PI / 2 + 1e-15))
        throw std::domain_error("cone_contains: theta outside [0, pi/2]");
    return dot(x, u.vec()) >= norm(x) * std::cos(theta);
}

double sector_area(const Sector& s) { return s.half_angle * s.radius * s.radius; }

ReuleauxRegion reuleaux(UnitVec u, double r) {
    if (!(r > 0.0)) throw std::domain_error("reuleaux: radius must be positive");
    ReuleauxRegion reg;
    reg.apex = {0, 0};
    reg.direction = u;
    reg.radius = r;
    return reg;
}

double circle_segment_area(double radius, double h) {
    if (!(radius > 0.0)) throw std::domain_error("circle_segment_area: radius must be positive");
    if (!(h >= 0.0 && h <= radius)) throw std::domain_error("circle_segment_area: height outside [0, radius]");
    const double c = std::clamp((radius - h) / radius, -1.0, 1.0);
    return radius * radius * std::acos(c) - (radius - h) * std::sqrt(std::max(0.0, 2.0 * radius * h - h * h));
}

double chord_region_area(const ChordRegion& c) {
    const double full = circle_segment_area(c.r, c.h1);
    return c.side == ChordRegion::Side::full ? full : 0.5 * full;
}

double cap_region_area(double alpha, double rho, double h2) {
    if (!(alpha > 0.0)) throw std::domain_error("cap_region_area: alpha must be positive");
    if (!(h2 >= 0.0 && h2 <= alpha)) throw std::domain_error("cap_region_area: h2 outside [0, alpha]");
    if (h2 > rho + 1e-12 * std::max(1.0, rho))
        throw std::domain_error("cap_region_area: h2 exceeds contact depth rho");
    return circle_segment_area(alpha, h2);
}

double disk_overlap_area(double ra, double rb, double d) {
    if (!(ra > 0.0 && rb > 0.0)) throw std::domain_error("disk_overlap_area: radii must be positive");
    if (d >= ra + rb) return 0.0;
    if (d <= std::abs(ra - rb)) {
        const double rm = std::min(ra, rb);
        return M_PI * rm * rm;
    }
    const double ca = std::clamp((d * d + ra * ra - rb * rb) / (2.0 * d * ra), -1.0, 1.0);
    const double cb = std::clamp((d * d + rb * rb - ra * ra) / (2.0 * d * rb), -1.0, 1.0);
    const double k = (-d + ra + rb) * (d + ra - rb) * (d - ra + rb) * (d + ra + rb);
    return ra * ra * std::acos(ca) + rb * rb * std::acos(cb) - 0.5 * std::sqrt(std::max(0.0, k));
}

ContactGeometry contact_geometry(double alpha, double r, double rho) {
    if (!(r > 0.0 && alpha > 0.0)) throw std::invalid_argument("contact_geometry: radii must be positive");
    if (r > alpha * (1.0 + 1e-12)) throw std::invalid_argument("contact_geometry: requires r <= alpha");
    if (!(rho >= 0.0) || rho > r / 2 * (1.0 + 1e-12))
        throw std::invalid_argument("contact_geometry: requires 0 <= rho <= r/2");
    ContactGeometry g;
    g.alpha = alpha;
    g.r = r;
    g.rho = rho;
    const double denom = 2.0 * (alpha + r - rho);
    g.h1 = rho * (2.0 * alpha - rho) / denom;
    g.h2 = rho * (2.0 * r - rho) / denom;
    g.lambda = std::sqrt(std::max(0.0, 2.0 * r * g.h1 - g.h1 * g.h1));
    g.nu = std::sqrt(std::max(0.0, rho * (2.0 * alpha - rho)));
    return g;
}

RigidMotion::RigidMotion(double a, double b, double c, double d, Point2 trans)
    : m00(a), m01(b), m10(c), m11(d), t(trans) {
    const double c0 = a * a + c * c, c1 = b * b + d * d, x = a * b + c * d;
    if (std::abs(c0 - 1.0) > 1e-12 || std::abs(c1 - 1.0) > 1e-12 || std::abs(x) > 1e-12)
        throw std::domain_error("RigidMotion: coefficient matrix is not orthogonal");
}

RigidMotion RigidMotion::rotation(double theta, Point2 trans) {
    const double c = std::cos(theta), s = std::sin(theta);
    RigidMotion m;
    m.m00 = c;
    m.m01 = -s;
    m.m10 = s;
    m.m11 = c;
    m.t = trans;
    return m;
}

RigidMotion RigidMotion::mirror_x(Point2 trans) {
    RigidMotion m;
    m.m00 = -1.0;
    m.m11 = 1.0;
    m.t = trans;
    return m;
}

RigidMotion RigidMotion::map_e2_to(UnitVec image_of_e2, Point2 trans) {
    // Rotation sending (0,1) to the target keeps orientation (+1 determinant).
    return rotation(std::atan2(image_of_e2.y, image_of_e2.x) - M_PI / 2, trans);
}

RigidMotion RigidMotion::inverse() const {
    RigidMotion inv;
    // Orthogonal: inverse of the linear part is its transpose.
    inv.m00 = m00;
    inv.m01 = m10;
    inv.m10 = m01;
    inv.m11 = m11;
    inv.t = {-(inv.m00 * t.x + inv.m01 * t.y), -(inv.m10 * t.x + inv.m11 * t.y)};
    return inv;
}

RigidMotion RigidMotion::then(const RigidMotion& s) const {
    RigidMotion r;
    r.m00 = s.m00 * m00 + s.m01 * m10;
    r.m01 = s.m00 * m01 + s.m01 * m11;
    r.m10 = s.m10 * m00 + s.m11 * m10;
    r.m11 = s.m10 * m01 + s.m11 * m11;
    r.t = s.apply(t);
    return r;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(double (*f)(double, const void*), const void* ctx, double a, double fa, double b,
             double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm, ctx), frm = f(rm, ctx);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, ctx, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, ctx, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(double (*f)(double, const void*), const void* ctx, double a, double b,
                          double rel_tol) {
    if (!(b >= a)) throw std::domain_error("integrate_adaptive: empty interval");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a, ctx), fb = f(b, ctx), fm = f(m, ctx);
    const double whole = simpson(a, fa, b, fb, fm);
    const double scale = std::max(std::abs(whole), 1e-300);
    return adapt(f, ctx, a, fa, b, fb, m, fm, whole, rel_tol * scale, 48);
}

namespace {

struct SegCtx {
    double radius;
};

// After y = s^2 the integrand 2 sqrt(2 R y - y^2) becomes 4 s^2 sqrt(2R - s^2), smooth at 0.
double seg_integrand(double s, const void* ctx) {
    const double R = static_cast<const SegCtx*>(ctx)->radius;
    return 4.0 * s * s * std::sqrt(std::max(0.0, 2.0 * R - s * s));
}

}  // namespace

double chord_region_area_quadrature(double r, double h1, double rel_tol) {
    if (!(h1 >= 0.0 && h1 <= r)) throw std::domain_error("chord_region_area_quadrature: h1 outside [0, r]");
    SegCtx c{r};
    return integrate_adaptive(seg_integrand, &c, 0.0, std::sqrt(h1), rel_tol);
}

double cap_region_area_quadrature(double alpha, double h2, double rel_tol) {
    if (!(h2 >= 0.0 && h2 <= alpha))
        throw std::domain_error("cap_region_area_quadrature: h2 outside [0, alpha]");
    SegCtx c{alpha};
    return integrate_adaptive(seg_integrand, &c, 0.0, std::sqrt(h2), rel_tol);
}

}  // namespace rhull
