#include "rhull/predicates.hpp"

#include <cmath>

namespace rhull::pred {

namespace {

// Error-free transforms.  two_prod relies on std::fma, which is exact even
// when lowered to the soft-float fallback.
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bv = s - a;
    const double av = s - bv;
    e = (a - av) + (b - bv);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

// Nonoverlapping expansion with components in increasing magnitude order.
// Capacity is sized for the full incircle determinant (48 products of four
// doubles, eight components each).
struct Expansion {
    static constexpr int kCap = 400;
    double c[kCap];
    int n = 0;

    void clear() { n = 0; }

    // Grow-expansion: add a single double, keeping the invariant.
    void add(double b) {
        double q = b;
        int out = 0;
        for (int i = 0; i < n; ++i) {
            double s, e;
            two_sum(q, c[i], s, e);
            if (e != 0.0) c[out++] = e;
            q = s;
        }
        c[out++] = q;
        n = out;
    }

    void add_product(double a, double b) {
        double p, e;
        two_prod(a, b, p, e);
        if (e != 0.0) add(e);
        if (p != 0.0) add(p);
    }

    // Add the exact product a*b*c*d.
    void add_product4(double a, double b, double c_, double d) {
        double p1, e1, p2, e2;
        two_prod(a, b, p1, e1);
        two_prod(c_, d, p2, e2);
        // (p1 + e1)(p2 + e2) expanded into four exact products.
        add_scaled(p1, p2);
        add_scaled(p1, e2);
        add_scaled(e1, p2);
        add_scaled(e1, e2);
    }

    void add_scaled(double a, double b) {
        if (a == 0.0 || b == 0.0) return;
        double p, e;
        two_prod(a, b, p, e);
        if (e != 0.0) add(e);
        add(p);
    }

    // The sign of the expansion is the sign of its most significant component.
    double estimate() const {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += c[i];
        return s;
    }
    double sign_value() const { return n == 0 ? 0.0 : (estimate()); }
};

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

double orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
    // det = ax by - ax cy - ay bx + ay cx + bx cy - by cx
    Expansion e;
    e.clear();
    e.add_scaled(a.x, b.y);
    e.add_scaled(-a.x, c.y);
    e.add_scaled(-a.y, b.x);
    e.add_scaled(a.y, c.x);
    e.add_scaled(b.x, c.y);
    e.add_scaled(-b.y, c.x);
    return e.sign_value();
}

// One signed 3x3 minor |px py plift; qx qy qlift; rx ry rlift| accumulated
// into the expansion, with lift(v) = vx^2 + vy^2 expanded in place.
void add_minor(Expansion& e, double sgn, const Point2& p, const Point2& q, const Point2& r) {
    // + px qy lift(r): px*qy*rx*rx + px*qy*ry*ry
    e.add_product4(sgn * p.x, q.y, r.x, r.x);
    e.add_product4(sgn * p.x, q.y, r.y, r.y);
    // - px ry lift(q)
    e.add_product4(-sgn * p.x, r.y, q.x, q.x);
    e.add_product4(-sgn * p.x, r.y, q.y, q.y);
    // - py qx lift(r)
    e.add_product4(-sgn * p.y, q.x, r.x, r.x);
    e.add_product4(-sgn * p.y, q.x, r.y, r.y);
    // + py rx lift(q)
    e.add_product4(sgn * p.y, r.x, q.x, q.x);
    e.add_product4(sgn * p.y, r.x, q.y, q.y);
    // + qx ry lift(p)
    e.add_product4(sgn * q.x, r.y, p.x, p.x);
    e.add_product4(sgn * q.x, r.y, p.y, p.y);
    // - qy rx lift(p)
    e.add_product4(-sgn * q.y, r.x, p.x, p.x);
    e.add_product4(-sgn * q.y, r.x, p.y, p.y);
}

double incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    // Cofactor expansion of
    //   | ax ay ax^2+ay^2 1 |
    //   | bx by bx^2+by^2 1 |
    //   | cx cy cx^2+cy^2 1 |
    //   | dx dy dx^2+dy^2 1 |
    // along the last column; positive iff d is inside the circle through a,b,c CCW.
    Expansion e;
    e.clear();
    add_minor(e, -1.0, b, c, d);
    add_minor(e, +1.0, a, c, d);
    add_minor(e, -1.0, a, b, d);
    add_minor(e, +1.0, a, b, c);
    return e.sign_value();
}

}  // namespace

double orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det;
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det;
        detsum = -detleft - detright;
    } else {
        return det;
    }
    if (std::abs(det) >= kCcwErrBound * detsum) return det;
    return orient2d_exact(a, b, c);
}

double incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det =
        alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    if (std::abs(det) > kIccErrBound * permanent) return det;
    return incircle_exact(a, b, c, d);
}

}  // namespace rhull::pred
