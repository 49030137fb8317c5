#include <doctest.h>

#include <cmath>

#include "rhull/mc.hpp"
#include "rhull/predicates.hpp"

using namespace rhull;
using pred::incircle;
using pred::orient2d;

namespace {
int sgn(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
}  // namespace

TEST_CASE("orientation basics") {
    CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) > 0);
    CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) < 0);
    CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0.0);
    CHECK(orient2d({0, 0}, {1e-160, 1e-160}, {2e-160, 2e-160}) == 0.0);
}

TEST_CASE("orientation sign is exact near degeneracy") {
    // Points on a line, shifted by single ulps: sign must match the shift.
    const double base = 0.5;
    const double up = std::nextafter(base, 1.0);
    const double down = std::nextafter(base, 0.0);
    CHECK(orient2d({0, 0}, {1, base}, {2, 2 * base}) == 0.0);
    CHECK(orient2d({0, 0}, {1, base}, {2, 2 * up}) > 0.0);
    CHECK(orient2d({0, 0}, {1, base}, {2, 2 * down}) < 0.0);

    // Exact antisymmetry and cyclic symmetry on random triples.
    Rng rng(3);
    for (int i = 0; i < 20000; ++i) {
        const Point2 a = rng.in_box({{-2, -2}, {2, 2}});
        const Point2 b = rng.in_box({{-2, -2}, {2, 2}});
        Point2 c = rng.in_box({{-2, -2}, {2, 2}});
        if (i % 3 == 0) c = {a.x + (b.x - a.x) * 0.5, a.y + (b.y - a.y) * 0.5};  // near-collinear
        const int s = sgn(orient2d(a, b, c));
        CHECK(sgn(orient2d(b, c, a)) == s);
        CHECK(sgn(orient2d(c, a, b)) == s);
        CHECK(sgn(orient2d(b, a, c)) == -s);
    }
}

TEST_CASE("incircle basics and cocircular exactness") {
    const Point2 a{0, 0}, b{1, 0}, c{0, 1};
    CHECK(incircle(a, b, c, {0.25, 0.25}) > 0);
    CHECK(incircle(a, b, c, {2, 2}) < 0);
    // Unit square: all four corners are cocircular.
    CHECK(incircle({0, 0}, {1, 0}, {1, 1}, {0, 1}) == 0.0);
    // Perturb the probe by one ulp across the circle boundary.
    CHECK(incircle({0, 0}, {1, 0}, {1, 1}, {std::nextafter(0.0, 1.0), 1}) > 0.0);
    CHECK(incircle({0, 0}, {1, 0}, {1, 1}, {std::nextafter(0.0, -1.0), 1}) < 0.0);
}

TEST_CASE("incircle agrees with the distance test away from ties") {
    Rng rng(7);
    for (int i = 0; i < 20000; ++i) {
        const Point2 a = rng.in_disk({0, 0}, 2);
        const Point2 b = rng.in_disk({0, 0}, 2);
        const Point2 c = rng.in_disk({0, 0}, 2);
        if (orient2d(a, b, c) <= 0) continue;
        const Point2 d = rng.in_disk({0, 0}, 3);
        // Reference via the circumcenter in long double.
        const long double ax = a.x, ay = a.y, bx = b.x, by = b.y, cx = c.x, cy = c.y;
        const long double dd = 2 * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
        const long double nu = (bx - ax) * (bx + ax) + (by - ay) * (by + ay);
        const long double nv = (cx - ax) * (cx + ax) + (cy - ay) * (cy + ay);
        const long double ux = (nu * (cy - ay) - nv * (by - ay)) / dd;
        const long double uy = (nv * (bx - ax) - nu * (cx - ax)) / dd;
        const long double r2 = (ux - ax) * (ux - ax) + (uy - ay) * (uy - ay);
        const long double q2 = (ux - d.x) * (ux - d.x) + (uy - d.y) * (uy - d.y);
        const long double margin = r2 - q2;
        if (std::abs(static_cast<double>(margin)) < 1e-12) continue;  // too close to call
        CHECK(sgn(incircle(a, b, c, d)) == (margin > 0 ? 1 : -1));
    }
}
