#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rhull/delaunay.hpp"
#include "rhull/mc.hpp"
#include "rhull/predicates.hpp"

using namespace rhull;

namespace {

PointCloud make_cloud(std::vector<Point2> pts) {
    PointCloud c;
    c.points = std::move(pts);
    return c;
}

PointCloud random_cloud(long n, std::uint64_t seed, double radius = 1.0) {
    Rng rng(seed);
    PointCloud c;
    for (long i = 0; i < n; ++i) c.points.push_back(rng.in_disk({0, 0}, radius));
    return c;
}

}  // namespace

TEST_CASE("triangle") {
    const Triangulation t(make_cloud({{0, 0}, {1, 0}, {0.2, 0.9}}));
    CHECK(!t.degenerate());
    CHECK(t.solid_count() == 1);
    CHECK(t.hull_vertex_count() == 3);
    for (size_t i = 0; i < t.triangles().size(); ++i) {
        if (t.triangles()[i].ghost) continue;
        const Point2 cc = t.circumcenter(i);
        const double d0 = dist(cc, t.sites()[t.triangles()[i].v[0]]);
        const double d1 = dist(cc, t.sites()[t.triangles()[i].v[1]]);
        const double d2 = dist(cc, t.sites()[t.triangles()[i].v[2]]);
        CHECK(std::abs(d0 - d1) < 1e-12);
        CHECK(std::abs(d0 - d2) < 1e-12);
        CHECK(t.circumradius(i) == doctest::Approx(d0));
    }
}

TEST_CASE("unit square splits into two right triangles") {
    const Triangulation t(make_cloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(t.solid_count() == 2);
    for (size_t i = 0; i < t.triangles().size(); ++i)
        if (!t.triangles()[i].ghost)
            CHECK(t.circumradius(i) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
}

TEST_CASE("euler relation and empty circumdisk on random clouds") {
    for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
        const PointCloud cloud = random_cloud(250, seed);
        const Triangulation t(cloud);
        CHECK(t.solid_count() == 2 * t.site_count() - 2 - t.hull_vertex_count());
        // No site strictly inside any circumdisk (exact predicate).
        for (size_t i = 0; i < t.triangles().size(); ++i) {
            const auto& tr = t.triangles()[i];
            if (tr.ghost) continue;
            for (int s = 0; s < t.site_count(); ++s) {
                if (s == tr.v[0] || s == tr.v[1] || s == tr.v[2]) continue;
                CHECK(pred::incircle(t.sites()[tr.v[0]], t.sites()[tr.v[1]], t.sites()[tr.v[2]],
                                     t.sites()[s]) <= 0.0);
            }
        }
    }
}

TEST_CASE("collinear input degenerates to a sorted chain") {
    const Triangulation t(make_cloud({{3, 3}, {0, 0}, {2, 2}, {1, 1}}));
    CHECK(t.degenerate());
    CHECK(t.solid_count() == 0);
    const auto& chain = t.chain();
    REQUIRE(chain.size() == 4);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        CHECK(t.sites()[chain[i]].x < t.sites()[chain[i + 1]].x);
    // Two points and a single point are degenerate as well.
    CHECK(Triangulation(make_cloud({{0, 0}, {1, 2}})).degenerate());
    CHECK(Triangulation(make_cloud({{5, 5}})).degenerate());
}

TEST_CASE("exact duplicates are flagged and deduplicated") {
    const Triangulation t(make_cloud({{0, 0}, {1, 0}, {0.3, 0.8}, {1, 0}}));
    CHECK(t.has_duplicates());
    CHECK(t.site_count() == 3);
    CHECK(t.site_of_input()[1] == t.site_of_input()[3]);
}

TEST_CASE("greedy nearest-site matches brute force") {
    const PointCloud cloud = random_cloud(400, 99);
    const Triangulation t(cloud);
    Rng rng(123);
    for (int k = 0; k < 1000; ++k) {
        const Point2 q = rng.in_box({{-1.5, -1.5}, {1.5, 1.5}});
        const int got = t.nearest_site(q, static_cast<int>(rng.next_u64() % t.site_count()));
        double best = 1e300;
        for (const Point2& p : t.sites()) best = std::min(best, dist2(q, p));
        CHECK(dist2(q, t.sites()[got]) == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("delaunay neighborhood structure is symmetric") {
    const PointCloud cloud = random_cloud(200, 4242);
    const Triangulation t(cloud);
    for (int s = 0; s < t.site_count(); ++s)
        for (int nb : t.neighbors(s)) {
            const auto back = t.neighbors(nb);
            CHECK(std::find(back.begin(), back.end(), s) != back.end());
        }
}

TEST_CASE("voronoi cells: interior cells are bounded CCW polygons containing the site") {
    const PointCloud cloud = random_cloud(300, 777);
    const Triangulation t(cloud);
    int bounded = 0;
    for (int s = 0; s < t.site_count(); ++s) {
        const VoronoiCell cell = t.voronoi_cell(s);
        CHECK(cell.unbounded == (t.on_hull(s) != 0));
        if (cell.unbounded || cell.vertices.size() < 3) continue;
        ++bounded;
        double area2 = 0.0;
        for (size_t i = 0; i < cell.vertices.size(); ++i) {
            const Point2 a = cell.vertices[i];
            const Point2 b = cell.vertices[(i + 1) % cell.vertices.size()];
            area2 += cross(a, b);
        }
        CHECK(area2 > 0.0);  // counter-clockwise
        // Every cell vertex is equidistant-closest to the site (within ties).
        for (const Point2& v : cell.vertices) {
            const double dv = dist(v, t.sites()[s]);
            for (int nb : t.neighbors(s)) CHECK(dist(v, t.sites()[nb]) >= dv - 1e-9);
        }
    }
    CHECK(bounded > 100);
}

TEST_CASE("cocircular grid input keeps the empty-circumdisk property") {
    // A 5x5 integer lattice has many cocircular quadruples.
    PointCloud grid;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) grid.points.push_back({double(i), double(j)});
    const Triangulation t(grid);
    CHECK(t.solid_count() == 2 * t.site_count() - 2 - t.hull_vertex_count());
    for (size_t i = 0; i < t.triangles().size(); ++i) {
        const auto& tr = t.triangles()[i];
        if (tr.ghost) continue;
        for (int s = 0; s < t.site_count(); ++s) {
            if (s == tr.v[0] || s == tr.v[1] || s == tr.v[2]) continue;
            CHECK(pred::incircle(t.sites()[tr.v[0]], t.sites()[tr.v[1]], t.sites()[tr.v[2]],
                                 t.sites()[s]) <= 0.0);
        }
    }
}
