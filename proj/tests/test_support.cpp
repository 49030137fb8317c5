#include <doctest.h>

#include <cmath>

#include "rhull/mc.hpp"
#include "rhull/support.hpp"

using namespace rhull;

TEST_CASE("membership per shape kind") {
    const SupportShape d = SupportShape::disk({0, 0}, 1.0);
    CHECK(d.contains({0.5, 0}));
    CHECK(!d.contains({1.5, 0}));
    const SupportShape a = SupportShape::annulus({0, 0}, 0.5, 1.0);
    CHECK(!a.contains({0, 0}));
    CHECK(a.contains({0.75, 0}));
    const SupportShape st = SupportShape::stadium({-1, 0}, {1, 0}, 0.5);
    CHECK(st.contains({1, 0.49}));
    CHECK(!st.contains({1, 0.51}));
    CHECK(!st.contains({1.51, 0}));
}

TEST_CASE("boundary distance closed forms") {
    const SupportShape d = SupportShape::disk({0, 0}, 1.0);
    CHECK(d.boundary_distance({0.3, 0}) == doctest::Approx(0.7).epsilon(1e-14));
    const SupportShape a = SupportShape::annulus({0, 0}, 0.5, 1.0);
    CHECK(a.boundary_distance({0.75, 0}) == doctest::Approx(0.25).epsilon(1e-14));
    const SupportShape st = SupportShape::stadium({-1, 0}, {1, 0}, 0.5);
    CHECK(st.boundary_distance({0, 0}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(d.boundary_distance({2, 0}), std::invalid_argument);
}

TEST_CASE("areas and inner-band profiles") {
    const SupportShape d = SupportShape::disk({0, 0}, 1.0);
    CHECK(d.area() == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(d.steiner_profile()(0.5) == doctest::Approx(0.75 * M_PI).epsilon(1e-14));
    CHECK(d.steiner_profile().derivative(0.5) == doctest::Approx(M_PI).epsilon(1e-14));

    const SupportShape two =
        SupportShape::multi_disk({{{0, 0}, 1.0}, {{4, 0}, 1.0}});
    CHECK(two.area() == doctest::Approx(2 * M_PI).epsilon(1e-14));
    CHECK(two.steiner_profile()(0.3) ==
          doctest::Approx(2 * d.steiner_profile()(0.3)).epsilon(1e-14));
    CHECK(two.alpha() == doctest::Approx(1.0));

    // Annulus profile against a direct estimate of the inner band measure.
    const SupportShape an = SupportShape::annulus({0, 0}, 0.5, 1.0);
    CHECK(an.alpha() == doctest::Approx(0.25));
    for (double z : {0.05, 0.1, 0.2}) {
        const McArea band = region_area_mc(
            [&](Point2 p) { return an.contains(p) && an.boundary_distance(p) <= z; },
            an.bounding_box(), 400000, 71);
        const double expect = an.steiner_profile()(z);
        CHECK(std::abs(band.estimate - expect) < 0.01 * an.area());
        // Closed form for this annulus is linear: 3 pi z.
        CHECK(expect == doctest::Approx(3 * M_PI * z).epsilon(1e-12));
    }
}

TEST_CASE("profiles are quadratic: three-point interpolation reproduces them") {
    const SupportShape shapes[] = {SupportShape::disk({0.3, -1}, 0.8),
                                   SupportShape::annulus({0, 0}, 0.5, 1.0),
                                   SupportShape::stadium({-1, 0}, {1, 0.5}, 0.4),
                                   SupportShape::multi_disk({{{0, 0}, 1.0}, {{4, 0}, 1.5}})};
    for (const SupportShape& s : shapes) {
        const SteinerProfile f = s.steiner_profile();
        const double a = s.alpha();
        const double z0 = 0.1 * a, z1 = 0.5 * a, z2 = 0.9 * a;
        // Lagrange coefficients through three nodes.
        auto interp = [&](double z) {
            return f(z0) * (z - z1) * (z - z2) / ((z0 - z1) * (z0 - z2)) +
                   f(z1) * (z - z0) * (z - z2) / ((z1 - z0) * (z1 - z2)) +
                   f(z2) * (z - z0) * (z - z1) / ((z2 - z0) * (z2 - z1));
        };
        for (int k = 1; k <= 10; ++k) {
            const double z = a * k / 11.0;
            CHECK(std::abs(interp(z) - f(z)) < 1e-9 * std::max(1.0, f(z)));
        }
    }
}

TEST_CASE("uniform sampling matches area ratios") {
    const SupportShape d = SupportShape::disk({0, 0}, 1.0);
    const SamplingLaw law = SamplingLaw::uniform(d);
    CHECK(law.delta == doctest::Approx(1.0 / M_PI));
    CHECK(law.beta == doctest::Approx(1.0 / M_PI));
    const PointCloud cloud = sample(law, 100000, 2024);
    for (const Point2& p : cloud.points) CHECK(d.contains(p));
    // Empirical mass of probe disks matches their area fraction within the
    // binomial band.
    struct ProbeDisk {
        Point2 c;
        double radius;
    };
    for (const ProbeDisk pd : {ProbeDisk{{0, 0}, 0.5}, ProbeDisk{{0.4, 0.2}, 0.3}}) {
        long inside = 0;
        for (const Point2& p : cloud.points)
            if (dist(p, pd.c) <= pd.radius) ++inside;
        const double frac = static_cast<double>(inside) / cloud.n();
        const double expect = pd.radius * pd.radius;  // entirely inside the unit disk
        const double sigma = std::sqrt(expect * (1 - expect) / cloud.n());
        CHECK(std::abs(frac - expect) < 4 * sigma);
    }

    const PointCloud one = sample(law, 1, 5);
    CHECK(one.n() == 1);
    CHECK(d.contains(one.points[0]));
    CHECK_THROWS_AS(sample(law, 0, 1), std::invalid_argument);
}

TEST_CASE("linear density law brackets min and max density") {
    const SupportShape d = SupportShape::disk({0, 0}, 1.0);
    const SamplingLaw law = SamplingLaw::linear(d, 1.0, {1.0, 0.0});  // weight 1 + x
    const PointCloud cloud = sample(law, 200000, 77);
    // Density estimates over small boxes wholly inside the disk.
    const double bw = 0.25;
    double max_density = 0.0, min_density = 1e300;
    for (double cx = -0.625; cx <= 0.626; cx += 0.25)
        for (double cy = -0.625; cy <= 0.626; cy += 0.25) {
            if (std::hypot(std::abs(cx) + bw / 2, std::abs(cy) + bw / 2) > 1.0) continue;
            long hits = 0;
            for (const Point2& p : cloud.points)
                if (std::abs(p.x - cx) <= bw / 2 && std::abs(p.y - cy) <= bw / 2) ++hits;
            const double dens = static_cast<double>(hits) / cloud.n() / (bw * bw);
            max_density = std::max(max_density, dens);
            min_density = std::min(min_density, dens);
        }
    // True density runs from 0 (left edge) to 2/pi (right edge); the sampled
    // boxes live in [-0.75, 0.75] so their true range is [0.25/pi, 1.75/pi].
    CHECK(max_density <= law.beta * 1.05);
    CHECK(min_density >= law.delta - 1e-12);
    CHECK(max_density > 1.4 / M_PI);
    CHECK(min_density < 0.6 / M_PI);
}

TEST_CASE("rejection guard rejects pathologically thin shapes") {
    // A long diagonal needle: the bounding box dwarfs the shape.
    const SupportShape thin = SupportShape::stadium({0, 0}, {1000, 1000}, 0.001);
    const SamplingLaw law = SamplingLaw::uniform(thin);
    CHECK_THROWS_AS(sample(law, 10, 1), std::runtime_error);
}

TEST_CASE("rolling verification") {
    const SupportShape d = SupportShape::disk({0, 0}, 1.0);
    CHECK(d.verify_rolling(1.0, 200).passed());
    const RollingReport bad = d.verify_rolling(1.01, 200);
    CHECK(bad.inner_violations > 0);
    CHECK(bad.worst_depth > 1e-3);

    const SupportShape two = SupportShape::multi_disk({{{0, 0}, 1.0}, {{4, 0}, 1.0}});
    CHECK(two.verify_rolling(1.0, 400).passed());

    const SupportShape an = SupportShape::annulus({0, 0}, 0.5, 1.0);
    CHECK(an.verify_rolling(an.alpha(), 400).passed());
    const SupportShape st = SupportShape::stadium({-1, 0}, {1, 0}, 0.5);
    CHECK(st.verify_rolling(st.alpha(), 400).passed());
    // Certified radii pass at a dense boundary sampling.
    CHECK(d.verify_rolling(1.0, 1000).worst_depth < 1e-9);
}

TEST_CASE("boundary points are at distance zero from the boundary") {
    const SupportShape shapes[] = {SupportShape::disk({0.2, 0.1}, 0.9),
                                   SupportShape::annulus({0, 0}, 0.4, 1.1),
                                   SupportShape::stadium({-1, -0.3}, {0.7, 0.4}, 0.35),
                                   SupportShape::multi_disk({{{0, 0}, 0.8}, {{3, 1}, 0.6}})};
    for (const SupportShape& s : shapes)
        for (int k = 0; k < 500; ++k) {
            UnitVec n(1, 0);
            const Point2 b = s.boundary_point((k + 0.25) / 500.0, &n);
            CHECK(std::abs(s.signed_distance(b)) < 1e-9);
            // The outward normal leads out of the set immediately.
            CHECK(s.signed_distance(b + 1e-6 * n.vec()) > 0.0);
            CHECK(s.signed_distance(b - 1e-6 * n.vec()) < 0.0);
        }
}

TEST_CASE("multi_disk separation validation") {
    CHECK_THROWS_AS(SupportShape::multi_disk({{{0, 0}, 1.0}, {{1.5, 0}, 1.0}}),
                    std::invalid_argument);
    // Gap of 1 with unit radii certifies alpha = 0.5.
    const SupportShape tight = SupportShape::multi_disk({{{0, 0}, 1.0}, {{3, 0}, 1.0}});
    CHECK(tight.alpha() == doctest::Approx(0.5));
    CHECK(tight.verify_rolling(tight.alpha(), 400).passed());
}

TEST_CASE("projection to the boundary returns the metric projection") {
    Rng rng(13);
    const SupportShape shapes[] = {SupportShape::disk({0, 0}, 1.0),
                                   SupportShape::annulus({0, 0}, 0.5, 1.0),
                                   SupportShape::stadium({-1, 0}, {1, 0}, 0.5)};
    for (const SupportShape& s : shapes)
        for (int i = 0; i < 300; ++i) {
            Point2 x = rng.in_box(s.bounding_box());
            if (!s.contains(x)) continue;
            UnitVec n(1, 0);
            const Point2 p = s.project_to_boundary(x, &n);
            CHECK(std::abs(s.signed_distance(p)) < 1e-9);
            CHECK(dist(x, p) == doctest::Approx(s.boundary_distance(x)).epsilon(1e-9));
        }
}
