#include "rhull/proof_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rhull {

namespace {

double signed_angle(Point2 from, Point2 to) { return std::atan2(cross(from, to), dot(from, to)); }

constexpr double kSqrt3_2 = 0.86602540378443864676;

}  // namespace

DirectionSet DirectionSet::make(Kind k) {
    DirectionSet d;
    d.kind = k;
    switch (k) {
        case Kind::six:
            d.vectors = {UnitVec(1, 0),  UnitVec(0.5, kSqrt3_2),  UnitVec(-0.5, kSqrt3_2),
                         UnitVec(-1, 0), UnitVec(-0.5, -kSqrt3_2), UnitVec(0.5, -kSqrt3_2)};
            break;
        case Kind::upper_four:
            d.vectors = {UnitVec(1, 0), UnitVec(-1, 0), UnitVec(0.5, kSqrt3_2),
                         UnitVec(-0.5, kSqrt3_2)};
            break;
        case Kind::lower_two:
            d.vectors = {UnitVec(-0.5, -kSqrt3_2), UnitVec(0.5, -kSqrt3_2)};
            break;
    }
    return d;
}

BoundConstants BoundConstants::for_delta(double delta) {
    BoundConstants b;
    b.delta = delta;
    b.L1 = delta * M_PI / 24.0;
    b.LG = M_PI / 12.0;
    b.LF = std::sqrt(2.0) / 6.0;
    b.L2 = delta * std::min(b.LG, b.LF);
    return b;
}

double FamilyMember::area() const {
    return kind == Kind::sector ? sector_area(sec) : chord_region_area(chord);
}

bool FamilyMember::contains(Point2 world_p) const {
    const Point2 p = to_world.inverse().apply(world_p);
    return kind == Kind::sector ? sec.contains(p) : chord.contains(p);
}

double FamilyMember::farthest_distance(Point2 world_y) const {
    const Point2 y = to_world.inverse().apply(world_y);
    double best = 0.0;
    auto push = [&](Point2 c) { best = std::max(best, dist(c, y)); };
    if (kind == Kind::sector) {
        const double R = sec.radius, th = sec.half_angle;
        const Point2 u = sec.direction.vec();
        push({0, 0});
        push(R * Rotation{th}.apply(u));
        push(R * Rotation{-th}.apply(u));
        if (norm2(y) > 0.0) {
            const double beta = std::clamp(signed_angle(u, -1.0 * y), -th, th);
            push(R * Rotation{beta}.apply(u));
        } else {
            push(R * u);
        }
    } else {
        const double r = chord.r, h1 = chord.h1;
        const double lam = chord.half_width(h1);
        push({0, 0});
        push({0, -h1});
        if (chord.side != ChordRegion::Side::left_half) push({lam, -h1});
        if (chord.side != ChordRegion::Side::right_half) push({-lam, -h1});
        // Arc critical point: farthest circle point from y, if inside the arc.
        const Point2 c0{0, -r};
        const double a_min = std::atan2(r - h1, lam);
        double lo = a_min, hi = M_PI - a_min;
        if (chord.side == ChordRegion::Side::right_half) hi = M_PI / 2;
        if (chord.side == ChordRegion::Side::left_half) lo = M_PI / 2;
        const Point2 d = c0 - y;
        if (norm2(d) > 0.0) {
            const double a = std::atan2(d.y, d.x);
            if (a >= lo && a <= hi) push(c0 + r * Point2{std::cos(a), std::sin(a)});
        }
    }
    return best;
}

Point2 FamilyMember::sample(Rng& rng) const {
    if (kind == Kind::sector) {
        const double a = rng.uniform(-sec.half_angle, sec.half_angle);
        const double rad = sec.radius * std::sqrt(rng.uniform());
        const Point2 p = rad * Rotation{a}.apply(sec.direction).vec();
        return to_world.apply(sec.apex + p);
    }
    if (chord.h1 <= 0.0) return to_world.apply(Point2{0, 0});
    const Aabb box = chord.bounding_box();
    for (int k = 0; k < 100000; ++k) {
        const Point2 p = rng.in_box(box);
        if (chord.contains(p)) return to_world.apply(p);
    }
    throw std::runtime_error("FamilyMember::sample: rejection failed");
}

UnavoidableFamily family_far(Point2 x, double r) {
    if (!(r > 0.0)) throw std::domain_error("family_far: radius must be positive");
    UnavoidableFamily fam;
    fam.anchor = x;
    fam.r = r;
    fam.regime = UnavoidableFamily::Regime::far;
    fam.lower_bound_coeff = M_PI / 24.0;  // member area = (pi/24) r^2
    const RigidMotion shift = RigidMotion::rotation(0.0, x);
    for (const UnitVec& u : DirectionSet::make(DirectionSet::Kind::six).vectors) {
        FamilyMember m;
        m.kind = FamilyMember::Kind::sector;
        m.sec = Sector({0, 0}, u, M_PI / 6.0, r / 2.0);
        m.to_world = shift;
        fam.members.push_back(m);
    }
    return fam;
}

UnavoidableFamily family_near(Point2 x, double r, const SupportShape& shape) {
    if (!(r > 0.0)) throw std::domain_error("family_near: radius must be positive");
    if (r > shape.alpha() * (1.0 + 1e-12))
        throw std::invalid_argument("family_near: requires r <= rolling radius of the shape");
    const double rho = shape.boundary_distance(x);
    if (rho > r / 2.0 * (1.0 + 1e-12))
        throw std::invalid_argument("family_near: boundary distance exceeds r/2 (far regime)");
    UnitVec eta(1, 0);
    shape.project_to_boundary(x, &eta);
    const RigidMotion T = RigidMotion::map_e2_to(eta.negated(), x);
    const ContactGeometry g = contact_geometry(shape.alpha(), r, rho);

    UnavoidableFamily fam;
    fam.anchor = x;
    fam.r = r;
    fam.rho = rho;
    fam.regime = UnavoidableFamily::Regime::near;
    fam.lower_bound_coeff = std::min(M_PI / 12.0, std::sqrt(2.0) / 6.0);
    for (const UnitVec& u : DirectionSet::make(DirectionSet::Kind::upper_four).vectors) {
        FamilyMember m;
        m.kind = FamilyMember::Kind::sector;
        m.sec = Sector({0, 0}, u, M_PI / 6.0, r);
        m.to_world = T;
        fam.members.push_back(m);
    }
    for (const auto side : {ChordRegion::Side::right_half, ChordRegion::Side::left_half}) {
        FamilyMember m;
        m.kind = FamilyMember::Kind::chord_half;
        m.chord = ChordRegion(r, g.h1, side);
        m.to_world = T;
        fam.members.push_back(m);
    }
    return fam;
}

CheckRow check_unavoidable(const UnavoidableFamily& family, long trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("check_unavoidable: trials must be >= 1");
    CheckRow row;
    row.name = family.regime == UnavoidableFamily::Regime::far ? "far_family_unavoidable"
                                                               : "near_family_unavoidable";
    row.trials = trials;
    row.worst_margin = 1e300;
    Rng rng(seed);
    const double tol = 1e-9 * family.r;
    for (long t = 0; t < trials; ++t) {
        const Point2 y = rng.in_disk(family.anchor, family.r);
        double fit = 1e300;
        for (const FamilyMember& m : family.members)
            fit = std::min(fit, m.farthest_distance(y));
        const double margin = family.r - fit;
        row.worst_margin = std::min(row.worst_margin, margin);
        if (margin < -tol) ++row.failures;
    }
    return row;
}

GF classify_GF(Point2 y, Point2 x, double r, UnitVec inward_e2) {
    if (dist(y, x) > r * (1.0 + 1e-12))
        throw std::domain_error("classify_GF: probe center outside the anchor ball");
    const RigidMotion T = RigidMotion::map_e2_to(inward_e2, x);
    const Point2 yc = T.inverse().apply(y);
    return yc.y >= -0.5 * norm(yc) ? GF::G : GF::F;
}

DiskLowerBound disk_lower_bound_geometry(double alpha, double r, Point2 x) {
    if (norm2(x) == 0.0) throw std::domain_error("disk_lower_bound_geometry: x = 0 has no direction");
    const double nx = norm(x);
    if (nx > alpha) throw std::invalid_argument("disk_lower_bound_geometry: x outside the support");
    const double rho = alpha - nx;
    if (rho > r / 2.0 * (1.0 + 1e-12))
        throw std::invalid_argument("disk_lower_bound_geometry: requires d(x, boundary) <= r/2");
    DiskLowerBound out;
    out.contact = contact_geometry(alpha, r, rho);
    out.x_tilde = ((nx + r) / nx) * x;
    out.chord_area = circle_segment_area(r, out.contact.h1);
    out.cap_area = circle_segment_area(alpha, out.contact.h2);
    out.overlap = out.chord_area + out.cap_area;
    // Independent route: generic two-disk intersection at center distance alpha + r - rho.
    const double lens = disk_overlap_area(r, alpha, alpha + r - rho);
    if (std::abs(lens - out.overlap) > 1e-9 * std::max(1.0, out.overlap))
        throw std::logic_error("disk_lower_bound_geometry: slab decomposition disagrees with lens area");
    return out;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

namespace {

struct RowBuilder {
    CheckRow row;
    explicit RowBuilder(std::string name) {
        row.name = std::move(name);
        row.worst_margin = 1e300;
    }
    void tally(double margin, double tol = 0.0) {
        ++row.trials;
        row.worst_margin = std::min(row.worst_margin, margin);
        if (margin < -tol) ++row.failures;
    }
    CheckRow done() const {
        CheckRow r = row;
        if (r.trials == 0) r.worst_margin = 0.0;
        return r;
    }
};

// (r, rho) grid over 0 < rho <= r/2 <= alpha/2.
std::vector<std::pair<double, double>> contact_grid(double alpha, int g) {
    std::vector<std::pair<double, double>> cells;
    for (int i = 1; i <= g; ++i) {
        const double r = alpha * i / g;
        for (int j = 1; j <= g; ++j) cells.emplace_back(r, (r / 2.0) * j / g);
    }
    return cells;
}

CheckRow check_cone_angle_equivalence(long trials, std::uint64_t seed) {
    RowBuilder b("cone_angle_equivalence");
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
        const UnitVec u = rng.unit_dir();
        const double theta = rng.uniform(0.0, M_PI / 2);
        const Point2 x = rng.in_disk({0, 0}, 2.0);
        if (norm2(x) == 0.0) continue;
        const bool via_cone = cone_contains(u, theta, x);
        const bool via_angle = angle_between(x, u.vec()) <= theta;
        b.tally(via_cone == via_angle ? 0.0 : -1.0);
    }
    return b.done();
}

CheckRow check_sector_pair_distance(long configs, long pairs, std::uint64_t seed) {
    RowBuilder b("sector_pair_distance");
    Rng rng(seed);
    for (long c = 0; c < configs; ++c) {
        const UnitVec u = rng.unit_dir();
        const double r = rng.uniform(0.1, 3.0);
        const Sector sec({0, 0}, u, M_PI / 6, r);
        for (long p = 0; p < pairs; ++p) {
            const double a1 = rng.uniform(-M_PI / 6, M_PI / 6), a2 = rng.uniform(-M_PI / 6, M_PI / 6);
            const Point2 y = (r * std::sqrt(rng.uniform())) * Rotation{a1}.apply(u).vec();
            const Point2 z = (r * std::sqrt(rng.uniform())) * Rotation{a2}.apply(u).vec();
            b.tally(r - dist(y, z), 1e-12 * r);
        }
    }
    return b.done();
}

std::pair<CheckRow, CheckRow> check_reuleaux_inclusions(long samples, std::uint64_t seed) {
    RowBuilder inner("reuleaux_contains_sector_caps");
    RowBuilder outer("reuleaux_outside_has_far_witness");
    Rng rng(seed);
    const int configs = 20;
    for (int c = 0; c < configs; ++c) {
        const UnitVec u = rng.unit_dir();
        const double r = rng.uniform(0.2, 2.5);
        const ReuleauxRegion reg = reuleaux(u, r);
        const Sector sec({0, 0}, u, M_PI / 6, r);
        // Points of the region must be within r of every sector point.
        std::vector<Point2> ys;
        ys.reserve(samples);
        for (long i = 0; i < samples; ++i) {
            const double a = rng.uniform(-M_PI / 6, M_PI / 6);
            ys.push_back((r * std::sqrt(rng.uniform())) * Rotation{a}.apply(u).vec());
        }
        const Aabb box = reg.bounding_box();
        long got = 0;
        while (got < samples) {
            const Point2 p = rng.in_box(box);
            if (!reg.contains(p)) continue;
            ++got;
            double far = 0.0;
            for (const Point2& y : ys) far = std::max(far, dist(p, y));
            inner.tally(r - far, 1e-12 * r);
        }
        // Points clearly outside the region admit a sector point farther than r.
        const Point2 centers[3] = {reg.apex, reg.v1(), reg.v2()};
        long out_got = 0;
        while (out_got < samples) {
            const Point2 p = rng.in_box(box);
            double viol = 0.0;
            for (const Point2& cc : centers) viol = std::max(viol, dist(p, cc) - r);
            if (viol <= 1e-6) continue;  // inside or too close to the boundary
            ++out_got;
            double far = 0.0;
            for (const Point2& cc : centers) far = std::max(far, dist(p, cc));
            for (const Point2& y : ys) far = std::max(far, dist(p, y));
            outer.tally(far - r, 0.0);
        }
    }
    return {inner.done(), outer.done()};
}

CheckRow check_chord_quadrature(int g) {
    RowBuilder b("chord_area_quadrature");
    for (int i = 1; i <= g; ++i) {
        const double r = 2.0 * i / g;
        for (int j = 1; j <= g; ++j) {
            const double h1 = r * j / g;
            const double closed = chord_region_area(ChordRegion(r, h1));
            const double quad = chord_region_area_quadrature(r, h1);
            const double rel = std::abs(closed - quad) / std::max(1e-300, std::abs(quad));
            b.tally(1e-9 - rel);
        }
    }
    return b.done();
}

CheckRow check_chord_lower_bound(double alpha, int g) {
    RowBuilder b("chord_area_lower_bound");
    for (const auto& [r, rho] : contact_grid(alpha, g)) {
        const ContactGeometry c = contact_geometry(alpha, r, rho);
        const double area = chord_region_area(ChordRegion(r, c.h1));
        b.tally(area - std::sqrt(2.0) / 3.0 * std::sqrt(r) * std::pow(rho, 1.5));
    }
    return b.done();
}

CheckRow check_chord_in_rolling_disk(double alpha, long samples, std::uint64_t seed) {
    RowBuilder b("chord_in_rolling_disk");
    Rng rng(seed);
    const int configs = 10;
    for (int c = 0; c < configs; ++c) {
        const double r = rng.uniform(0.05, alpha);
        const double rho = rng.uniform(0.0, r / 2.0);
        const ContactGeometry g = contact_geometry(alpha, r, rho);
        const ChordRegion chord(r, g.h1);
        const Point2 center{0, alpha - rho};
        const Aabb box = chord.bounding_box();
        if (!(box.area() > 0.0)) continue;
        long got = 0;
        while (got < samples / configs) {
            const Point2 p = rng.in_box(box);
            if (!chord.contains(p)) continue;
            ++got;
            b.tally(alpha - dist(p, center), 1e-12 * alpha);
        }
    }
    return b.done();
}

CheckRow check_contact_system(double alpha, int g) {
    RowBuilder b("contact_system");
    for (const auto& [r, rho] : contact_grid(alpha, g)) {
        const ContactGeometry c = contact_geometry(alpha, r, rho);
        const double e1 = std::abs((r - c.h1) * (r - c.h1) + c.lambda * c.lambda - r * r);
        const double e2 = std::abs((alpha - c.h2) * (alpha - c.h2) + c.lambda * c.lambda - alpha * alpha);
        const double e3 = std::abs(c.h1 + c.h2 - rho);
        const double worst = std::max({e1, e2, e3});
        b.tally(1e-12 - worst);
        b.tally(c.h1 - rho / 2.0, 1e-12);
    }
    return b.done();
}

CheckRow check_rigid_isometry(long trials, std::uint64_t seed) {
    RowBuilder b("rigid_motion_isometry");
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
        RigidMotion m = RigidMotion::rotation(rng.uniform(0, 2 * M_PI), rng.in_disk({0, 0}, 5.0));
        if (rng.uniform() < 0.5) m = RigidMotion::mirror_x().then(m);
        const Point2 p = rng.in_disk({0, 0}, 3.0), q = rng.in_disk({0, 0}, 3.0);
        const double before = dist(p, q);
        const double after = dist(m.apply(p), m.apply(q));
        b.tally(1e-12 * std::max(1.0, before) - std::abs(after - before));
    }
    return b.done();
}

CheckRow check_cap_le_chord(double alpha, int g) {
    RowBuilder b("overlap_cap_le_chord");
    for (const auto& [r, rho] : contact_grid(alpha, g)) {
        const ContactGeometry c = contact_geometry(alpha, r, rho);
        const double chord = circle_segment_area(r, c.h1);
        const double cap = circle_segment_area(alpha, c.h2);
        b.tally(chord - cap, 1e-12);
    }
    return b.done();
}

CheckRow check_cap_quadrature(double alpha, int g) {
    RowBuilder b("cap_area_quadrature");
    for (int j = 1; j <= g; ++j) {
        const double h2 = alpha * j / g;
        const double closed = circle_segment_area(alpha, h2);
        const double quad = cap_region_area_quadrature(alpha, h2);
        const double rel = std::abs(closed - quad) / std::max(1e-300, std::abs(quad));
        b.tally(1e-9 - rel);
    }
    return b.done();
}

CheckRow check_far_tiling(long trials, std::uint64_t seed) {
    RowBuilder b("far_family_tiling");
    Rng rng(seed);
    const DirectionSet W = DirectionSet::make(DirectionSet::Kind::six);
    for (long t = 0; t < trials; ++t) {
        const Point2 x = rng.in_disk({0, 0}, 3.0);
        const double r = rng.uniform(0.1, 2.0);
        const Point2 y = rng.in_disk(x, r);
        const Point2 v = y - x;
        if (norm2(v) == 0.0) continue;
        int strictly_inside = 0;
        double best = -1e300;
        for (const UnitVec& u : W.vectors) {
            const double m = dot(v, u.vec()) - norm(v) * std::cos(M_PI / 6);
            best = std::max(best, m);
            if (m > 1e-9 * norm(v)) ++strictly_inside;
        }
        if (std::abs(best) <= 1e-9 * norm(v)) continue;  // on a sector boundary; skip ties
        b.tally(best >= 0.0 && strictly_inside == 1 ? best : -1.0);
    }
    return b.done();
}

CheckRow check_gf_cover(double r, long trials, std::uint64_t seed) {
    RowBuilder b("gf_partition_cover");
    Rng rng(seed);
    const DirectionSet WG = DirectionSet::make(DirectionSet::Kind::upper_four);
    const DirectionSet WF = DirectionSet::make(DirectionSet::Kind::lower_two);
    for (long t = 0; t < trials; ++t) {
        const Point2 y = rng.in_disk({0, 0}, r);
        if (norm2(y) == 0.0) continue;
        const GF cls = classify_GF(y, {0, 0}, r, UnitVec(0, 1));
        const auto& dirs = cls == GF::G ? WG.vectors : WF.vectors;
        double best = -1e300;
        for (const UnitVec& u : dirs)
            best = std::max(best, dot(y, u.vec()) - norm(y) * std::cos(M_PI / 6));
        b.tally(best, 1e-9 * norm(y));
    }
    return b.done();
}

CheckRow check_chord_half_in_probe_ball(double alpha, long trials, std::uint64_t seed) {
    RowBuilder b("chord_half_in_probe_ball");
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
        const double r = rng.uniform(0.05, alpha);
        const double rho = rng.uniform(0.0, r / 2.0);
        const ContactGeometry g = contact_geometry(alpha, r, rho);
        // Probe center in the downward regime, on the matching side.
        Point2 y{0, 0};
        do {
            y = rng.in_disk({0, 0}, r);
        } while (y.y >= -0.5 * norm(y));
        FamilyMember m;
        m.kind = FamilyMember::Kind::chord_half;
        m.chord = ChordRegion(r, g.h1,
                              y.x >= 0 ? ChordRegion::Side::right_half : ChordRegion::Side::left_half);
        m.to_world = RigidMotion::identity();
        b.tally(r - m.farthest_distance(y), 1e-9 * r);
    }
    return b.done();
}

// Only the chord halves are contained in the support (through the inner
// rolling disk); the full-radius sectors intentionally spill over and only
// their overlap with the rolling disk is bounded below.
CheckRow check_near_chord_members_in_support(const SupportShape& shape, double r, int anchors,
                                             long samples, std::uint64_t seed) {
    RowBuilder b("chord_members_in_support");
    Rng rng(seed);
    for (int a = 0; a < anchors; ++a) {
        const double rho = rng.uniform(1e-4, r / 2.0);
        const UnitVec dir = rng.unit_dir();
        const Point2 x = (shape.alpha() - rho) * dir.vec();
        const UnavoidableFamily fam = family_near(x, r, shape);
        for (const FamilyMember& m : fam.members) {
            if (m.kind != FamilyMember::Kind::chord_half) continue;
            for (long s = 0; s < samples; ++s) {
                const Point2 p = m.sample(rng);
                b.tally(-shape.signed_distance(p), 1e-9);
            }
        }
    }
    return b.done();
}

CheckRow check_rigid_invariance(long trials, std::uint64_t seed) {
    CheckRow agg;
    agg.name = "rigid_invariance_of_unavoidable";
    agg.worst_margin = 1e300;
    Rng rng(seed);
    for (int k = 0; k < 8; ++k) {
        RigidMotion m = RigidMotion::rotation(rng.uniform(0, 2 * M_PI), rng.in_disk({0, 0}, 4.0));
        if (k % 2 == 1) m = RigidMotion::mirror_x().then(m);
        UnavoidableFamily fam = family_far(rng.in_disk({0, 0}, 2.0), rng.uniform(0.2, 1.5));
        fam.anchor = m.apply(fam.anchor);
        for (FamilyMember& mem : fam.members) mem.to_world = mem.to_world.then(m);
        const CheckRow r = check_unavoidable(fam, trials / 8 + 1, rng.next_u64());
        agg.trials += r.trials;
        agg.failures += r.failures;
        agg.worst_margin = std::min(agg.worst_margin, r.worst_margin);
    }
    return agg;
}

CheckRow check_bound_constants() {
    RowBuilder b("bound_constants");
    const BoundConstants c = BoundConstants::for_delta(1.0 / M_PI);
    b.tally(std::abs(c.L1 - c.delta * M_PI / 24.0) == 0.0 ? 0.0 : -1.0);
    b.tally(std::abs(c.LG - M_PI / 12.0) == 0.0 ? 0.0 : -1.0);
    b.tally(std::abs(c.LF - std::sqrt(2.0) / 6.0) == 0.0 ? 0.0 : -1.0);
    b.tally(c.L2 == c.delta * c.LF ? 0.0 : -1.0);  // sqrt(2)/6 < pi/12
    b.tally(M_PI / 12.0 - std::sqrt(2.0) / 6.0);
    return b.done();
}

CheckRow check_outer_disk_overlap(double alpha, int g);

}  // namespace

CheckReport check_measure_bounds(double alpha, const std::vector<double>& r_values,
                                 const std::vector<double>& rho_fractions, double delta,
                                 long mc_samples, std::uint64_t seed) {
    if (!(alpha > 0.0) || !(delta > 0.0))
        throw std::invalid_argument("check_measure_bounds: alpha and delta must be positive");
    CheckReport rep;
    RowBuilder sector("sector_ball_overlap_bound");
    RowBuilder half("sector_halfplane_half_measure");
    RowBuilder incl("nu_halfdisk_in_rolling_disk");
    RowBuilder chordb("chord_half_overlap_bound");
    RowBuilder prob("combined_probability_bound");
    Rng rng(seed);
    const DirectionSet WG = DirectionSet::make(DirectionSet::Kind::upper_four);
    const double L2 = delta * std::min(M_PI / 12.0, std::sqrt(2.0) / 6.0);
    for (const double r : r_values) {
        if (!(r > 0.0) || r > alpha * (1 + 1e-12))
            throw std::invalid_argument("check_measure_bounds: need 0 < r <= alpha");
        for (const double f : rho_fractions) {
            const double rho = (r / 2.0) * f;
            const ContactGeometry g = contact_geometry(alpha, r, rho);
            const Point2 ball_c{0, alpha - rho};
            const double bound = (M_PI / 12.0) * std::sqrt(r) * std::pow(rho, 1.5);
            const double tau = std::min(g.nu, r);
            double min_member_overlap = 1e300;
            for (const UnitVec& u : WG.vectors) {
                // Overlap of the full sector with the rolling disk, by
                // sampling the sector uniformly (its area is exact).
                long hits = 0;
                const double sec_area = (M_PI / 6.0) * r * r;
                for (long s = 0; s < mc_samples; ++s) {
                    const double a = rng.uniform(-M_PI / 6, M_PI / 6);
                    const Point2 p = (r * std::sqrt(rng.uniform())) * Rotation{a}.apply(u).vec();
                    if (dist(p, ball_c) <= alpha) ++hits;
                }
                const double frac = static_cast<double>(hits) / mc_samples;
                const double est = sec_area * frac;
                const double se = sec_area * std::sqrt(frac * (1 - frac) / mc_samples);
                sector.tally(est - bound, 4.0 * se);
                min_member_overlap = std::min(min_member_overlap, est);
                // At least half of the tau-sector lies in the upper half-plane.
                long up = 0;
                const long ns = std::max(1L, mc_samples / 4);
                for (long s = 0; s < ns; ++s) {
                    const double a = rng.uniform(-M_PI / 6, M_PI / 6);
                    const Point2 p = (tau * std::sqrt(rng.uniform())) * Rotation{a}.apply(u).vec();
                    if (p.y >= 0.0) ++up;
                }
                const double fr = static_cast<double>(up) / ns;
                half.tally(fr - 0.5, 4.0 * std::sqrt(0.25 / ns));
            }
            // B(0, nu) in the upper half-plane sits inside the rolling disk.
            for (long s = 0; s < 64; ++s) {
                Point2 p = rng.in_disk({0, 0}, g.nu);
                p.y = std::abs(p.y);
                incl.tally(alpha - dist(p, ball_c), 1e-12 * alpha);
            }
            // Chord halves sit inside the rolling disk, so their overlap is
            // their exact area.
            const double half_area = 0.5 * circle_segment_area(r, g.h1);
            chordb.tally(half_area - (std::sqrt(2.0) / 6.0) * std::sqrt(r) * std::pow(rho, 1.5));
            min_member_overlap = std::min(min_member_overlap, half_area);
            // Every member of the near family carries probability at least
            // L2 sqrt(r) rho^{3/2} under a delta-bounded law.
            const double mc_se = (M_PI / 6.0) * r * r * std::sqrt(0.25 / mc_samples);
            prob.tally(delta * min_member_overlap - L2 * std::sqrt(r) * std::pow(rho, 1.5),
                       4.0 * delta * mc_se);
        }
    }
    rep.rows.push_back(sector.done());
    rep.rows.push_back(half.done());
    rep.rows.push_back(incl.done());
    rep.rows.push_back(chordb.done());
    rep.rows.push_back(prob.done());
    return rep;
}

namespace {

CheckRow check_outer_disk_overlap(double alpha, int g) {
    RowBuilder b("outer_disk_overlap_le_twice_chord");
    for (const auto& [r, rho] : contact_grid(alpha, g)) {
        const Point2 x{0, alpha - rho};
        const DiskLowerBound d = disk_lower_bound_geometry(alpha, r, x);
        b.tally(2.0 * d.chord_area - d.overlap, 1e-12);
    }
    return b.done();
}

}  // namespace

CheckReport run_geometry_suite(const VerifyOptions& opt) {
    CheckReport rep;
    const std::uint64_t s = opt.seed;
    rep.rows.push_back(check_cone_angle_equivalence(10000, mix_seed(s ^ 1)));
    rep.rows.push_back(check_sector_pair_distance(1000, opt.inclusion_samples, mix_seed(s ^ 2)));
    {
        auto [inner, outer] = check_reuleaux_inclusions(opt.inclusion_samples, mix_seed(s ^ 3));
        rep.rows.push_back(inner);
        rep.rows.push_back(outer);
    }
    rep.rows.push_back(check_chord_quadrature(opt.grid));
    rep.rows.push_back(check_cap_quadrature(1.0, opt.grid));
    rep.rows.push_back(check_chord_lower_bound(1.0, opt.grid));
    rep.rows.push_back(check_chord_in_rolling_disk(1.0, 100000, mix_seed(s ^ 4)));
    rep.rows.push_back(check_contact_system(1.0, opt.grid));
    rep.rows.push_back(check_rigid_isometry(10000, mix_seed(s ^ 5)));
    rep.rows.push_back(check_cap_le_chord(1.0, opt.grid));
    return rep;
}

CheckReport run_unavoidable_suite(const VerifyOptions& opt) {
    CheckReport rep;
    Rng rng(mix_seed(opt.seed ^ 0xfa4ull));
    const SupportShape disk1 = SupportShape::disk({0, 0}, 1.0);
    const double r = 0.5;

    {  // far regime, anchors spread over a window
        CheckRow agg;
        agg.name = "far_family_unavoidable";
        agg.worst_margin = 1e300;
        for (int a = 0; a < opt.anchors; ++a) {
            UnavoidableFamily fam = family_far(rng.in_disk({0, 0}, 3.0), rng.uniform(0.1, 2.0));
            if (opt.sabotage) fam.members.pop_back();
            const CheckRow row = check_unavoidable(fam, opt.trials_unavoidable, rng.next_u64());
            agg.trials += row.trials;
            agg.failures += row.failures;
            agg.worst_margin = std::min(agg.worst_margin, row.worst_margin);
        }
        if (opt.sabotage) agg.name = "far_family_sabotaged";
        rep.rows.push_back(agg);
    }
    {  // near regime on the unit disk support
        CheckRow agg;
        agg.name = "near_family_unavoidable";
        agg.worst_margin = 1e300;
        for (int a = 0; a < opt.anchors; ++a) {
            const double rho = rng.uniform(1e-4, r / 2.0);
            const Point2 x = (1.0 - rho) * rng.unit_dir().vec();
            const UnavoidableFamily fam = family_near(x, r, disk1);
            const CheckRow row = check_unavoidable(fam, opt.trials_unavoidable, rng.next_u64());
            agg.trials += row.trials;
            agg.failures += row.failures;
            agg.worst_margin = std::min(agg.worst_margin, row.worst_margin);
        }
        rep.rows.push_back(agg);
    }
    rep.rows.push_back(check_far_tiling(opt.trials_unavoidable, mix_seed(opt.seed ^ 6)));
    rep.rows.push_back(check_gf_cover(r, opt.trials_unavoidable, mix_seed(opt.seed ^ 7)));
    rep.rows.push_back(
        check_chord_half_in_probe_ball(1.0, opt.trials_unavoidable, mix_seed(opt.seed ^ 8)));
    rep.rows.push_back(check_near_chord_members_in_support(
        disk1, r, std::min(opt.anchors, 20), opt.inclusion_samples, mix_seed(opt.seed ^ 9)));
    rep.rows.push_back(check_rigid_invariance(opt.trials_unavoidable, mix_seed(opt.seed ^ 10)));
    return rep;
}

CheckReport run_bounds_suite(const VerifyOptions& opt) {
    CheckReport rep;
    rep.rows.push_back(check_bound_constants());
    std::vector<double> rs, fs;
    for (int i = 1; i <= opt.grid; ++i) {
        rs.push_back(1.0 * i / opt.grid);
        fs.push_back(1.0 * i / opt.grid);
    }
    const CheckReport mb = check_measure_bounds(1.0, rs, fs, 1.0 / M_PI, opt.mc_samples,
                                                mix_seed(opt.seed ^ 0xb011d5ull));
    rep.rows.insert(rep.rows.end(), mb.rows.begin(), mb.rows.end());
    rep.rows.push_back(check_outer_disk_overlap(1.0, opt.grid));
    return rep;
}

CheckReport run_all_suites(const VerifyOptions& opt) {
    CheckReport rep;
    for (const CheckReport& part :
         {run_geometry_suite(opt), run_unavoidable_suite(opt), run_bounds_suite(opt)})
        rep.rows.insert(rep.rows.end(), part.rows.begin(), part.rows.end());
    return rep;
}

}  // namespace rhull
