#include "rhull/support.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_set>

namespace rhull {

namespace {

// Distance from x to the closed segment [a, b], and the closest segment point.
double segment_distance(Point2 x, Point2 a, Point2 b, Point2* closest) {
    const Point2 ab = b - a;
    const double len2 = norm2(ab);
    double t = len2 > 0.0 ? std::clamp(dot(x - a, ab) / len2, 0.0, 1.0) : 0.0;
    const Point2 q = a + t * ab;
    if (closest) *closest = q;
    return dist(x, q);
}

}  // namespace

Aabb PointCloud::bounding_box() const {
    if (points.empty()) throw std::domain_error("PointCloud: empty cloud has no bounding box");
    Aabb box{points[0], points[0]};
    for (const Point2& p : points) {
        box.lo.x = std::min(box.lo.x, p.x);
        box.lo.y = std::min(box.lo.y, p.y);
        box.hi.x = std::max(box.hi.x, p.x);
        box.hi.y = std::max(box.hi.y, p.y);
    }
    return box;
}

SupportShape SupportShape::disk(Point2 center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("SupportShape::disk: radius must be positive");
    SupportShape s;
    s.kind_ = Kind::disk;
    s.center_ = center;
    s.radius_ = radius;
    s.alpha_ = radius;
    return s;
}

SupportShape SupportShape::annulus(Point2 center, double r_in, double r_out) {
    if (!(0.0 < r_in && r_in < r_out))
        throw std::invalid_argument("SupportShape::annulus: requires 0 < r_in < r_out");
    SupportShape s;
    s.kind_ = Kind::annulus;
    s.center_ = center;
    s.r_in_ = r_in;
    s.r_out_ = r_out;
    s.alpha_ = std::min(r_in, 0.5 * (r_out - r_in));
    return s;
}

SupportShape SupportShape::multi_disk(const std::vector<std::pair<Point2, double>>& disks) {
    if (disks.empty()) throw std::invalid_argument("SupportShape::multi_disk: no components");
    SupportShape s;
    s.kind_ = Kind::multi_disk;
    s.disks_ = disks;
    double alpha = disks[0].second;
    for (const auto& [c, r] : disks) {
        if (!(r > 0.0)) throw std::invalid_argument("SupportShape::multi_disk: radius must be positive");
        alpha = std::min(alpha, r);
    }
    for (size_t i = 0; i < disks.size(); ++i)
        for (size_t j = i + 1; j < disks.size(); ++j) {
            const double gap = dist(disks[i].first, disks[j].first) - disks[i].second - disks[j].second;
            if (gap < 2.0 * alpha - 1e-12) {
                // A ball of the rolling radius must pass between any two components.
                alpha = std::min(alpha, 0.5 * gap);
            }
            if (gap <= 0.0)
                throw std::invalid_argument("SupportShape::multi_disk: components overlap or touch");
        }
    s.alpha_ = alpha;
    return s;
}

SupportShape SupportShape::stadium(Point2 a, Point2 b, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("SupportShape::stadium: radius must be positive");
    if (dist(a, b) <= 0.0) throw std::invalid_argument("SupportShape::stadium: degenerate segment");
    SupportShape s;
    s.kind_ = Kind::stadium;
    s.seg_a_ = a;
    s.seg_b_ = b;
    s.radius_ = radius;
    s.alpha_ = radius;
    return s;
}

SupportShape SupportShape::from_config(const std::string& kind, const std::vector<double>& p) {
    if (kind == "disk") {
        if (p.size() != 3) throw std::invalid_argument("shape disk: expected params cx,cy,radius");
        return disk({p[0], p[1]}, p[2]);
    }
    if (kind == "annulus") {
        if (p.size() != 4) throw std::invalid_argument("shape annulus: expected params cx,cy,r_in,r_out");
        return annulus({p[0], p[1]}, p[2], p[3]);
    }
    if (kind == "multi_disk") {
        if (p.size() < 3 || p.size() % 3 != 0)
            throw std::invalid_argument("shape multi_disk: expected params cx,cy,r per component");
        std::vector<std::pair<Point2, double>> d;
        for (size_t i = 0; i + 2 < p.size() + 1; i += 3) d.push_back({{p[i], p[i + 1]}, p[i + 2]});
        return multi_disk(d);
    }
    if (kind == "stadium") {
        if (p.size() != 5) throw std::invalid_argument("shape stadium: expected params ax,ay,bx,by,radius");
        return stadium({p[0], p[1]}, {p[2], p[3]}, p[4]);
    }
    throw std::invalid_argument("unknown shape kind: " + kind);
}

std::string SupportShape::kind_name() const {
    switch (kind_) {
        case Kind::disk: return "disk";
        case Kind::annulus: return "annulus";
        case Kind::multi_disk: return "multi_disk";
        case Kind::stadium: return "stadium";
    }
    return "?";
}

double SupportShape::signed_distance(Point2 x) const {
    switch (kind_) {
        case Kind::disk:
            return dist(x, center_) - radius_;
        case Kind::annulus: {
            const double d = dist(x, center_);
            return std::max(d - r_out_, r_in_ - d);
        }
        case Kind::multi_disk: {
            double sd = dist(x, disks_[0].first) - disks_[0].second;
            for (size_t i = 1; i < disks_.size(); ++i)
                sd = std::min(sd, dist(x, disks_[i].first) - disks_[i].second);
            return sd;
        }
        case Kind::stadium:
            return segment_distance(x, seg_a_, seg_b_, nullptr) - radius_;
    }
    return 0.0;
}

double SupportShape::boundary_distance(Point2 x) const {
    const double sd = signed_distance(x);
    if (sd > 1e-12) throw std::invalid_argument("boundary_distance: point lies outside the support");
    return std::max(0.0, -sd);
}

double SupportShape::area() const {
    switch (kind_) {
        case Kind::disk:
            return M_PI * radius_ * radius_;
        case Kind::annulus:
            return M_PI * (r_out_ * r_out_ - r_in_ * r_in_);
        case Kind::multi_disk: {
            double a = 0.0;
            for (const auto& [c, r] : disks_) a += M_PI * r * r;
            return a;
        }
        case Kind::stadium:
            return M_PI * radius_ * radius_ + 2.0 * radius_ * dist(seg_a_, seg_b_);
    }
    return 0.0;
}

SteinerProfile SupportShape::steiner_profile() const {
    SteinerProfile f;
    f.valid_to = alpha_;
    switch (kind_) {
        case Kind::disk:
            f.c1 = 2.0 * M_PI * radius_;
            f.c2 = -M_PI;
            break;
        case Kind::annulus:
            // Inner and outer bands: the quadratic terms cancel.
            f.c1 = 2.0 * M_PI * (r_in_ + r_out_);
            f.c2 = 0.0;
            break;
        case Kind::multi_disk:
            for (const auto& [c, r] : disks_) {
                f.c1 += 2.0 * M_PI * r;
                f.c2 += -M_PI;
            }
            break;
        case Kind::stadium:
            f.c1 = 2.0 * dist(seg_a_, seg_b_) + 2.0 * M_PI * radius_;
            f.c2 = -M_PI;
            break;
    }
    return f;
}

Point2 SupportShape::project_to_boundary(Point2 x, UnitVec* outward_normal) const {
    switch (kind_) {
        case Kind::disk: {
            const Point2 v = x - center_;
            const UnitVec u = norm(v) > 0.0 ? UnitVec::of(v) : UnitVec(1, 0);
            if (outward_normal) *outward_normal = u;
            return center_ + radius_ * u.vec();
        }
        case Kind::annulus: {
            const double d = dist(x, center_);
            const UnitVec u = d > 0.0 ? UnitVec::of(x - center_) : UnitVec(1, 0);
            if (d - r_in_ <= r_out_ - d) {
                if (outward_normal) *outward_normal = u.negated();  // outward points into the hole
                return center_ + r_in_ * u.vec();
            }
            if (outward_normal) *outward_normal = u;
            return center_ + r_out_ * u.vec();
        }
        case Kind::multi_disk: {
            size_t best = 0;
            double bd = std::abs(dist(x, disks_[0].first) - disks_[0].second);
            for (size_t i = 1; i < disks_.size(); ++i) {
                const double di = std::abs(dist(x, disks_[i].first) - disks_[i].second);
                if (di < bd) {
                    bd = di;
                    best = i;
                }
            }
            const Point2 v = x - disks_[best].first;
            const UnitVec u = norm(v) > 0.0 ? UnitVec::of(v) : UnitVec(1, 0);
            if (outward_normal) *outward_normal = u;
            return disks_[best].first + disks_[best].second * u.vec();
        }
        case Kind::stadium: {
            Point2 q;
            segment_distance(x, seg_a_, seg_b_, &q);
            Point2 v = x - q;
            UnitVec u = norm(v) > 0.0 ? UnitVec::of(v) : UnitVec::of(perp(seg_b_ - seg_a_));
            if (outward_normal) *outward_normal = u;
            return q + radius_ * u.vec();
        }
    }
    throw std::logic_error("unreachable");
}

Point2 SupportShape::boundary_point(double t, UnitVec* outward_normal) const {
    t -= std::floor(t);
    auto circle_point = [&](Point2 c, double r, double u, bool outward) {
        const double a = 2.0 * M_PI * u;
        const Point2 dir{std::cos(a), std::sin(a)};
        if (outward_normal) *outward_normal = outward ? UnitVec(dir.x, dir.y) : UnitVec(-dir.x, -dir.y);
        return c + r * dir;
    };
    switch (kind_) {
        case Kind::disk:
            return circle_point(center_, radius_, t, true);
        case Kind::annulus: {
            const double per_out = 2.0 * M_PI * r_out_, per_in = 2.0 * M_PI * r_in_;
            const double split = per_out / (per_out + per_in);
            if (t < split) return circle_point(center_, r_out_, t / split, true);
            return circle_point(center_, r_in_, (t - split) / (1.0 - split), false);
        }
        case Kind::multi_disk: {
            double total = 0.0;
            for (const auto& [c, r] : disks_) total += 2.0 * M_PI * r;
            double acc = 0.0;
            for (const auto& [c, r] : disks_) {
                const double w = 2.0 * M_PI * r / total;
                if (t < acc + w) return circle_point(c, r, (t - acc) / w, true);
                acc += w;
            }
            return circle_point(disks_.back().first, disks_.back().second, 1.0 - 1e-12, true);
        }
        case Kind::stadium: {
            const double L = dist(seg_a_, seg_b_);
            const Point2 axis = (1.0 / L) * (seg_b_ - seg_a_);
            const Point2 n = perp(axis);
            const double straight = L, cap = M_PI * radius_;
            const double total = 2.0 * straight + 2.0 * cap;
            double s = t * total;
            if (s < straight) {  // top side a->b
                if (outward_normal) *outward_normal = UnitVec(n.x, n.y);
                return seg_a_ + (s / straight) * (seg_b_ - seg_a_) + radius_ * n;
            }
            s -= straight;
            if (s < cap) {  // cap around b
                const double a = std::atan2(n.y, n.x) - s / radius_ * 1.0;
                const Point2 dir{std::cos(a), std::sin(a)};
                if (outward_normal) *outward_normal = UnitVec(dir.x, dir.y);
                return seg_b_ + radius_ * dir;
            }
            s -= cap;
            if (s < straight) {  // bottom side b->a
                if (outward_normal) *outward_normal = UnitVec(-n.x, -n.y);
                return seg_b_ + (s / straight) * (seg_a_ - seg_b_) - radius_ * n;
            }
            s -= straight;
            {  // cap around a
                const double a = std::atan2(-n.y, -n.x) - s / radius_ * 1.0;
                const Point2 dir{std::cos(a), std::sin(a)};
                if (outward_normal) *outward_normal = UnitVec(dir.x, dir.y);
                return seg_a_ + radius_ * dir;
            }
        }
    }
    throw std::logic_error("unreachable");
}

Aabb SupportShape::bounding_box() const {
    switch (kind_) {
        case Kind::disk:
            return {{center_.x - radius_, center_.y - radius_}, {center_.x + radius_, center_.y + radius_}};
        case Kind::annulus:
            return {{center_.x - r_out_, center_.y - r_out_}, {center_.x + r_out_, center_.y + r_out_}};
        case Kind::multi_disk: {
            Aabb box{{disks_[0].first.x - disks_[0].second, disks_[0].first.y - disks_[0].second},
                     {disks_[0].first.x + disks_[0].second, disks_[0].first.y + disks_[0].second}};
            for (const auto& [c, r] : disks_) {
                box.lo.x = std::min(box.lo.x, c.x - r);
                box.lo.y = std::min(box.lo.y, c.y - r);
                box.hi.x = std::max(box.hi.x, c.x + r);
                box.hi.y = std::max(box.hi.y, c.y + r);
            }
            return box;
        }
        case Kind::stadium: {
            Aabb box{{std::min(seg_a_.x, seg_b_.x) - radius_, std::min(seg_a_.y, seg_b_.y) - radius_},
                     {std::max(seg_a_.x, seg_b_.x) + radius_, std::max(seg_a_.y, seg_b_.y) + radius_}};
            return box;
        }
    }
    throw std::logic_error("unreachable");
}

RollingReport SupportShape::verify_rolling(double alpha, int boundary_samples) const {
    RollingReport rep;
    rep.boundary_samples = boundary_samples;
    const int n_ang = 24, n_rad = 6;
    for (int k = 0; k < boundary_samples; ++k) {
        UnitVec n(1, 0);
        const Point2 s = boundary_point((k + 0.5) / boundary_samples, &n);
        const Point2 ci = s - alpha * n.vec();
        const Point2 co = s + alpha * n.vec();
        bool inner_bad = false, outer_bad = false;
        auto probe = [&](Point2 c, bool inner) {
            for (int a = 0; a < n_ang; ++a) {
                const double ang = 2.0 * M_PI * a / n_ang;
                const Point2 dir{std::cos(ang), std::sin(ang)};
                for (int ri = 1; ri <= n_rad; ++ri) {
                    const Point2 q = c + (alpha * ri / n_rad) * dir;
                    const double sd = signed_distance(q);
                    if (inner && sd > 0.0) {
                        rep.worst_depth = std::max(rep.worst_depth, sd);
                        inner_bad = true;
                    }
                    if (!inner && sd < 0.0) {
                        rep.worst_depth = std::max(rep.worst_depth, -sd);
                        outer_bad = true;
                    }
                }
            }
            const double sdc = signed_distance(c);
            if (inner && sdc > 0.0) {
                rep.worst_depth = std::max(rep.worst_depth, sdc);
                inner_bad = true;
            }
            if (!inner && sdc < 0.0) {
                rep.worst_depth = std::max(rep.worst_depth, -sdc);
                outer_bad = true;
            }
        };
        probe(ci, true);
        probe(co, false);
        if (inner_bad) ++rep.inner_violations;
        if (outer_bad) ++rep.outer_violations;
    }
    return rep;
}

SamplingLaw SamplingLaw::uniform(const SupportShape& s) {
    SamplingLaw law;
    law.shape = s;
    law.density = Density::uniform;
    law.delta = law.beta = 1.0 / s.area();
    return law;
}

SamplingLaw SamplingLaw::linear(const SupportShape& s, double a, Point2 g) {
    SamplingLaw law;
    law.shape = s;
    law.density = Density::linear;
    law.lin_a = a;
    law.lin_g = g;
    // Bound the raw weight over the bounding box corners (the weight is affine).
    const Aabb box = s.bounding_box();
    double wmin = 1e300, wmax = -1e300;
    for (const Point2 corner : {box.lo, Point2{box.hi.x, box.lo.y}, box.hi, Point2{box.lo.x, box.hi.y}}) {
        const double w = a + dot(g, corner);
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
    }
    if (wmax <= 0.0) throw std::invalid_argument("SamplingLaw::linear: density vanishes on the shape");
    // Normalizing constant is not needed for sampling; report density bounds
    // relative to a rough normalization (exact for uniform-like weights).
    const double approx_norm = 0.5 * (wmin + wmax) * s.area();
    law.delta = std::max(0.0, wmin) / std::max(approx_norm, 1e-300);
    law.beta = wmax / std::max(approx_norm, 1e-300);
    return law;
}

Point2 SamplingLaw::draw(Rng& rng) const {
    const Aabb box = shape.bounding_box();
    double wmax = 0.0;
    if (density == Density::linear) {
        for (const Point2 corner : {box.lo, Point2{box.hi.x, box.lo.y}, box.hi, Point2{box.lo.x, box.hi.y}})
            wmax = std::max(wmax, lin_a + dot(lin_g, corner));
    }
    for (long tries = 0;; ++tries) {
        if (tries > 100000) throw std::runtime_error("SamplingLaw::draw: acceptance rate below 1e-3");
        const Point2 p = rng.in_box(box);
        if (!shape.contains(p)) continue;
        if (density == Density::uniform) return p;
        const double w = lin_a + dot(lin_g, p);
        if (w > 0.0 && rng.uniform() * wmax <= w) return p;
    }
}

PointCloud sample(const SamplingLaw& law, long n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    // Guard against pathologically thin shapes before burning time.
    const double accept = law.shape.area() / law.shape.bounding_box().area();
    if (accept < 1e-3) throw std::runtime_error("sample: rejection acceptance rate below 1e-3");
    Rng rng(seed);
    PointCloud cloud;
    cloud.points.reserve(n);
    for (long i = 0; i < n; ++i) cloud.points.push_back(law.draw(rng));
    // Flag exact duplicates.
    std::unordered_set<std::string> keys;
    for (const Point2& p : cloud.points) {
        std::string k(sizeof(double) * 2, '\0');
        std::memcpy(k.data(), &p.x, sizeof(double));
        std::memcpy(k.data() + sizeof(double), &p.y, sizeof(double));
        if (!keys.insert(k).second) cloud.has_duplicates = true;
    }
    return cloud;
}

}  // namespace rhull
