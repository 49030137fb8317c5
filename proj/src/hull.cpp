#include "rhull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rhull/predicates.hpp"

namespace rhull {

namespace {

double angle_of(Point2 v) { return std::atan2(v.y, v.x); }

// Largest angular gap >= pi means all directions fit in a closed half-plane,
// so the point can move away from every touching sample at once.
bool directions_escapable(std::vector<double>& angles) {
    if (angles.size() <= 1) return true;
    std::sort(angles.begin(), angles.end());
    double max_gap = 2.0 * M_PI - (angles.back() - angles.front());
    for (size_t i = 1; i < angles.size(); ++i)
        max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    return max_gap >= M_PI - 1e-9;
}

}  // namespace

PointGrid::PointGrid(const std::vector<Point2>& pts, double cell) {
    if (pts.empty()) return;
    pts_ = pts;
    cell_ = std::max(cell, 1e-300);
    Point2 lo = pts[0], hi = pts[0];
    for (const Point2& p : pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    origin_ = lo;
    nx_ = std::max(1L, static_cast<long>(std::floor((hi.x - lo.x) / cell_)) + 1);
    ny_ = std::max(1L, static_cast<long>(std::floor((hi.y - lo.y) / cell_)) + 1);
    // Cap the table size for degenerate aspect ratios.
    while (nx_ * ny_ > 4 * static_cast<long>(pts.size()) + 1024) {
        cell_ *= 2.0;
        nx_ = std::max(1L, static_cast<long>(std::floor((hi.x - lo.x) / cell_)) + 1);
        ny_ = std::max(1L, static_cast<long>(std::floor((hi.y - lo.y) / cell_)) + 1);
    }
    cells_.assign(nx_ * ny_, {});
    for (size_t i = 0; i < pts.size(); ++i) {
        const long ix = clamp_x(static_cast<long>(std::floor((pts[i].x - origin_.x) / cell_)));
        const long iy = clamp_y(static_cast<long>(std::floor((pts[i].y - origin_.y) / cell_)));
        cells_[iy * nx_ + ix].push_back(static_cast<int>(i));
    }
}

int PointGrid::any_near(Point2 q) const {
    if (cells_.empty()) return -1;
    const long ix = clamp_x(static_cast<long>(std::floor((q.x - origin_.x) / cell_)));
    const long iy = clamp_y(static_cast<long>(std::floor((q.y - origin_.y) / cell_)));
    int best = -1;
    double best_d2 = 1e300;
    long found_ring = -1;
    for (long ring = 0; ring < std::max(nx_, ny_); ++ring) {
        if (found_ring >= 0 && ring > found_ring + 1) break;
        bool any = false;
        for (long j = std::max(0L, iy - ring); j <= std::min(ny_ - 1, iy + ring); ++j)
            for (long i = std::max(0L, ix - ring); i <= std::min(nx_ - 1, ix + ring); ++i) {
                if (std::max(std::abs(i - ix), std::abs(j - iy)) != ring) continue;
                for (int idx : cells_[j * nx_ + i]) {
                    any = true;
                    const double d2 = dist2(pts_[idx], q);
                    if (d2 < best_d2) {
                        best_d2 = d2;
                        best = idx;
                    }
                }
            }
        if (any && found_ring < 0) found_ring = ring;
    }
    return best;
}

RHull::RHull(PointCloud cloud, double r, BoundarySemantics sem)
    : cloud_(std::move(cloud)), r_(r), sem_(sem) {
    if (!(r_ > 0.0)) throw std::domain_error("RHull: radius must be positive");
    if (cloud_.points.empty()) throw std::invalid_argument("RHull: empty cloud");
    tri_ = std::make_unique<Triangulation>(cloud_);
    cloud_.has_duplicates = tri_->has_duplicates();

    const auto& sites = tri_->sites();
    const int ns = tri_->site_count();
    const Aabb box = cloud_.bounding_box();
    const double spacing = std::sqrt(std::max(box.area(), 1e-18) / std::max(ns, 1));
    const double floor_cell = 1e-9 * std::max(1.0, std::max(box.width(), box.height()));
    site_grid_ = PointGrid(sites, std::max(spacing, floor_cell));

    // Extreme sites, once at the membership tie tolerance and once at
    // arithmetic precision (the latter feeds the boundary structure).
    extreme_.assign(ns, 0);
    extreme_strict_.assign(ns, 0);
    const double tie = kTieRel * r_;
    if (!tri_->degenerate()) {
        for (int s = 0; s < ns; ++s) {
            if (tri_->on_hull(s)) {
                extreme_[s] = extreme_strict_[s] = 1;
                continue;
            }
            double far2 = 0.0;
            tri_->visit_ring(s, [&](int t, int) { far2 = std::max(far2, dist2(tri_->circumcenter(t), sites[s])); });
            if (far2 >= (r_ - tie) * (r_ - tie)) extreme_[s] = 1;
            if (far2 >= (r_ - 1e-12 * r_) * (r_ - 1e-12 * r_)) extreme_strict_[s] = 1;
        }
    } else {
        PointCloud uc;
        uc.points = sites;
        for (int s : extreme_points_brute(uc, r_)) extreme_[s] = extreme_strict_[s] = 1;
    }

    build_touch_arcs();
    classify_edges();
    build_boundary();

    // Extreme indices in original numbering (every duplicate of an extreme site counts).
    for (size_t i = 0; i < cloud_.points.size(); ++i)
        if (extreme_[tri_->site_of_input()[i]]) extreme_indices_.push_back(static_cast<int>(i));
}

void RHull::build_touch_arcs() {
    const auto& sites = tri_->sites();
    std::vector<Point2> positions;
    for (int s = 0; s < tri_->site_count(); ++s) {
        if (!extreme_[s]) continue;
        TouchArcs ta;
        ta.site = s;
        // Coverage intervals: the directions in which a neighbor comes closer
        // than r(1 - tie) to the touching circle of this site.
        std::vector<std::pair<double, double>> covered;
        site_grid_.visit(sites[s], 2.0 * r_ * (1.0 + 2.0 * kTieRel), [&](int q) {
            if (q == s) return;
            const Point2 d = sites[q] - sites[s];
            const double L = norm(d);
            if (L == 0.0) return;
            const double carg = L / (2.0 * r_) + (r_ * kTieRel) / L;
            if (carg >= 1.0) return;
            const double psi = std::acos(carg);
            const double th = std::atan2(d.y, d.x);
            covered.emplace_back(th - psi, th + psi);
        });
        // Normalize to non-wrapping intervals inside [-pi, pi], merge, complement.
        std::vector<std::pair<double, double>> norm_cov;
        for (auto [a, b] : covered) {
            if (a < -M_PI) {
                norm_cov.emplace_back(a + 2.0 * M_PI, M_PI);
                norm_cov.emplace_back(-M_PI, b);
            } else if (b > M_PI) {
                norm_cov.emplace_back(a, M_PI);
                norm_cov.emplace_back(-M_PI, b - 2.0 * M_PI);
            } else {
                norm_cov.emplace_back(a, b);
            }
        }
        std::sort(norm_cov.begin(), norm_cov.end());
        std::vector<std::pair<double, double>> merged;
        for (const auto& iv : norm_cov) {
            if (!merged.empty() && iv.first <= merged.back().second)
                merged.back().second = std::max(merged.back().second, iv.second);
            else
                merged.push_back(iv);
        }
        if (merged.empty()) {
            ta.arcs.emplace_back(-M_PI, M_PI);
        } else {
            if (merged.front().first > -M_PI) ta.arcs.emplace_back(-M_PI, merged.front().first);
            for (size_t i = 0; i + 1 < merged.size(); ++i)
                ta.arcs.emplace_back(merged[i].second, merged[i + 1].first);
            if (merged.back().second < M_PI) ta.arcs.emplace_back(merged.back().second, M_PI);
        }
        if (ta.arcs.empty()) continue;  // fully covered circle; no touching directions
        // Bounding cone over the uncovered arcs for cheap rejection.
        double total = 0.0;
        for (const auto& [lo, hi] : ta.arcs) total += hi - lo;
        if (total >= M_PI || ta.arcs.size() > 4) {
            ta.cone_cos = -2.0;  // prune disabled
        } else {
            const double ref = 0.5 * (ta.arcs.front().first + ta.arcs.front().second);
            double lo_rel = 0.0, hi_rel = 0.0;
            for (const auto& [lo, hi] : ta.arcs) {
                double a = lo - ref, b = hi - ref;
                while (a > M_PI) a -= 2.0 * M_PI, b -= 2.0 * M_PI;
                while (a < -M_PI) a += 2.0 * M_PI, b += 2.0 * M_PI;
                lo_rel = std::min(lo_rel, a);
                hi_rel = std::max(hi_rel, b);
            }
            const double mid = ref + 0.5 * (lo_rel + hi_rel);
            const double w = 0.5 * (hi_rel - lo_rel) + 1e-9;
            if (w >= M_PI * 0.98) {
                ta.cone_cos = -2.0;
            } else {
                ta.cone_dir = {std::cos(mid), std::sin(mid)};
                ta.cone_cos = std::cos(w);
            }
        }
        positions.push_back(sites[s]);
        touch_.push_back(std::move(ta));
    }
    touch_grid_ = PointGrid(positions, std::max(r_ / 2.0, 1e-12));
}

double RHull::nearest_sample_dist(Point2 q, int hint_site) const {
    const auto& sites = tri_->sites();
    if (!tri_->degenerate()) {
        const int s = tri_->nearest_site(q, hint_site >= 0 ? hint_site : 0);
        return dist(q, sites[s]);
    }
    double best = dist2(q, sites[0]);
    for (const Point2& p : sites) best = std::min(best, dist2(q, p));
    return std::sqrt(best);
}

bool RHull::corner_escapable(Point2 c, double touch_radius) const {
    const auto& sites = tri_->sites();
    std::vector<double> angles;
    const double reach = touch_radius * (1.0 + 2.0 * kTieRel) + 1e-12 * r_;
    site_grid_.visit(c, reach, [&](int s) {
        if (dist(c, sites[s]) <= reach) angles.push_back(angle_of(sites[s] - c));
    });
    return directions_escapable(angles);
}

void RHull::classify_edges() {
    const auto& sites = tri_->sites();
    const int ns = tri_->site_count();
    const double tie = kTieRel * r_;
    // Boundary construction works at arithmetic precision; the lenient
    // membership tie band stays separate so huge radii do not erase fine
    // structure from the arc classification.
    const double class_tol = 1e-12 * r_;

    std::vector<std::pair<int, int>> edge_list;
    if (!tri_->degenerate()) {
        edge_list = tri_->edges();
    } else {
        for (int i = 0; i < ns; ++i)
            for (int j = i + 1; j < ns; ++j)
                if (dist(sites[i], sites[j]) <= 2.0 * r_ * (1.0 + kTieRel)) edge_list.emplace_back(i, j);
    }

    // Valid empty centers: every one is a candidate boundary-arc carrier and a
    // trimming disk for its neighbors.
    struct EmptyCenter {
        Point2 c;
        int u, v;
    };
    std::vector<EmptyCenter> centers;
    for (const auto& [u, v] : edge_list) {
        const Point2 P = sites[u], Q = sites[v];
        const double L = dist(P, Q);
        if (L > 2.0 * r_ * (1.0 + kTieRel) || L == 0.0) continue;
        const double h = std::sqrt(std::max(0.0, r_ * r_ - 0.25 * L * L));
        const Point2 m = 0.5 * (P + Q);
        const Point2 n = (1.0 / L) * perp(Q - P);
        for (const Point2 c : {m + h * n, m - h * n}) {
            const double nd = nearest_sample_dist(c, u);
            if (nd >= r_ - tie) corners_.push_back({c, corner_escapable(c, std::max(nd, r_))});
            if (nd >= r_ - class_tol && h > 0.0) centers.push_back({c, u, v});
            if (h == 0.0) break;  // coincident centers (touching pair)
        }
    }

    std::vector<Point2> cpts;
    cpts.reserve(corners_.size());
    for (const Corner& c : corners_) cpts.push_back(c.c);
    corner_grid_ = PointGrid(cpts, std::max(r_ / 2.0, 1e-9));

    // Base arc of each empty circle: the minor arc between its two pinning
    // samples, i.e. the part of the circle facing away from the chord.  Other
    // empty disks may cover pieces of it; the uncovered remainder is hull
    // boundary.  Coverage cuts are tagged with the cutting center so matching
    // ends can be joined exactly during linking.
    std::vector<Point2> cpos;
    cpos.reserve(centers.size());
    for (const EmptyCenter& ec : centers) cpos.push_back(ec.c);
    const PointGrid center_grid(cpos, std::max(r_ / 2.0, 1e-9));

    // End identifier for exact matching during curve linking: either a pinning
    // sample or the crossing of two witness circles (keyed by the unordered
    // center pair plus the side of their center line).
    auto end_key = [&](int own, int other, double ang, int sample) -> std::uint64_t {
        if (other < 0) return (1ULL << 62) | static_cast<std::uint64_t>(sample);
        const int a = std::min(own, other), b = std::max(own, other);
        const Point2 q = cpos[own] + r_ * Point2{std::cos(ang), std::sin(ang)};
        const double s = cross(cpos[b] - cpos[a], q - cpos[a]);
        return (2ULL << 62) | (static_cast<std::uint64_t>(a) << 32) |
               (static_cast<std::uint64_t>(b) << 2) | (s > 0 ? 1ULL : 0ULL);
    };

    const double min_arc = 1e-9;  // angular sliver threshold (well above fp noise, below real features)
    for (size_t k = 0; k < centers.size(); ++k) {
        const EmptyCenter& ec = centers[k];
        const Point2 P = sites[ec.u], Q = sites[ec.v];
        const double L = dist(P, Q);
        const double sweep = 2.0 * std::asin(std::clamp(L / (2.0 * r_), 0.0, 1.0));
        const Point2 mid_v = 0.5 * (P + Q) - ec.c;
        if (norm2(mid_v) == 0.0) continue;  // antipodal pins; no stable facing direction
        const double mid = angle_of(mid_v);
        const double half = 0.5 * sweep;
        // Which pin sits at the counter-clockwise end of the base arc.
        double relP = angle_of(P - ec.c) - mid;
        while (relP > M_PI) relP -= 2.0 * M_PI;
        while (relP < -M_PI) relP += 2.0 * M_PI;
        const int hi_pin = relP > 0 ? ec.u : ec.v;
        const int lo_pin = relP > 0 ? ec.v : ec.u;

        // Coverage by other empty disks, in the frame centered at `mid`.
        struct Cut {
            double lo, hi;
            int lo_by, hi_by;
        };
        std::vector<Cut> cuts;
        center_grid.visit(ec.c, 2.0 * r_, [&](int j) {
            if (j == static_cast<int>(k)) return;
            const Point2 d = centers[j].c - ec.c;
            const double Lc = norm(d);
            if (Lc == 0.0 || Lc >= 2.0 * r_ * (1.0 - 1e-12)) return;
            const double psi = std::acos(std::clamp(Lc / (2.0 * r_), -1.0, 1.0));
            double cc = angle_of(d) - mid;
            while (cc > M_PI) cc -= 2.0 * M_PI;
            while (cc < -M_PI) cc += 2.0 * M_PI;
            for (double shift : {-2.0 * M_PI, 0.0, 2.0 * M_PI}) {
                const double lo = cc + shift - psi, hi = cc + shift + psi;
                if (hi <= -half || lo >= half) continue;
                cuts.push_back({lo, hi, j, j});
            }
        });
        std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.lo < b.lo; });
        std::vector<Cut> merged;
        for (const Cut& c : cuts) {
            if (!merged.empty() && c.lo <= merged.back().hi) {
                if (c.hi > merged.back().hi) {
                    merged.back().hi = c.hi;
                    merged.back().hi_by = c.hi_by;
                }
            } else {
                merged.push_back(c);
            }
        }

        // Uncovered gaps of the base interval [-half, half].
        struct End {
            double ang;
            int other;  // -1 = pinning sample end
        };
        std::vector<std::pair<End, End>> gaps;
        double pos = -half;
        int pos_by = -1;
        for (const Cut& c : merged) {
            if (c.lo >= half) break;
            if (c.lo > pos) gaps.push_back({{pos, pos_by}, {c.lo, c.lo_by}});
            if (c.hi > pos) {
                pos = c.hi;
                pos_by = c.hi_by;
            }
            if (pos >= half) break;
        }
        if (pos < half) gaps.push_back({{pos, pos_by}, {half, -1}});

        for (const auto& [glo, ghi] : gaps) {
            if (ghi.ang - glo.ang <= min_arc) continue;
            BoundaryArc arc;
            arc.center = ec.c;
            arc.r = r_;
            arc.pin_u = ec.u;
            arc.pin_v = ec.v;
            // Clockwise traversal: start at the counter-clockwise end.
            arc.a0 = mid + ghi.ang;
            arc.a1 = mid + glo.ang;
            arc.sweep = ghi.ang - glo.ang;
            arc.from = ghi.other < 0 ? hi_pin : -1;
            arc.to = glo.other < 0 ? lo_pin : -1;
            link_from_.push_back(end_key(static_cast<int>(k), ghi.other, arc.a0, arc.from));
            link_to_.push_back(end_key(static_cast<int>(k), glo.other, arc.a1, arc.to));
            boundary_.arcs.push_back(arc);
        }
    }
}

void RHull::build_boundary() {
    link_curves();
    // Isolated samples: extreme but not attached to any boundary arc.
    std::vector<char> attached(tri_->site_count(), 0);
    for (const BoundaryArc& a : boundary_.arcs) {
        if (a.from >= 0) attached[a.from] = 1;
        if (a.to >= 0) attached[a.to] = 1;
    }
    const auto& map = tri_->site_of_input();
    std::vector<char> seen(tri_->site_count(), 0);
    for (size_t i = 0; i < cloud_.points.size(); ++i) {
        const int s = map[i];
        if (extreme_strict_[s] && !attached[s] && !seen[s]) {
            boundary_.isolated.push_back(static_cast<int>(i));
            seen[s] = 1;
        }
    }
    // Signed area over the closed curves.
    area_ = 0.0;
    for (const auto& curve : boundary_.curves)
        for (int ai : curve) {
            const BoundaryArc& a = boundary_.arcs[ai];
            area_ += 0.5 * cross(a.center, a.end_point() - a.start_point());
            area_ += 0.5 * a.r * a.r * (-a.sweep);
        }
}

void RHull::link_curves() {
    const size_t m = boundary_.arcs.size();
    if (m == 0) return;
    std::multimap<std::uint64_t, int> outgoing;  // end identity -> arc starting there
    for (size_t i = 0; i < m; ++i) outgoing.emplace(link_from_[i], static_cast<int>(i));
    std::vector<char> used(m, 0);

    auto cw_tangent_at = [](const BoundaryArc& a, bool at_start) {
        const Point2 p = at_start ? a.start_point() : a.end_point();
        const Point2 radial = (1.0 / a.r) * (p - a.center);
        return Point2{radial.y, -radial.x};
    };

    // Dropped angular slivers leave gaps up to this length; the boundary
    // pinches through them, so linking may glue ends this close spatially.
    const double eps_link = 8e-9 * r_;

    for (size_t s = 0; s < m; ++s) {
        if (used[s]) continue;
        std::vector<int> curve;
        int cur = static_cast<int>(s);
        while (true) {
            used[cur] = 1;
            curve.push_back(cur);
            const BoundaryArc& a = boundary_.arcs[cur];
            const Point2 tin = cw_tangent_at(a, false);
            int next = -1;
            double best_turn = -10.0;
            auto consider = [&](int cand) {
                if (used[cand] && cand != static_cast<int>(s)) return;
                const Point2 tout = cw_tangent_at(boundary_.arcs[cand], true);
                const double turn = std::atan2(cross(tin, tout), dot(tin, tout));
                if (turn > best_turn) {
                    best_turn = turn;
                    next = cand;
                }
            };
            auto [lo, hi] = outgoing.equal_range(link_to_[cur]);
            for (auto it = lo; it != hi; ++it) consider(it->second);
            if (next < 0) {
                const Point2 pe = a.end_point();
                for (size_t j = 0; j < m; ++j)
                    if (dist(boundary_.arcs[j].start_point(), pe) <= eps_link)
                        consider(static_cast<int>(j));
            }
            if (next < 0) {
                const Point2 pe = a.end_point();
                throw std::runtime_error(
                    "RHull: boundary arcs do not close (dangling end near (" +
                    std::to_string(pe.x) + ", " + std::to_string(pe.y) + "))");
            }
            if (next == static_cast<int>(s)) break;
            cur = next;
        }
        boundary_.curves.push_back(std::move(curve));
    }
}

bool RHull::contains(Point2 x, BoundarySemantics sem) const {
    const double tie = kTieRel * r_;
    const auto& sites = tri_->sites();
    const int seed = site_grid_.any_near(x);
    const double s = nearest_sample_dist(x, seed);
    if (sem == BoundarySemantics::closed) {
        if (s > r_ + tie) return false;
    } else {
        if (s >= r_ - tie) return false;
    }

    bool excluded = false;
    corner_grid_.visit(x, r_, [&](int ci) {
        if (excluded) return;
        const Corner& co = corners_[ci];
        if (sem == BoundarySemantics::closed && !co.escapable) return;
        if (dist(x, co.c) < r_ - tie) excluded = true;
    });
    if (excluded) return false;

    touch_grid_.visit(x, 2.0 * r_ + tie, [&](int k) {
        if (excluded) return;
        const TouchArcs& ta = touch_[k];
        const Point2 p = sites[ta.site];
        const Point2 v = x - p;
        const double dxp = norm(v);
        if (dxp == 0.0 || dxp > 2.0 * r_ + tie) return;
        if (std::abs(dxp - r_) >= r_ - tie) return;
        if (ta.cone_cos > -1.5 && dot(v, ta.cone_dir) < ta.cone_cos * dxp) return;
        const double phi = std::atan2(v.y, v.x);
        double end_gap = -1.0;
        for (const auto& [lo, hi] : ta.arcs)
            if (phi >= lo && phi <= hi) {
                // Ends at exactly +-pi are seam artifacts of the split, not
                // coverage endpoints.
                const double glo = lo == -M_PI ? 10.0 : phi - lo;
                const double ghi = hi == M_PI ? 10.0 : hi - phi;
                end_gap = std::max(end_gap, std::min(glo, ghi));
            }
        if (end_gap < 0.0) return;  // covered direction: no empty disk touches here
        if (sem == BoundarySemantics::closed && end_gap <= 64.0 * kTieRel) {
            // Touching direction grazes a coverage endpoint; fall back to the
            // exact contact test to decide whether the empty set is reachable.
            const Point2 foot = p + (r_ / dxp) * v;
            if (!corner_escapable(foot, r_)) return;
        }
        excluded = true;
    });
    return !excluded;
}

bool RHull::is_extreme(int sample_index) const {
    return extreme_[tri_->site_of_input().at(sample_index)] != 0;
}

std::optional<Point2> RHull::extreme_witness(int sample_index) const {
    const int site = tri_->site_of_input().at(sample_index);
    if (!extreme_[site]) return std::nullopt;
    const auto& sites = tri_->sites();
    const Point2 p = sites[site];
    const double tie = kTieRel * r_;

    auto certify = [&](Point2 y) -> std::optional<Point2> {
        const double d = dist(y, p);
        if (d < r_ - tie) return std::nullopt;
        const Point2 w = p + (r_ / d) * (y - p);
        if (nearest_sample_dist(w, site) >= r_ - tie) return w;
        return std::nullopt;
    };

    if (!tri_->degenerate()) {
        // Farthest Voronoi vertex of the cell first.
        Point2 far{0, 0};
        double far2 = -1.0;
        tri_->visit_ring(site, [&](int t, int) {
            const double d2v = dist2(tri_->circumcenter(t), p);
            if (d2v > far2) {
                far2 = d2v;
                far = tri_->circumcenter(t);
            }
        });
        if (far2 >= (r_ - tie) * (r_ - tie))
            if (auto w = certify(far)) return w;
        if (tri_->on_hull(site)) {
            const std::vector<int> nbs = tri_->neighbors(site);
            if (!nbs.empty()) {
                const Point2 d0 = -1.0 * perp(sites[nbs.front()] - p);
                const Point2 d1 = perp(sites[nbs.back()] - p);
                for (const Point2 dir : {d0, d1, d0 + d1}) {
                    const double nd = norm(dir);
                    if (nd == 0.0) continue;
                    for (double scale : {1.0, 4.0, 16.0, 256.0})
                        if (auto w = certify(p + (scale * r_ / nd) * dir)) return w;
                }
            }
        }
    } else {
        if (tri_->site_count() == 1) return p + Point2{r_, 0};
        // Perpendicular to the chain direction always works for collinear clouds.
        const auto& chain = tri_->chain();
        const Point2 dir = sites[chain.back()] - sites[chain.front()];
        const Point2 n = perp(dir);
        const double nn = norm(n);
        if (nn > 0.0)
            if (auto w = certify(p + (r_ / nn) * n)) return w;
        for (int other = 0; other < tri_->site_count(); ++other) {
            if (other == site) continue;
            if (auto w = certify(p + (p - sites[other]))) return w;
        }
    }
    return std::nullopt;
}

bool membership(const PointCloud& cloud, double r, Point2 x, BoundarySemantics sem) {
    return RHull(cloud, r, sem).contains(x, sem);
}

std::vector<int> extreme_points(const PointCloud& cloud, double r) {
    return RHull(cloud, r).extreme_indices();
}

HullBoundary boundary_arcs(const PointCloud& cloud, double r) { return RHull(cloud, r).boundary(); }

double hull_area(const RHull& hull) { return hull.area_arcs(); }

namespace {

// Shared candidate logic for the brute engine: distance from x to the set of
// empty-disk centers, attained at x, a radial foot, or a two-sample center.
// Squared distances throughout; this runs O(n^2) per query.
bool brute_excluded(const std::vector<Point2>& pts, double r, Point2 x, BoundarySemantics sem) {
    const double tie = kTieRel * r;
    double s2 = dist2(x, pts[0]);
    for (const Point2& p : pts) s2 = std::min(s2, dist2(x, p));
    const double s = std::sqrt(s2);
    if (sem == BoundarySemantics::closed ? (s > r + tie) : (s >= r - tie)) return true;

    const double valid2 = (r - tie) * (r - tie);
    // Early exit once the candidate is disqualified; for interior probes the
    // first few samples already settle it.
    auto min_dist2 = [&](Point2 q) {
        double b = dist2(q, pts[0]);
        for (const Point2& p : pts) {
            b = std::min(b, dist2(q, p));
            if (b < valid2) return b;
        }
        return b;
    };
    auto escapable = [&](Point2 c, double reach) {
        const double reach2 = reach * reach;
        std::vector<double> angles;
        for (const Point2& p : pts)
            if (dist2(c, p) <= reach2) angles.push_back(angle_of(p - c));
        return directions_escapable(angles);
    };

    // Radial feet.
    const double near2 = (2.0 * r + tie) * (2.0 * r + tie);
    for (const Point2& p : pts) {
        const double dxp2 = dist2(x, p);
        if (dxp2 == 0.0 || dxp2 > near2) continue;
        const double dxp = std::sqrt(dxp2);
        if (std::abs(dxp - r) >= r - tie) continue;
        const Point2 foot = p + (r / dxp) * (x - p);
        const double nd2 = min_dist2(foot);
        if (nd2 < valid2) continue;
        if (sem == BoundarySemantics::closed &&
            !escapable(foot, std::max(std::sqrt(nd2), r) * (1.0 + 2.0 * kTieRel) + 1e-12 * r))
            continue;
        return true;
    }
    // Two-sample centers.
    const size_t n = pts.size();
    const double reach2 = (3.0 * r + tie) * (3.0 * r + tie);
    const double pair2 = 4.0 * r * r * (1.0 + kTieRel) * (1.0 + kTieRel);
    for (size_t i = 0; i < n; ++i) {
        if (dist2(x, pts[i]) > reach2) continue;
        for (size_t j = i + 1; j < n; ++j) {
            if (dist2(x, pts[j]) > reach2) continue;
            const double L2 = dist2(pts[i], pts[j]);
            if (L2 > pair2 || L2 == 0.0) continue;
            const double L = std::sqrt(L2);
            const double h = std::sqrt(std::max(0.0, r * r - 0.25 * L2));
            const Point2 m = 0.5 * (pts[i] + pts[j]);
            const Point2 nrm = (1.0 / L) * perp(pts[j] - pts[i]);
            for (const Point2 c : {m + h * nrm, m - h * nrm}) {
                if (dist2(x, c) >= valid2) continue;
                const double nd2 = min_dist2(c);
                if (nd2 < valid2) continue;
                if (sem == BoundarySemantics::closed &&
                    !escapable(c, std::max(std::sqrt(nd2), r) * (1.0 + 2.0 * kTieRel) + 1e-12 * r))
                    continue;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

bool membership_brute(const PointCloud& cloud, double r, Point2 x, BoundarySemantics sem) {
    if (!(r > 0.0)) throw std::domain_error("membership_brute: radius must be positive");
    if (cloud.points.empty()) throw std::invalid_argument("membership_brute: empty cloud");
    return !brute_excluded(cloud.points, r, x, sem);
}

std::vector<int> extreme_points_brute(const PointCloud& cloud, double r) {
    if (!(r > 0.0)) throw std::domain_error("extreme_points_brute: radius must be positive");
    const auto& pts = cloud.points;
    const double tie = kTieRel * r;
    std::vector<int> out;
    auto min_dist_excl = [&](Point2 q) {
        double b = 1e300;
        for (const Point2& p : pts) b = std::min(b, dist2(q, p));
        return std::sqrt(b);
    };
    for (size_t i = 0; i < pts.size(); ++i) {
        const Point2 p = pts[i];
        bool extreme = false;
        std::vector<Point2> cand;
        for (size_t j = 0; j < pts.size() && !extreme; ++j) {
            if (j == i || dist2(pts[j], p) == 0.0) continue;
            const Point2 away = p - pts[j];
            cand.push_back(p + (r / norm(away)) * away);
            // Bisector of (i, j) meets the circle around i where both are at
            // distance r from the two samples.
            const double L = dist(p, pts[j]);
            if (L <= 2.0 * r * (1.0 + kTieRel)) {
                const double h = std::sqrt(std::max(0.0, r * r - 0.25 * L * L));
                const Point2 m = 0.5 * (p + pts[j]);
                const Point2 nrm = (1.0 / L) * perp(pts[j] - p);
                cand.push_back(m + h * nrm);
                cand.push_back(m - h * nrm);
            }
        }
        if (pts.size() == 1) cand.push_back(p + Point2{r, 0});
        for (const Point2& y : cand) {
            if (std::abs(dist(y, p) - r) > 2.0 * tie + 1e-12) continue;
            if (min_dist_excl(y) >= r - tie) {
                extreme = true;
                break;
            }
        }
        if (extreme) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> convex_hull_indices(const std::vector<Point2>& pts) {
    std::vector<int> idx(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int a, int b) { return pts[a].x == pts[b].x && pts[a].y == pts[b].y; }),
              idx.end());
    if (idx.size() < 3) return idx;
    std::vector<int> hull(2 * idx.size());
    int k = 0;
    for (size_t i = 0; i < idx.size(); ++i) {  // lower chain
        while (k >= 2 && pred::orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0.0) --k;
        hull[k++] = idx[i];
    }
    const int lower_end = k + 1;
    for (int i = static_cast<int>(idx.size()) - 2; i >= 0; --i) {  // upper chain
        while (k >= lower_end &&
               pred::orient2d(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0.0)
            --k;
        hull[k++] = idx[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool convex_polygon_contains(const std::vector<Point2>& poly, Point2 x, double tol) {
    if (poly.empty()) return false;
    if (poly.size() == 1) return dist(poly[0], x) <= tol;
    if (poly.size() == 2) {
        const Point2 d = poly[1] - poly[0];
        const double L2 = norm2(d);
        const double t = L2 > 0 ? std::clamp(dot(x - poly[0], d) / L2, 0.0, 1.0) : 0.0;
        return dist(poly[0] + t * d, x) <= tol;
    }
    const double scale = std::max(1.0, norm(poly[0]));
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point2 a = poly[i], b = poly[(i + 1) % poly.size()];
        if (cross(b - a, x - a) < -tol * std::max(1.0, dist(a, b)) * scale) return false;
    }
    return true;
}

}  // namespace rhull
