#include "rhull/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

#include "rhull/mc.hpp"
#include "rhull/predicates.hpp"

namespace rhull {

Point2 circumcenter(Point2 a, Point2 b, Point2 c) {
    const Point2 u = b - a, v = c - a;
    const double d = 2.0 * cross(u, v);
    if (d == 0.0) throw std::domain_error("circumcenter: degenerate triangle");
    const double nu = norm2(u), nv = norm2(v);
    return a + Point2{(v.y * nu - u.y * nv) / d, (u.x * nv - v.x * nu) / d};
}

namespace {

struct PointKey {
    double x, y;
    bool operator==(const PointKey& o) const { return x == o.x && y == o.y; }
};
struct PointKeyHash {
    size_t operator()(const PointKey& k) const {
        size_t h = 0;
        std::uint64_t bx, by;
        std::memcpy(&bx, &k.x, 8);
        std::memcpy(&by, &k.y, 8);
        h = std::hash<std::uint64_t>()(bx * 0x9e3779b97f4a7c15ULL ^ by);
        return h;
    }
};

}  // namespace

Triangulation::Triangulation(const PointCloud& cloud) {
    if (cloud.points.empty()) throw std::invalid_argument("Triangulation: empty cloud");
    // Deduplicate exact coordinate matches; remember the mapping.
    std::unordered_map<PointKey, int, PointKeyHash> index;
    site_of_input_.resize(cloud.points.size());
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        const Point2 p = cloud.points[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("Triangulation: non-finite coordinate");
        auto [it, fresh] = index.try_emplace(PointKey{p.x, p.y}, static_cast<int>(pts_.size()));
        if (fresh)
            pts_.push_back(p);
        else
            has_duplicates_ = true;
        site_of_input_[i] = it->second;
    }
    build(pts_);
}

bool Triangulation::in_circum(int t, Point2 p) const {
    const Tri& tr = tris_[t];
    if (!tr.ghost)
        return pred::incircle(pts_[tr.v[0]], pts_[tr.v[1]], pts_[tr.v[2]], p) > 0.0;
    // Ghost (a, b, G) guards the hull edge (b -> a); its "circumdisk" is the
    // open outer half-plane plus the open edge itself.
    const Point2& a = pts_[tr.v[0]];
    const Point2& b = pts_[tr.v[1]];
    const double o = pred::orient2d(a, b, p);
    if (o > 0.0) return true;
    if (o < 0.0) return false;
    const double lo = std::min(dot(a, b - a), dot(b, b - a));
    const double hi = std::max(dot(a, b - a), dot(b, b - a));
    const double s = dot(p, b - a);
    return s > lo && s < hi;
}

int Triangulation::locate_bad(Point2 p, int hint) const {
    const int n_tris = static_cast<int>(tris_.size());
    int t = hint;
    if (t < 0 || t >= n_tris) t = 0;
    int steps = 0;
    const int cap = 64 + 4 * n_tris;
    while (steps++ < cap) {
        const Tri& tr = tris_[t];
        if (tr.ghost) {
            if (in_circum(t, p)) return t;
            t = tr.nbr[2];  // back into the solid mesh
            continue;
        }
        int go = -1;
        for (int i = 0; i < 3; ++i) {
            const Point2& u = pts_[tr.v[(i + 1) % 3]];
            const Point2& w = pts_[tr.v[(i + 2) % 3]];
            if (pred::orient2d(u, w, p) < 0.0) {
                const int nb = tr.nbr[i];
                if (tris_[nb].ghost && !in_circum(nb, p)) continue;  // grazing exterior edge
                go = nb;
                break;
            }
        }
        if (go < 0) return t;  // p inside or on t (t is then bad), or stuck
        t = go;
    }
    // Walk did not converge (can happen only in adversarial layouts); scan.
    for (int i = 0; i < n_tris; ++i)
        if (in_circum(i, p)) return i;
    throw std::runtime_error("Triangulation: point location failed");
}

void Triangulation::insert_point(int site, int& hint) {
    const Point2 p = pts_[site];
    const int seed = locate_bad(p, hint);

    // Grow the cavity of triangles whose circumdisk contains p.
    bad_.clear();
    bad_.push_back(seed);
    mark_[seed] = 1;
    std::vector<std::array<int, 4>> boundary;  // u, v, outside tri, outside slot
    for (size_t k = 0; k < bad_.size(); ++k) {
        const int t = bad_[k];
        for (int i = 0; i < 3; ++i) {
            const int nb = tris_[t].nbr[i];
            if (mark_[nb]) continue;
            if (in_circum(nb, p)) {
                mark_[nb] = 1;
                bad_.push_back(nb);
            } else {
                const int u = tris_[t].v[(i + 1) % 3];
                const int w = tris_[t].v[(i + 2) % 3];
                int slot = -1;
                for (int j = 0; j < 3; ++j)
                    if (tris_[nb].nbr[j] == t) slot = j;
                boundary.push_back({u, w, nb, slot});
            }
        }
    }

    // Retriangulate: connect p to every boundary edge.  Dead triangle slots
    // are recycled.
    std::vector<int> free_slots = bad_;
    std::unordered_map<int, std::pair<int, int>> open_edge;  // endpoint -> (tri, slot)
    int last = -1;
    for (const auto& [u, w, outside, oslot] : boundary) {
        Tri nt;
        nt.v = {u, w, site};
        // Rotate the ghost (if any) into slot 2; p never is the ghost.
        int rot = 0;
        if (u == kGhost) rot = 1;  // (G,w,p) -> (w,p,G)
        if (w == kGhost) rot = 2;  // (u,G,p) -> (p,u,G)
        if (rot == 1) nt.v = {w, site, kGhost};
        if (rot == 2) nt.v = {site, u, kGhost};
        nt.ghost = (rot != 0);
        nt.nbr = {-1, -1, -1};
        int ti;
        if (!free_slots.empty()) {
            ti = free_slots.back();
            free_slots.pop_back();
            tris_[ti] = nt;
        } else {
            ti = static_cast<int>(tris_.size());
            tris_.push_back(nt);
            mark_.push_back(0);
        }
        mark_[ti] = 0;
        // Slot of the original logical edge j after rotating by `rot`:
        auto slot_of = [rot](int j) { return (j - rot + 3) % 3; };
        // Outer adjacency across (u, w) = logical slot 2.
        tris_[ti].nbr[slot_of(2)] = outside;
        tris_[outside].nbr[oslot] = ti;
        // Inner adjacencies: edge (w, p) = logical slot 0 keyed by w,
        // edge (p, u) = logical slot 1 keyed by u.
        for (auto [key, jslot] : {std::pair<int, int>{w, 0}, std::pair<int, int>{u, 1}}) {
            auto it = open_edge.find(key);
            if (it == open_edge.end()) {
                open_edge.emplace(key, std::make_pair(ti, slot_of(jslot)));
            } else {
                tris_[ti].nbr[slot_of(jslot)] = it->second.first;
                tris_[it->second.first].nbr[it->second.second] = ti;
                open_edge.erase(it);
            }
        }
        if (u != kGhost) vert_tri_[u] = ti;
        if (w != kGhost) vert_tri_[w] = ti;
        last = ti;
    }
    vert_tri_[site] = last;
    hint = last;
    // Any unrecycled dead triangles become tombstones pointing nowhere;
    // mark them ghostless degenerate and unreachable.
    for (int t : free_slots) {
        tris_[t].v = {0, 0, 0};
        tris_[t].nbr = {t, t, t};
        tris_[t].ghost = false;
        tris_[t].v[0] = kTombstone;
    }
    for (int t : bad_) mark_[t] = 0;
}

void Triangulation::build(const std::vector<Point2>& pts) {
    const int n = static_cast<int>(pts.size());
    vert_tri_.assign(n, -1);
    if (n < 3) {
        degenerate_ = true;
    } else {
        // Initial triangle: first two sites plus the first non-collinear one.
        int c = -1;
        for (int i = 2; i < n; ++i)
            if (pred::orient2d(pts[0], pts[1], pts[i]) != 0.0) {
                c = i;
                break;
            }
        if (c < 0) degenerate_ = true;
    }
    if (degenerate_) {
        chain_.resize(n);
        for (int i = 0; i < n; ++i) chain_[i] = i;
        if (n >= 2) {
            Point2 dir{1, 0};
            for (int i = 1; i < n; ++i)
                if (dist2(pts[i], pts[0]) > 0) {
                    dir = pts[i] - pts[0];
                    break;
                }
            if (dir.x < 0 || (dir.x == 0 && dir.y < 0)) dir = -1.0 * dir;  // canonical orientation
            std::sort(chain_.begin(), chain_.end(),
                      [&](int a, int b) { return dot(pts[a], dir) < dot(pts[b], dir); });
        }
        on_hull_.assign(n, 1);
        return;
    }

    int c = 2;
    while (pred::orient2d(pts[0], pts[1], pts[c]) == 0.0) ++c;
    int a = 0, b = 1;
    if (pred::orient2d(pts[a], pts[b], pts[c]) < 0.0) std::swap(a, b);

    tris_.clear();
    // Solid (a,b,c) CCW plus one ghost per hull edge, each storing the edge
    // reversed so the exterior lies to the left of its first two vertices.
    tris_.push_back({{a, b, c}, {2, 3, 1}, false});   // 0: solid
    tris_.push_back({{b, a, kGhost}, {3, 2, 0}, true});  // 1: guards edge a->b
    tris_.push_back({{c, b, kGhost}, {1, 3, 0}, true});  // 2: guards edge b->c
    tris_.push_back({{a, c, kGhost}, {2, 1, 0}, true});  // 3: guards edge c->a
    mark_.assign(4, 0);
    vert_tri_[a] = vert_tri_[b] = vert_tri_[c] = 0;

    // Remaining sites in deterministic shuffled order.
    std::vector<int> order;
    order.reserve(n - 3);
    for (int i = 0; i < n; ++i)
        if (i != a && i != b && i != c) order.push_back(i);
    Rng rng(0x5eedULL);
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
        std::swap(order[i], order[rng.next_u64() % (i + 1)]);

    int hint = 0;
    for (int s : order) insert_point(s, hint);
    finalize();
}

void Triangulation::finalize() {
    // Compact out tombstones.
    std::vector<int> remap(tris_.size(), -1);
    std::vector<Tri> kept;
    kept.reserve(tris_.size());
    for (size_t i = 0; i < tris_.size(); ++i) {
        if (tris_[i].v[0] == kTombstone) continue;
        remap[i] = static_cast<int>(kept.size());
        kept.push_back(tris_[i]);
    }
    for (Tri& t : kept)
        for (int j = 0; j < 3; ++j) t.nbr[j] = remap[t.nbr[j]];
    tris_ = std::move(kept);

    const int n = static_cast<int>(pts_.size());
    on_hull_.assign(n, 0);
    solid_count_ = 0;
    cc_.assign(tris_.size(), Point2{0, 0});
    cr_.assign(tris_.size(), 0.0);
    vert_tri_.assign(n, -1);
    for (size_t i = 0; i < tris_.size(); ++i) {
        const Tri& t = tris_[i];
        if (t.ghost) {
            on_hull_[t.v[0]] = 1;
            on_hull_[t.v[1]] = 1;
            continue;
        }
        ++solid_count_;
        cc_[i] = rhull::circumcenter(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]]);
        cr_[i] = dist(cc_[i], pts_[t.v[0]]);
        for (int j = 0; j < 3; ++j) vert_tri_[t.v[j]] = static_cast<int>(i);
    }
    hull_count_ = 0;
    for (int i = 0; i < n; ++i) hull_count_ += on_hull_[i];
}

std::vector<int> Triangulation::incident_solid(int site) const {
    std::vector<int> ring;
    if (degenerate_) return ring;
    const int start = vert_tri_[site];
    if (start < 0) return ring;
    // Sweep counter-clockwise; if we fall off the hull, restart clockwise.
    auto local = [&](int t) {
        for (int j = 0; j < 3; ++j)
            if (tris_[t].v[j] == site) return j;
        return -1;
    };
    int t = start;
    while (true) {
        ring.push_back(t);
        const int k = local(t);
        const int nxt = tris_[t].nbr[(k + 1) % 3];
        if (nxt == start) return ring;  // closed fan
        if (tris_[nxt].ghost) break;
        t = nxt;
    }
    std::vector<int> back;
    t = start;
    while (true) {
        const int k = local(t);
        const int prv = tris_[t].nbr[(k + 2) % 3];
        if (prv == start || tris_[prv].ghost) break;
        back.push_back(prv);
        t = prv;
    }
    std::reverse(back.begin(), back.end());
    back.insert(back.end(), ring.begin(), ring.end());
    return back;
}

std::vector<int> Triangulation::neighbors(int site) const {
    std::vector<int> out;
    if (degenerate_) {
        for (size_t i = 0; i + 1 < chain_.size(); ++i) {
            if (chain_[i] == site) out.push_back(chain_[i + 1]);
            if (chain_[i + 1] == site) out.push_back(chain_[i]);
        }
        return out;
    }
    const std::vector<int> ring = incident_solid(site);
    if (ring.empty()) return out;
    auto local = [&](int t) {
        for (int j = 0; j < 3; ++j)
            if (tris_[t].v[j] == site) return j;
        return -1;
    };
    const int k0 = local(ring.front());
    out.push_back(tris_[ring.front()].v[(k0 + 1) % 3]);
    for (int t : ring) {
        const int k = local(t);
        out.push_back(tris_[t].v[(k + 2) % 3]);
    }
    if (!on_hull_[site] && out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

std::vector<std::pair<int, int>> Triangulation::edges() const {
    std::vector<std::pair<int, int>> out;
    if (degenerate_) {
        for (size_t i = 0; i + 1 < chain_.size(); ++i)
            out.emplace_back(std::min(chain_[i], chain_[i + 1]), std::max(chain_[i], chain_[i + 1]));
        return out;
    }
    for (const Tri& t : tris_) {
        if (t.ghost) continue;
        for (int j = 0; j < 3; ++j) {
            const int u = t.v[j], w = t.v[(j + 1) % 3];
            out.emplace_back(std::min(u, w), std::max(u, w));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VoronoiCell Triangulation::voronoi_cell(int site) const {
    VoronoiCell cell;
    if (degenerate_) throw std::logic_error("voronoi_cell: degenerate triangulation");
    const std::vector<int> ring = incident_solid(site);
    for (int t : ring) cell.vertices.push_back(cc_[t]);
    cell.unbounded = on_hull_[site] != 0;
    if (cell.unbounded && !ring.empty()) {
        const std::vector<int> nbs = neighbors(site);
        // First ring triangle leans on hull edge (site -> nbs.front());
        // last one on (nbs.back() -> site).  Outward = right of the interior.
        const Point2 e0 = pts_[nbs.front()] - pts_[site];
        const Point2 e1 = pts_[nbs.back()] - pts_[site];
        cell.ray_out_first = -1.0 * perp(e0);
        cell.ray_out_last = perp(e1);
    }
    return cell;
}

int Triangulation::nearest_site(Point2 q, int hint) const {
    const int n = static_cast<int>(pts_.size());
    if (n == 0) throw std::logic_error("nearest_site: no sites");
    int cur = (hint >= 0 && hint < n) ? hint : 0;
    if (degenerate_) {
        int best = 0;
        double bd = dist2(q, pts_[0]);
        for (int i = 1; i < n; ++i)
            if (dist2(q, pts_[i]) < bd) {
                bd = dist2(q, pts_[i]);
                best = i;
            }
        return best;
    }
    double dc = dist2(q, pts_[cur]);
    bool improved = true;
    while (improved) {
        improved = false;
        int best = cur;
        double bd = dc;
        visit_ring(cur, [&](int t, int k) {
            for (int j = 1; j < 3; ++j) {
                const int v = tris_[t].v[(k + j) % 3];
                const double d = dist2(q, pts_[v]);
                if (d < bd) {
                    bd = d;
                    best = v;
                }
            }
        });
        if (best != cur) {
            cur = best;
            dc = bd;
            improved = true;
        }
    }
    return cur;
}

}  // namespace rhull
