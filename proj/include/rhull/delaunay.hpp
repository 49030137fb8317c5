#ifndef RHULL_DELAUNAY_HPP
#define RHULL_DELAUNAY_HPP

#include <array>
#include <vector>

#include "rhull/geom.hpp"
#include "rhull/support.hpp"

namespace rhull {

/**
 * Voronoi cell of a site: the circumcenters of its incident triangles in
 * counter-clockwise order.  Cells of convex-hull sites are unbounded; the two
 * outward ray directions bound the cell at infinity.
 */
struct VoronoiCell {
    bool unbounded = false;
    std::vector<Point2> vertices;
    Point2 ray_out_first{0, 0};  // outward direction attached to vertices.front()
    Point2 ray_out_last{0, 0};   // outward direction attached to vertices.back()
};

/**
 * Delaunay triangulation built by randomized incremental insertion with a
 * ghost vertex closing the convex hull.  Point location walks the current
 * triangulation; the incircle/orientation predicates are exact, so the
 * empty-circumdisk property holds up to representation of the inputs.
 *
 * Fully collinear inputs (and n < 3) produce a degenerate structure: no
 * triangles, only the chain of sites sorted along the common line.  Callers
 * are expected to fall back to brute-force geometry in that case.
 */
class Triangulation {
public:
    static constexpr int kGhost = -1;
    static constexpr int kTombstone = -2;

    struct Tri {
        std::array<int, 3> v;    // vertex ids, kGhost marks the ghost slot (always v[2])
        std::array<int, 3> nbr;  // nbr[i]: triangle across the edge opposite v[i]
        bool ghost = false;
    };

    explicit Triangulation(const PointCloud& cloud);

    // Sites (deduplicated); site_of_input maps original point indices to sites.
    const std::vector<Point2>& sites() const { return pts_; }
    int site_count() const { return static_cast<int>(pts_.size()); }
    const std::vector<int>& site_of_input() const { return site_of_input_; }
    bool has_duplicates() const { return has_duplicates_; }

    bool degenerate() const { return degenerate_; }
    /** For degenerate inputs: site indices ordered along the common line. */
    const std::vector<int>& chain() const { return chain_; }

    const std::vector<Tri>& triangles() const { return tris_; }
    int solid_count() const { return solid_count_; }
    int hull_vertex_count() const { return hull_count_; }

    bool on_hull(int site) const { return on_hull_[site]; }
    const Point2& circumcenter(int tri) const { return cc_[tri]; }
    double circumradius(int tri) const { return cr_[tri]; }

    /** Solid triangles incident to a site, in counter-clockwise order around it. */
    std::vector<int> incident_solid(int site) const;
    /** Adjacent sites (Delaunay neighbors), counter-clockwise. */
    std::vector<int> neighbors(int site) const;

    /** Visit incident solid triangles of a site without allocating (order unspecified). */
    template <class F>
    void visit_ring(int site, F&& f) const {
        const int start = vert_tri_[site];
        if (start < 0) return;
        auto local = [&](int t) {
            for (int j = 0; j < 3; ++j)
                if (tris_[t].v[j] == site) return j;
            return 0;
        };
        int t = start;
        while (true) {
            f(t, local(t));
            const int nxt = tris_[t].nbr[(local(t) + 1) % 3];
            if (nxt == start) return;  // closed fan
            if (tris_[nxt].ghost) break;
            t = nxt;
        }
        t = start;
        while (true) {
            const int prv = tris_[t].nbr[(local(t) + 2) % 3];
            if (prv == start || tris_[prv].ghost) return;
            f(prv, local(prv));
            t = prv;
        }
    }
    /** Delaunay edges as site pairs (i < j). */
    std::vector<std::pair<int, int>> edges() const;

    VoronoiCell voronoi_cell(int site) const;

    /** Nearest site to q by greedy descent on the Delaunay graph. */
    int nearest_site(Point2 q, int hint = 0) const;

private:
    void build(const std::vector<Point2>& pts);
    int locate_bad(Point2 p, int hint) const;
    bool in_circum(int t, Point2 p) const;
    void insert_point(int site, int& hint);
    void finalize();

    std::vector<Point2> pts_;
    std::vector<int> site_of_input_;
    bool has_duplicates_ = false;
    bool degenerate_ = false;
    std::vector<int> chain_;

    std::vector<Tri> tris_;
    std::vector<int> vert_tri_;  // site -> an incident triangle
    std::vector<Point2> cc_;
    std::vector<double> cr_;
    std::vector<char> on_hull_;
    int solid_count_ = 0;
    int hull_count_ = 0;

    // scratch for insertion
    std::vector<int> bad_;
    std::vector<char> mark_;
};

/** Circumcenter of a triangle; throws on exactly-degenerate input. */
Point2 circumcenter(Point2 a, Point2 b, Point2 c);

}  // namespace rhull

#endif
