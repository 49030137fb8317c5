#ifndef RHULL_PROOF_ORACLES_HPP
#define RHULL_PROOF_ORACLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rhull/geom.hpp"
#include "rhull/mc.hpp"
#include "rhull/support.hpp"

namespace rhull {

/**
 * Canonical direction sets.  `six` splits the unit circle into six sectors of
 * central angle pi/3; `upper_four` covers the directions whose sectors stay
 * mostly above the horizontal axis, `lower_two` the remaining pair pointing
 * down.
 */
struct DirectionSet {
    enum class Kind { six, upper_four, lower_two };
    Kind kind;
    std::vector<UnitVec> vectors;

    static DirectionSet make(Kind k);
};

/** Constants of the coverage lower bounds. */
struct BoundConstants {
    double delta = 1.0;
    double L1 = 0.0;  // delta * pi / 24      (far regime, coefficient of r^2)
    double LG = 0.0;  // pi / 12              (sector overlap, sqrt(r) rho^{3/2})
    double LF = 0.0;  // sqrt(2) / 6          (chord-half overlap)
    double L2 = 0.0;  // delta * min(LG, LF)

    static BoundConstants for_delta(double delta);
};

/**
 * One member of an unavoidable family: a circular sector or a chord-region
 * half, stored in its canonical frame together with the rigid motion that
 * places it in the world.
 */
struct FamilyMember {
    enum class Kind { sector, chord_half };
    Kind kind = Kind::sector;
    Sector sec;         // canonical, apex at the origin
    ChordRegion chord;  // canonical
    RigidMotion to_world;

    double area() const;
    bool contains(Point2 world_p) const;
    /** Exact maximum of |p - y| over the member (finitely many candidates). */
    double farthest_distance(Point2 world_y) const;
    /** Uniform sample of the member, in world coordinates. */
    Point2 sample(Rng& rng) const;
};

/**
 * A finite family U with the covering property: every disk B(y, r) with
 * y in B(anchor, r) contains some member.  `lower_bound_coeff` is the
 * dimensionless coefficient of the member-measure lower bound (times delta
 * and the regime's power of r and boundary distance).
 */
struct UnavoidableFamily {
    enum class Regime { far, near };
    Point2 anchor{0, 0};
    double r = 0.0;
    Regime regime = Regime::far;
    std::vector<FamilyMember> members;
    double lower_bound_coeff = 0.0;
    double rho = 0.0;  // boundary distance of the anchor (near regime only)
};

/** Six sectors of radius r/2 and half-angle pi/6 around x. */
UnavoidableFamily family_far(Point2 x, double r);

/**
 * Near-boundary family for a support satisfying the rolling condition:
 * four full-radius sectors plus the two chord-region halves, mapped by the
 * motion sending the canonical inward axis to the inward normal at the
 * metric projection of x.  Requires boundary_distance(x) <= r/2 and
 * r <= shape.alpha().
 */
UnavoidableFamily family_near(Point2 x, double r, const SupportShape& shape);

/** Result row of a randomized check; margin >= 0 means the trial passed. */
struct CheckRow {
    std::string name;
    long trials = 0;
    long failures = 0;
    double worst_margin = 0.0;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    long total_failures() const {
        long f = 0;
        for (const CheckRow& r : rows) f += r.failures;
        return f;
    }
};

/**
 * Sample probe centers y uniformly in B(anchor, r) and verify that some
 * member fits inside B(y, r); the fit test uses the members' exact farthest
 * -point distances.  Report-only.
 */
CheckRow check_unavoidable(const UnavoidableFamily& family, long trials, std::uint64_t seed);

enum class GF { G, F };

/**
 * Classify a probe center into the sector-friendly (G) or chord (F) regime:
 * G iff the canonical image y' of y satisfies <y', e2> >= -|y'| / 2.
 * `inward_e2` is the world direction of the canonical inward axis.
 */
GF classify_GF(Point2 y, Point2 x, double r, UnitVec inward_e2);

/**
 * Measure lower bounds of the near-regime members against the rolling disk
 * B((alpha - rho) e2, alpha), over the grid r in r_values, rho = f * r/2 for
 * f in rho_fractions.  Sector overlaps are measured by seeded sampling; the
 * chord-half overlaps are exact.  `delta` scales the combined probability
 * bound row (use 1/area for the uniform law).
 */
CheckReport check_measure_bounds(double alpha, const std::vector<double>& r_values,
                                 const std::vector<double>& rho_fractions, double delta,
                                 long mc_samples, std::uint64_t seed);

/**
 * Exact construction for the outer touching disk on the disk support of
 * radius alpha: x_tilde = (|x| + r) x / |x| and the overlap of B(x_tilde, r)
 * with the support, decomposed into the chord and cap slabs.
 */
struct DiskLowerBound {
    Point2 x_tilde{0, 0};
    double overlap = 0.0;
    double chord_area = 0.0;
    double cap_area = 0.0;
    ContactGeometry contact;
};

DiskLowerBound disk_lower_bound_geometry(double alpha, double r, Point2 x);

/** Knobs for the verification suites (defaults match the full acceptance run). */
struct VerifyOptions {
    std::uint64_t seed = 20240501;
    long trials_unavoidable = 10000;  // probe balls per anchor
    int anchors = 100;
    long inclusion_samples = 1000;  // per side of inclusion checks
    long mc_samples = 10000;        // per measured cell in the bound checks
    int grid = 20;                  // (r, rho) grid resolution
    bool sabotage = false;          // drop one far-family sector (negative control)
};

CheckReport run_geometry_suite(const VerifyOptions& opt);
CheckReport run_unavoidable_suite(const VerifyOptions& opt);
CheckReport run_bounds_suite(const VerifyOptions& opt);
CheckReport run_all_suites(const VerifyOptions& opt);

}  // namespace rhull

#endif
