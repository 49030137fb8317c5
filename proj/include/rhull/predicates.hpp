#ifndef RHULL_PREDICATES_HPP
#define RHULL_PREDICATES_HPP

#include "rhull/geom.hpp"

namespace rhull::pred {

/**
 * Orientation test.  Positive iff a, b, c make a counter-clockwise turn,
 * negative for clockwise, zero for exactly collinear.  Fast floating-point
 * path with a static error-bound filter; falls back to exact expansion
 * arithmetic when the filter cannot certify the sign.
 */
double orient2d(const Point2& a, const Point2& b, const Point2& c);

/**
 * Incircle test.  Positive iff d lies strictly inside the circle through
 * a, b, c (taken counter-clockwise), negative outside, zero if cocircular.
 * Same filter + exact-fallback structure as orient2d.
 */
double incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

}  // namespace rhull::pred

#endif
