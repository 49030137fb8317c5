#ifndef RHULL_SVG_HPP
#define RHULL_SVG_HPP

#include <string>

#include "rhull/hull.hpp"

namespace rhull {

/**
 * Write the hull figure as a standalone SVG: boundary arcs as path arc
 * commands of radius r, sample points as small circles, extreme samples and
 * isolated samples highlighted.
 */
void write_hull_svg(const RHull& hull, const std::string& path);

}  // namespace rhull

#endif
