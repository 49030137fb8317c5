#ifndef RHULL_CLOUD_IO_HPP
#define RHULL_CLOUD_IO_HPP

#include <string>

#include "rhull/support.hpp"

namespace rhull {

/** Thrown on unreadable or malformed input files; carries the line number. */
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Load a point cloud from a plain text file: one "x y" pair per line,
 * blank lines and `#` comments ignored.
 */
PointCloud load_points(const std::string& path);

void save_points(const PointCloud& cloud, const std::string& path);

}  // namespace rhull

#endif
