#ifndef RHULL_RASTER_HPP
#define RHULL_RASTER_HPP

#include <string>
#include <vector>

#include "rhull/geom.hpp"
#include "rhull/support.hpp"

namespace rhull {

/**
 * Binary mask on a square grid.  Cell (i, j) covers the center point
 * origin + ((i + 0.5) cell, (j + 0.5) cell); the origin is snapped to the
 * cell lattice anchored at (0,0) so masks of the same cell size live on a
 * common world lattice.
 */
struct RasterMask {
    Point2 origin{0, 0};
    double cell = 1.0;
    long width = 0;
    long height = 0;
    std::vector<std::uint8_t> bits;

    bool at(long i, long j) const {
        if (i < 0 || j < 0 || i >= width || j >= height) return false;
        return bits[j * width + i] != 0;
    }
    Point2 center(long i, long j) const {
        return {origin.x + (i + 0.5) * cell, origin.y + (j + 0.5) * cell};
    }
    /** Membership of a world point = value of its covering cell. */
    bool contains(Point2 p) const {
        const long i = static_cast<long>(std::floor((p.x - origin.x) / cell));
        const long j = static_cast<long>(std::floor((p.y - origin.y) / cell));
        return at(i, j);
    }
    long filled() const;
    double area() const { return static_cast<double>(filled()) * cell * cell; }
    std::vector<Point2> filled_centers() const;

    /** Binary PGM (P5), 255 = inside, 0 = outside; rows written top-down. */
    void write_pgm(const std::string& path) const;
};

/**
 * Discrete closing of the sample by the digital disk { (di,dj) : (di^2+dj^2) cell^2 <= r^2 }:
 * dilation then erosion with the same structuring element, both computed from
 * exact squared distance transforms.  The grid covers the cloud bounding box
 * inflated by 2r.  Requires cell_size <= r/10; refuses grids above 1e8 cells.
 */
RasterMask closing_grid(const PointCloud& cloud, double r, double cell_size);

}  // namespace rhull

#endif
