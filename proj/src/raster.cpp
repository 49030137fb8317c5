#include "rhull/raster.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace rhull {

namespace {

// Felzenszwalb-Huttenlocher lower envelope of parabolas, one pass.  Sources
// carry 0, non-sources a finite sentinel larger than any reachable squared
// distance, which keeps the intersection arithmetic finite and exact enough
// (squared cell distances are integers well below 2^53).
void edt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
            std::vector<double>& z) {
    const int n = static_cast<int>(f.size());
    d.assign(n, 0.0);
    v.assign(n, 0);
    z.assign(n + 1, 0.0);
    int k = 0;
    v[0] = 0;
    z[0] = -1e300;
    z[1] = 1e300;
    for (int q = 1; q < n; ++q) {
        double s = ((f[q] + static_cast<double>(q) * q) -
                    (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                   (2.0 * q - 2.0 * v[k]);
        while (s <= z[k]) {
            --k;
            s = ((f[q] + static_cast<double>(q) * q) -
                 (f[v[k]] + static_cast<double>(v[k]) * v[k])) /
                (2.0 * q - 2.0 * v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = 1e300;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        const double dq = q - v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

// Exact squared Euclidean distance transform (in cell units) to the marked set.
std::vector<double> edt2(const std::vector<std::uint8_t>& marked, long w, long h) {
    const double big = 4.0 * static_cast<double>(w * w + h * h) + 16.0;
    std::vector<double> g(w * h, big);
    std::vector<double> f, d, z;
    std::vector<int> v;
    f.resize(h);
    for (long i = 0; i < w; ++i) {
        for (long j = 0; j < h; ++j) f[j] = marked[j * w + i] ? 0.0 : big;
        edt_1d(f, d, v, z);
        for (long j = 0; j < h; ++j) g[j * w + i] = d[j];
    }
    std::vector<double> out(w * h, big);
    f.resize(w);
    for (long j = 0; j < h; ++j) {
        for (long i = 0; i < w; ++i) f[i] = g[j * w + i];
        edt_1d(f, d, v, z);
        for (long i = 0; i < w; ++i) out[j * w + i] = d[i];
    }
    return out;
}

}  // namespace

long RasterMask::filled() const {
    long c = 0;
    for (std::uint8_t b : bits) c += (b != 0);
    return c;
}

std::vector<Point2> RasterMask::filled_centers() const {
    std::vector<Point2> out;
    for (long j = 0; j < height; ++j)
        for (long i = 0; i < width; ++i)
            if (bits[j * width + i]) out.push_back(center(i, j));
    return out;
}

void RasterMask::write_pgm(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_pgm: cannot open " + path);
    f << "P5\n" << width << " " << height << "\n255\n";
    for (long j = height - 1; j >= 0; --j)
        for (long i = 0; i < width; ++i)
            f.put(bits[j * width + i] ? static_cast<char>(255) : static_cast<char>(0));
    if (!f) throw std::runtime_error("write_pgm: write failed for " + path);
}

RasterMask closing_grid(const PointCloud& cloud, double r, double cell_size) {
    if (!(r > 0.0)) throw std::domain_error("closing_grid: radius must be positive");
    if (!(cell_size > 0.0) || cell_size > r / 10.0 * (1.0 + 1e-12))
        throw std::domain_error("closing_grid: cell_size must be positive and <= r/10");
    if (cloud.points.empty()) throw std::invalid_argument("closing_grid: empty cloud");

    const Aabb box = cloud.bounding_box().inflated(2.0 * r + cell_size);
    RasterMask mask;
    mask.cell = cell_size;
    mask.origin = {std::floor(box.lo.x / cell_size) * cell_size,
                   std::floor(box.lo.y / cell_size) * cell_size};
    mask.width = static_cast<long>(std::ceil((box.hi.x - mask.origin.x) / cell_size)) + 1;
    mask.height = static_cast<long>(std::ceil((box.hi.y - mask.origin.y) / cell_size)) + 1;
    if (mask.width * mask.height > 100000000L)
        throw std::runtime_error("closing_grid: grid exceeds 1e8 cells");

    const long w = mask.width, h = mask.height;
    std::vector<std::uint8_t> sample_cells(w * h, 0);
    for (const Point2& p : cloud.points) {
        const long i = static_cast<long>(std::floor((p.x - mask.origin.x) / cell_size));
        const long j = static_cast<long>(std::floor((p.y - mask.origin.y) / cell_size));
        if (i < 0 || j < 0 || i >= w || j >= h) throw std::logic_error("closing_grid: point off grid");
        sample_cells[j * w + i] = 1;
    }

    // Dilation and erosion share the digital disk; squared cell offsets are
    // exact integers, so ties resolve identically in both passes and the
    // closing is a true lattice morphology (hence exactly idempotent).
    const double R2 = (r / cell_size) * (r / cell_size);
    const std::vector<double> d_sample = edt2(sample_cells, w, h);
    std::vector<std::uint8_t> dilated(w * h, 0);
    for (long k = 0; k < w * h; ++k) dilated[k] = d_sample[k] <= R2 ? 1 : 0;

    std::vector<std::uint8_t> complement(w * h, 0);
    for (long k = 0; k < w * h; ++k) complement[k] = dilated[k] ? 0 : 1;
    const std::vector<double> d_comp = edt2(complement, w, h);
    mask.bits.assign(w * h, 0);
    for (long k = 0; k < w * h; ++k) mask.bits[k] = d_comp[k] > R2 ? 1 : 0;
    return mask;
}

}  // namespace rhull
