#include "rhull/cloud_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace rhull {

PointCloud load_points(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open point file: " + path);
    PointCloud cloud;
    std::string line;
    long lineno = 0;
    std::unordered_set<std::string> seen;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double x, y;
        if (!(ss >> x)) {
            std::string rest;
            ss.clear();
            if (ss >> rest)
                throw ParseError(path + ":" + std::to_string(lineno) + ": expected two numbers");
            continue;  // blank or comment-only line
        }
        if (!(ss >> y)) throw ParseError(path + ":" + std::to_string(lineno) + ": missing y coordinate");
        std::string extra;
        if (ss >> extra) throw ParseError(path + ":" + std::to_string(lineno) + ": trailing tokens");
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError(path + ":" + std::to_string(lineno) + ": non-finite coordinate");
        cloud.points.push_back({x, y});
        std::string key(sizeof(double) * 2, '\0');
        std::memcpy(key.data(), &x, sizeof(double));
        std::memcpy(key.data() + sizeof(double), &y, sizeof(double));
        if (!seen.insert(key).second) cloud.has_duplicates = true;
    }
    if (cloud.points.empty()) throw ParseError(path + ": no points");
    return cloud;
}

void save_points(const PointCloud& cloud, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.precision(17);
    for (const Point2& p : cloud.points) f << p.x << " " << p.y << "\n";
}

}  // namespace rhull
