// Command-line front end: hull computation, rate simulations, geometry
// verification suites, and an engine benchmark.
//
// Exit codes: 0 success, 1 verification failure, 2 I/O or parse error,
// 3 configuration error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rhull/cloud_io.hpp"
#include "rhull/config.hpp"
#include "rhull/experiment.hpp"
#include "rhull/hull.hpp"
#include "rhull/metrics.hpp"
#include "rhull/proof_oracles.hpp"
#include "rhull/raster.hpp"
#include "rhull/svg.hpp"

namespace {

using namespace rhull;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_hull(const std::string& input, double r, const std::string& semantics,
             const std::string& svg_path, const std::string& pgm_path, double cell,
             bool print_extremes) {
    PointCloud cloud = load_points(input);
    const BoundarySemantics sem =
        semantics == "open" ? BoundarySemantics::open : BoundarySemantics::closed;

    auto t0 = std::chrono::steady_clock::now();
    RHull hull(cloud, r, sem);
    const double build_ms = ms_since(t0);

    double grid_area = -1.0;
    double grid_ms = -1.0;
    if (!pgm_path.empty()) {
        t0 = std::chrono::steady_clock::now();
        const RasterMask mask = closing_grid(hull.cloud(), r, cell > 0 ? cell : r / 50.0);
        grid_ms = ms_since(t0);
        grid_area = mask.area();
        mask.write_pgm(pgm_path);
    }
    if (!svg_path.empty()) write_hull_svg(hull, svg_path);

    std::cout << "n=" << hull.cloud().n() << " r=" << fmt(r)
              << " semantics=" << (sem == BoundarySemantics::open ? "open" : "closed")
              << " extremes=" << hull.extreme_indices().size()
              << " isolated=" << hull.boundary().isolated.size()
              << " arcs=" << hull.boundary().arcs.size() << " area_arcs=" << fmt(hull.area_arcs());
    if (grid_area >= 0.0) std::cout << " area_grid=" << fmt(grid_area);
    std::cout << " build_ms=" << fmt(build_ms);
    if (grid_ms >= 0.0) std::cout << " grid_ms=" << fmt(grid_ms);
    std::cout << "\n";
    if (print_extremes) {
        std::cout << "extreme_indices=";
        for (size_t i = 0; i < hull.extreme_indices().size(); ++i)
            std::cout << (i ? "," : "") << hull.extreme_indices()[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, int threads) {
    const ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
    const RateExperiment exp = cfg.to_experiment();
    const RateResult res = replicate_expectation(exp, threads);

    const std::filesystem::path dir(cfg.output_dir());
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "results.csv");
        f << "metric,n,r,replications,mean,stderr,normalized\n";
        const std::string mname = exp.metric == Metric::loss ? "loss" : "extremes";
        for (const RateRow& row : res.rows)
            f << mname << "," << row.n << "," << fmt(row.r) << "," << row.replications << ","
              << fmt(row.mean) << "," << fmt(row.stderr_) << "," << fmt(row.normalized) << "\n";
    }
    {
        std::ofstream f(dir / "ratefit.csv");
        f << "slope,slope_lo,slope_hi,intercept\n";
        f << fmt(res.fit.slope) << "," << fmt(res.fit.slope_lo) << "," << fmt(res.fit.slope_hi)
          << "," << fmt(res.fit.intercept) << "\n";
    }
    std::cout << "slope=" << fmt(res.fit.slope) << " ci=[" << fmt(res.fit.slope_lo) << ","
              << fmt(res.fit.slope_hi) << "] intercept=" << fmt(res.fit.intercept) << "\n";
    for (const RateRow& row : res.rows)
        std::cout << "n=" << row.n << " mean=" << fmt(row.mean) << " stderr=" << fmt(row.stderr_)
                  << " normalized=" << fmt(row.normalized) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& csv_path) {
    CheckReport rep;
    if (suite == "geometry")
        rep = run_geometry_suite(opt);
    else if (suite == "unavoidable")
        rep = run_unavoidable_suite(opt);
    else if (suite == "bounds")
        rep = run_bounds_suite(opt);
    else if (suite == "all")
        rep = run_all_suites(opt);
    else
        throw ConfigError("unknown verify suite: " + suite);

    std::ostringstream csv;
    csv << "name,trials,failures,worst_margin\n";
    for (const CheckRow& row : rep.rows)
        csv << row.name << "," << row.trials << "," << row.failures << "," << fmt(row.worst_margin)
            << "\n";
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << csv.str();
    }
    std::cout << csv.str();
    const long failures = rep.total_failures();
    std::cout << (failures == 0 ? "verify: all checks passed\n"
                                : "verify: " + std::to_string(failures) + " failures\n");
    return failures == 0 ? 0 : 1;
}

int cmd_bench(const std::vector<long>& ns, double r, const std::vector<std::string>& engines,
              long probes, std::uint64_t seed, const std::string& csv_path) {
    std::ostringstream csv;
    csv << "engine,n,build_ms,probe_ms,probes,agreement\n";
    const SupportShape shape = SupportShape::disk({0, 0}, 1.0);
    const SamplingLaw law = SamplingLaw::uniform(shape);
    for (long n : ns) {
        const PointCloud cloud = sample(law, n, derive_seed(seed, n, 0));
        Rng prng(derive_seed(seed, n, 1));
        std::vector<Point2> pr(probes);
        for (long i = 0; i < probes; ++i) pr[i] = prng.in_box(shape.bounding_box().inflated(0.2));

        auto t0 = std::chrono::steady_clock::now();
        RHull hull(cloud, r);
        const double exact_build = ms_since(t0);
        std::vector<char> exact_res(probes);
        t0 = std::chrono::steady_clock::now();
        for (long i = 0; i < probes; ++i) exact_res[i] = hull.contains(pr[i]);
        const double exact_probe = ms_since(t0);

        for (const std::string& eng : engines) {
            if (eng == "exact") {
                csv << "exact," << n << "," << fmt(exact_build) << "," << fmt(exact_probe) << ","
                    << probes << ",1\n";
            } else if (eng == "grid") {
                t0 = std::chrono::steady_clock::now();
                const RasterMask mask = closing_grid(cloud, r, r / 50.0);
                const double build = ms_since(t0);
                long agree = 0;
                t0 = std::chrono::steady_clock::now();
                for (long i = 0; i < probes; ++i)
                    agree += (mask.contains(pr[i]) == (exact_res[i] != 0));
                const double probe = ms_since(t0);
                csv << "grid," << n << "," << fmt(build) << "," << fmt(probe) << "," << probes << ","
                    << fmt(static_cast<double>(agree) / probes) << "\n";
            } else if (eng == "brute") {
                if (n > 2000) {
                    std::cerr << "bench: brute engine capped at n <= 2000, skipping n=" << n << "\n";
                    continue;
                }
                long agree = 0;
                t0 = std::chrono::steady_clock::now();
                for (long i = 0; i < probes; ++i)
                    agree += (membership_brute(cloud, r, pr[i]) == (exact_res[i] != 0));
                const double probe = ms_since(t0);
                csv << "brute," << n << ",0," << fmt(probe) << "," << probes << ","
                    << fmt(static_cast<double>(agree) / probes) << "\n";
            } else {
                throw ConfigError("unknown engine: " + eng);
            }
        }
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << csv.str();
    }
    std::cout << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar r-convex hull toolkit"};
    app.require_subcommand(1);

    // hull
    std::string in_file, semantics = "closed", svg_path, pgm_path;
    double radius = 0.0, cell = 0.0;
    bool print_extremes = false;
    CLI::App* hull = app.add_subcommand("hull", "compute the r-convex hull of a point file");
    hull->add_option("input", in_file, "point file, one 'x y' per line")->required();
    hull->add_option("-r,--radius", radius, "hull radius")->required();
    hull->add_option("--semantics", semantics, "open|closed")
        ->check(CLI::IsMember({"open", "closed"}));
    hull->add_option("--arcs-svg", svg_path, "write boundary figure as SVG");
    hull->add_option("--mask-pgm", pgm_path, "write raster closing as PGM");
    hull->add_option("--cell", cell, "raster cell size (default r/50)");
    hull->add_flag("--extremes", print_extremes, "print extreme point indices");

    // simulate
    std::string config_path;
    int threads = 0;
    CLI::App* sim = app.add_subcommand("simulate", "run a replicated rate experiment from a config");
    sim->add_option("config", config_path, "key=value config file")->required();
    sim->add_option("--threads", threads, "worker threads (0 = auto, capped by RHULL_THREADS)");

    // verify
    std::string suite = "all", verify_csv;
    VerifyOptions vopt;
    long vtrials = 10000;
    int vanchors = 100;
    CLI::App* ver = app.add_subcommand("verify", "run the geometric verification suites");
    ver->add_option("suite", suite, "geometry|unavoidable|bounds|all")
        ->check(CLI::IsMember({"geometry", "unavoidable", "bounds", "all"}));
    ver->add_option("--trials", vtrials, "probe balls per anchor");
    ver->add_option("--anchors", vanchors, "anchor count");
    ver->add_option("--samples", vopt.inclusion_samples, "samples per inclusion check");
    ver->add_option("--mc-samples", vopt.mc_samples, "samples per measured bound cell");
    ver->add_option("--grid", vopt.grid, "contact grid resolution");
    ver->add_option("--seed", vopt.seed, "base seed");
    ver->add_option("--csv", verify_csv, "also write the report CSV here");
    ver->add_flag("--sabotage", vopt.sabotage)->group("");  // hidden negative-control hook

    // bench
    std::vector<long> bench_ns{500, 2000, 10000};
    std::vector<std::string> engines{"exact", "grid", "brute"};
    double bench_r = 0.5;
    long bench_probes = 1000;
    std::uint64_t bench_seed = 7;
    std::string bench_csv;
    CLI::App* ben = app.add_subcommand("bench", "compare hull engines");
    ben->add_option("--n", bench_ns, "cloud sizes");
    ben->add_option("-r,--radius", bench_r, "hull radius");
    ben->add_option("--engines", engines, "exact|grid|brute");
    ben->add_option("--probes", bench_probes, "membership probes per size");
    ben->add_option("--seed", bench_seed, "base seed");
    ben->add_option("--csv", bench_csv, "write timing CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hull) return cmd_hull(in_file, radius, semantics, svg_path, pgm_path, cell, print_extremes);
        if (*sim) return cmd_simulate(config_path, threads);
        if (*ver) {
            vopt.trials_unavoidable = vtrials;
            vopt.anchors = vanchors;
            return cmd_verify(suite, vopt, verify_csv);
        }
        if (*ben) return cmd_bench(bench_ns, bench_r, engines, bench_probes, bench_seed, bench_csv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
