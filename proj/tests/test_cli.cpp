#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

int run(const std::string& args, const std::string& out_file = "cli_out_tmp.txt") {
    const std::string cmd = std::string(RHULL_BIN) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("hull subcommand on the touching triangle") {
    spit("cli_tri_tmp.txt", "0 0\n1 0\n0.5 0.8660254037844386\n# comment line\n");
    CHECK(run("hull cli_tri_tmp.txt -r 0.5773502691896258 --semantics closed --extremes") == 0);
    const std::string closed_out = slurp("cli_out_tmp.txt");
    CHECK(closed_out.find("extremes=3") != std::string::npos);
    CHECK(closed_out.find("extreme_indices=0,1,2") != std::string::npos);
    CHECK(run("hull cli_tri_tmp.txt -r 0.5773502691896258 --semantics open") == 0);
    const std::string open_out = slurp("cli_out_tmp.txt");
    CHECK(open_out.find("extremes=3") != std::string::npos);

    // Artifacts.
    CHECK(run("hull cli_tri_tmp.txt -r 0.58 --arcs-svg cli_tmp.svg --mask-pgm cli_tmp.pgm") == 0);
    CHECK(slurp("cli_tmp.svg").find("<svg") != std::string::npos);
    CHECK(slurp("cli_tmp.pgm").substr(0, 2) == "P5");
    std::remove("cli_tmp.svg");
    std::remove("cli_tmp.pgm");
    std::remove("cli_tri_tmp.txt");
}

TEST_CASE("hull subcommand rejects bad input files with exit 2") {
    spit("cli_empty_tmp.txt", "");
    CHECK(run("hull cli_empty_tmp.txt -r 0.5") == 2);
    spit("cli_bad_tmp.txt", "0 0\n1\n");
    CHECK(run("hull cli_bad_tmp.txt -r 0.5") == 2);
    const std::string err = slurp("cli_out_tmp.txt");
    CHECK(err.find(":2:") != std::string::npos);  // failing line number
    std::remove("cli_empty_tmp.txt");
    std::remove("cli_bad_tmp.txt");
}

TEST_CASE("simulate is deterministic and writes schema-stable CSV") {
    spit("cli_cfg_tmp.cfg",
         "shape.kind = disk\n"
         "shape.params = 0,0,1\n"
         "law.density = uniform\n"
         "experiment.n_grid = 64,128,256\n"
         "experiment.r_rule = fixed:0.5\n"
         "experiment.replications = 3\n"
         "experiment.seed = 31415\n"
         "experiment.metric = loss\n"
         "experiment.loss_samples = 2000\n"
         "output.dir = cli_sim_tmp\n");
    CHECK(run("simulate cli_cfg_tmp.cfg --threads 2") == 0);
    const std::string results1 = slurp("cli_sim_tmp/results.csv");
    const std::string fit1 = slurp("cli_sim_tmp/ratefit.csv");
    CHECK(results1.rfind("metric,n,r,replications,mean,stderr,normalized\n", 0) == 0);
    CHECK(fit1.rfind("slope,slope_lo,slope_hi,intercept\n", 0) == 0);
    CHECK(run("simulate cli_cfg_tmp.cfg --threads 1") == 0);
    CHECK(slurp("cli_sim_tmp/results.csv") == results1);  // byte-identical rerun
    CHECK(slurp("cli_sim_tmp/ratefit.csv") == fit1);
    std::remove("cli_cfg_tmp.cfg");
    std::remove("cli_sim_tmp/results.csv");
    std::remove("cli_sim_tmp/ratefit.csv");
}

TEST_CASE("simulate rejects invalid configuration with exit 3") {
    spit("cli_badcfg_tmp.cfg",
         "shape.kind = disk\n"
         "shape.params = 0,0,1\n"
         "experiment.n_grid = 64,128\n"
         "experiment.r_rule = fixed:1.5\n"  // above the rolling radius
         "experiment.replications = 3\n"
         "experiment.seed = 1\n");
    CHECK(run("simulate cli_badcfg_tmp.cfg") == 3);
    std::remove("cli_badcfg_tmp.cfg");
}

TEST_CASE("verify exits 0 on pass and 1 under sabotage") {
    CHECK(run("verify geometry --trials 200 --anchors 4 --samples 100 --mc-samples 1000 --grid 6 "
              "--csv cli_verify_tmp.csv") == 0);
    const std::string csv = slurp("cli_verify_tmp.csv");
    CHECK(csv.rfind("name,trials,failures,worst_margin\n", 0) == 0);
    CHECK(csv.find("cone_angle_equivalence") != std::string::npos);
    std::remove("cli_verify_tmp.csv");
    CHECK(run("verify unavoidable --trials 300 --anchors 4 --samples 100 --sabotage") == 1);
    CHECK(run("verify unavoidable --trials 300 --anchors 4 --samples 100") == 0);
}

TEST_CASE("bench reports full agreement between engines") {
    CHECK(run("bench --n 200 -r 0.5 --engines exact grid brute --probes 300 --csv "
              "cli_bench_tmp.csv") == 0);
    const std::string csv = slurp("cli_bench_tmp.csv");
    CHECK(csv.rfind("engine,n,build_ms,probe_ms,probes,agreement\n", 0) == 0);
    // Brute agrees exactly; the raster oracle within its resolution band.
    std::istringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    bool saw_brute = false, saw_grid = false;
    while (std::getline(ss, line)) {
        if (line.rfind("brute,", 0) == 0) {
            saw_brute = true;
            CHECK(line.substr(line.rfind(',') + 1) == "1");
        }
        if (line.rfind("grid,", 0) == 0) {
            saw_grid = true;
            CHECK(std::stod(line.substr(line.rfind(',') + 1)) >= 0.99);
        }
    }
    CHECK(saw_brute);
    CHECK(saw_grid);
    std::remove("cli_bench_tmp.csv");
}

TEST_CASE("bench skips brute above its cap") {
    CHECK(run("bench --n 2500 -r 0.5 --engines brute --probes 10") == 0);
    CHECK(slurp("cli_out_tmp.txt").find("skipping") != std::string::npos);
}
