// Exercises the shared library strictly through the public C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "xyquench.h"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_path(const char* name) {
    return std::string("capi_") + name + ".csv";
}

}  // namespace

TEST_CASE("version and parameter validation") {
    CHECK(std::string(xyq_version()) == "1.0.0");

    xyq_params* bad = xyq_params_new(1.0, 1, 1, 1, 1, 0.0, 999);
    CHECK(bad == nullptr);
    CHECK(std::string(xyq_last_error()).find("even") != std::string::npos);

    bad = xyq_params_new(1.5, 1, 1, 1, 1, 0.0, 1000);
    CHECK(bad == nullptr);
    bad = xyq_params_new(1.0, 1, 1, 1, 1, -0.2, 1000);
    CHECK(bad == nullptr);

    xyq_params* ok = xyq_params_new(1.0, 1, 1, 1, 1, 0.0, 1000);
    REQUIRE(ok != nullptr);
    xyq_params_free(ok);
    xyq_params_free(nullptr);  // harmless
}

TEST_CASE("single-point observables") {
    xyq_params* critical = xyq_params_new(1.0, 1, 1, 1, 1, 0.0, 1000);
    REQUIRE(critical != nullptr);
    double c = 0.0;
    CHECK(xyq_concurrence(critical, 1, 0.0, 1, &c) == XYQ_OK);
    CHECK(std::abs(c - 0.194601) < 1e-5);

    double sx, sy, sz;
    CHECK(xyq_spin_correlators(critical, 1, 0.0, 1, &sx, &sy, &sz) == XYQ_OK);
    CHECK(std::abs(sx - 1.0 / (2.0 * M_PI)) < 1e-4);
    CHECK(xyq_concurrence(critical, 0, -1.0, 1, &c) == XYQ_ERR_USAGE);
    xyq_params_free(critical);

    xyq_params* polarized = xyq_params_new(1.0, 0, 0, 1, 1, 0.0, 1000);
    REQUIRE(polarized != nullptr);
    double m = 0.0;
    CHECK(xyq_magnetization(polarized, 0, 0.0, &m) == XYQ_OK);
    CHECK(std::abs(m - 0.5) < 1e-12);
    xyq_params_free(polarized);
}

TEST_CASE("dynamics CSV output") {
    xyq_params* p = xyq_params_new(0.5, 1.1, 1.1, 0.9, 0.9, 0.0, 200);
    REQUIRE(p != nullptr);
    const std::string path = tmp_path("dynamics");
    CHECK(xyq_run_dynamics(p, 2.0, 8, "concurrence_r1,magnetization", 1,
                           path.c_str()) == XYQ_OK);
    const std::string text = slurp(path);
    CHECK(text.find("t,concurrence_r1,magnetization") != std::string::npos);

    // static parameters: every sampled row carries the same values
    std::istringstream lines(text);
    std::string line;
    std::string first_values;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') continue;
        const std::string values = line.substr(line.find(','));
        if (first_values.empty())
            first_values = values;
        else
            CHECK(values == first_values);
        ++rows;
    }
    CHECK(rows == 9);

    CHECK(xyq_run_dynamics(p, 2.0, 8, "entropy", 1, path.c_str()) ==
          XYQ_ERR_USAGE);
    CHECK(std::string(xyq_last_error()).find("entropy") != std::string::npos);
    xyq_params_free(p);
    std::remove(path.c_str());
}

TEST_CASE("sweep CSV output is deterministic") {
    xyq_params* p = xyq_params_new(1.0, 1, 1, 1, 1, 0.0, 200);
    REQUIRE(p != nullptr);
    const std::string path1 = tmp_path("sweep1");
    const std::string path2 = tmp_path("sweep2");
    CHECK(xyq_run_sweep(p, "lambda:0:3:31", nullptr, "concurrence_r1", 1, 1,
                        0.0, path1.c_str()) == XYQ_OK);
    CHECK(xyq_run_sweep(p, "lambda:0:3:31", nullptr, "concurrence_r1", 1, 1,
                        0.0, path2.c_str()) == XYQ_OK);
    CHECK(slurp(path1) == slurp(path2));
    CHECK(slurp(path1).find("lambda,concurrence_r1") != std::string::npos);

    const std::string path3 = tmp_path("sweep2d");
    CHECK(xyq_run_sweep(p, "lambda1:0:2:5", "kt:0:1:3", "concurrence_r1", 1, 1,
                        0.0, path3.c_str()) == XYQ_OK);
    const std::string grid = slurp(path3);
    CHECK(grid.find("lambda1,kt,concurrence_r1") != std::string::npos);

    CHECK(xyq_run_sweep(p, "t:0:1:5", nullptr, "concurrence_r1", 1, 1, 0.0,
                        path3.c_str()) == XYQ_ERR_USAGE);
    CHECK(xyq_run_sweep(p, "bogus:0:1:5", nullptr, "concurrence_r1", 1, 0, 0.0,
                        path3.c_str()) == XYQ_ERR_USAGE);
    CHECK(xyq_run_sweep(p, "lambda:0:1:1", nullptr, "concurrence_r1", 1, 0,
                        0.0, path3.c_str()) == XYQ_ERR_USAGE);
    xyq_params_free(p);
    std::remove(path1.c_str());
    std::remove(path2.c_str());
    std::remove(path3.c_str());
}

TEST_CASE("figure presets") {
    const std::string path = tmp_path("figure");
    CHECK(xyq_reproduce("15b", 200, path.c_str()) == XYQ_OK);
    const std::string text = slurp(path);
    CHECK(text.find("figure 15b") != std::string::npos);
    CHECK(text.find("kt,concurrence_r1") != std::string::npos);

    CHECK(xyq_reproduce("99x", 0, path.c_str()) == XYQ_ERR_USAGE);
    const std::string err = xyq_last_error();
    CHECK(err.find("17b") != std::string::npos);  // lists the valid ids
    std::remove(path.c_str());
}

TEST_CASE("oracle check entry point") {
    const std::string path = tmp_path("oracle");
    CHECK(xyq_oracle_check("wootters-xstate", path.c_str()) == XYQ_OK);
    CHECK(slurp(path).find("PASS") != std::string::npos);
    CHECK(xyq_oracle_check("bogus", path.c_str()) == XYQ_ERR_USAGE);
    std::remove(path.c_str());
}
