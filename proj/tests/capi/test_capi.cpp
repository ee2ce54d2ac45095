/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rcbethe/rcbethe.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace {

std::string take(rcb_text* t)
{
    std::string s(rcb_text_data(t), rcb_text_size(t));
    rcb_text_free(t);
    return s;
}

}  // namespace

TEST_CASE("version and status strings")
{
    CHECK(std::strlen(rcb_version()) > 0);
    CHECK(std::string(rcb_status_string(RCB_OK)).size() > 0);
    CHECK(std::string(rcb_status_string(RCB_INCOMPLETE_CENSUS)).size() > 0);
}

TEST_CASE("counts")
{
    rcb_text* t = nullptr;
    REQUIRE(rcb_rc_count(6, 1, 3, &t) == RCB_OK);
    CHECK(take(t) == "5");
    REQUIRE(rcb_physical_singular_count(14, 1, 7, &t) == RCB_OK);
    CHECK(take(t) == "15");
    CHECK(rcb_physical_singular_count(7, 1, 3, &t) == RCB_OUT_OF_SCOPE);
    CHECK(std::strlen(rcb_last_error()) > 0);
    CHECK(rcb_rc_count(-1, 1, 3, &t) == RCB_INVALID_ARGUMENT);
    CHECK(rcb_rc_count(6, 1, 3, nullptr) == RCB_INVALID_ARGUMENT);
}

TEST_CASE("solve and inspect records")
{
    rcb_config* cfg = nullptr;
    REQUIRE(rcb_config_new(&cfg) == RCB_OK);
    CHECK(rcb_config_set_tol(cfg, -1.0) == RCB_INVALID_ARGUMENT);
    CHECK(rcb_config_set_threads(cfg, 0) == RCB_INVALID_ARGUMENT);
    REQUIRE(rcb_config_set_seed(cfg, 42) == RCB_OK);

    rcb_solution_set* set = nullptr;
    REQUIRE(rcb_solve(6, 3, cfg, &set) == RCB_OK);
    CHECK(rcb_solution_set_complete(set) == 1);
    const size_t n = rcb_solution_count(set);
    int regular = 0, physical = 0;
    for (size_t i = 0; i < n; ++i) {
        rcb_solution_class cls;
        REQUIRE(rcb_solution_class_of(set, i, &cls) == RCB_OK);
        double roots[6];
        REQUIRE(rcb_solution_roots(set, i, roots, 6) == RCB_OK);
        double res = 1.0;
        REQUIRE(rcb_solution_residual(set, i, &res) == RCB_OK);
        CHECK(res < 1e-11);
        double re = 0, im = 0;
        if (cls == RCB_REGULAR) {
            ++regular;
            CHECK(rcb_solution_energy(set, i, &re, &im) == RCB_OK);
            CHECK(re < 0.0);
        } else if (cls == RCB_SINGULAR_PHYSICAL) {
            ++physical;
            CHECK(rcb_solution_energy(set, i, &re, &im) == RCB_DIVERGENT_ENERGY);
        }
        CHECK(rcb_solution_roots(set, i, roots, 5) == RCB_INVALID_ARGUMENT);
    }
    CHECK(regular == 4);
    CHECK(physical == 1);
    double dummy[6];
    CHECK(rcb_solution_roots(set, n, dummy, 6) == RCB_INVALID_ARGUMENT);

    rcb_text* j = nullptr;
    const rcb_run_info info{"bae solve", -1.0};
    REQUIRE(rcb_solution_set_json(set, 0, &info, &j) == RCB_OK);
    const auto js = take(j);
    CHECK(js.find("\"records\"") != std::string::npos);
    CHECK(js.find("wall_time_s") == std::string::npos);

    int ok = 0;
    REQUIRE(rcb_verify_json(set, 0.0, &info, &j, &ok) == RCB_OK);
    CHECK(ok == 1);
    rcb_text_free(j);

    const auto dir = std::filesystem::temp_directory_path() / "rcbethe_capi_svg";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    size_t written = 0;
    REQUIRE(rcb_solution_set_write_svg(set, 0, dir.string().c_str(), &written) == RCB_OK);
    CHECK(written == 5);
    CHECK(std::filesystem::exists(dir / "N6_l3_003_star.svg"));
    std::filesystem::remove_all(dir);
    CHECK(rcb_solution_set_write_svg(set, 0, "/nonexistent/dir", &written) == RCB_IO_ERROR);

    rcb_solution_set_free(set);
    rcb_config_free(cfg);
}

TEST_CASE("vectors")
{
    const double root[2] = {0.0, 0.0};
    std::vector<double> v(32);
    REQUIRE(rcb_bethe_vector(4, root, 1, v.data(), v.size()) == RCB_OK);
    CHECK(8 * v[2 * 1] == doctest::Approx(-1.0));
    CHECK(8 * v[2 * 8] == doctest::Approx(1.0));
    double e_re, e_im, res;
    REQUIRE(rcb_eigen_residual(4, v.data(), v.size(), &e_re, &e_im, &res) == RCB_OK);
    CHECK(e_re == doctest::Approx(-2.0));
    CHECK(res < 1e-12);

    const double pair[6] = {0.0, 0.5, 0.0, -0.5, 0.0, 0.0};
    double c_re, c_im;
    REQUIRE(rcb_nw_constant(6, pair, 3, &c_re, &c_im) == RCB_OK);
    CHECK(std::abs(c_re) < 1e-14);
    CHECK(c_im == doctest::Approx(6.0));

    std::vector<double> w(2 * 64);
    REQUIRE(rcb_regularized_vector(6, pair, 3, w.data(), w.size()) == RCB_OK);
    REQUIRE(rcb_eigen_residual(6, w.data(), w.size(), &e_re, &e_im, &res) == RCB_OK);
    CHECK(res < 1e-8);

    std::vector<double> zero(32, 0.0);
    CHECK(rcb_eigen_residual(4, zero.data(), zero.size(), &e_re, &e_im, &res) == RCB_ZERO_VECTOR);
    CHECK(rcb_bethe_vector(4, root, 1, v.data(), 3) == RCB_INVALID_ARGUMENT);
}

TEST_CASE("census table")
{
    rcb_text* t = nullptr;
    REQUIRE(rcb_census_table_text(14, 14, &t) == RCB_OK);
    CHECK(take(t).find("1716") != std::string::npos);
    const rcb_run_info info{"census table", -1.0};
    REQUIRE(rcb_census_table_json(2, 6, &info, &t) == RCB_OK);
    CHECK(take(t).find("\"rows\"") != std::string::npos);
    CHECK(rcb_census_table_json(6, 2, &info, &t) == RCB_INVALID_ARGUMENT);
}
