#include <doctest.h>

#include "intrinsic_metrics.h"

#include <cmath>
#include <cstring>
#include <string>

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("version and error text") {
    REQUIRE(ivm_version() != nullptr);
    CHECK(std::strlen(ivm_version()) > 0);
    REQUIRE(ivm_last_error() != nullptr);
}

TEST_CASE("scalar constants through the C surface") {
    double v = 0.0;
    REQUIRE(ivm_flag_coefficient(2, 1, &v) == IVM_OK);
    CHECK(v == doctest::Approx(kPi / 2).epsilon(1e-13));
    REQUIRE(ivm_chern_constant(3, 1, 2, &v) == IVM_OK);
    CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    REQUIRE(ivm_cap_constant(1, 0.0, &v) == IVM_OK);
    CHECK(v == doctest::Approx(4.0).epsilon(1e-13));
    REQUIRE(ivm_annulus_constant(1, 0.0, &v) == IVM_OK);
    CHECK(v == doctest::Approx(4.0).epsilon(1e-13));
    REQUIRE(ivm_cap_probability(2, 0.0, 0.0, &v) == IVM_OK);
    CHECK(v == doctest::Approx(0.5).epsilon(1e-13));
    REQUIRE(ivm_ball_intrinsic_volume(3, 1, &v) == IVM_OK);
    CHECK(v == doctest::Approx(4.0).epsilon(1e-13));
    REQUIRE(ivm_simplex_second_moment(3, 0.0, &v) == IVM_OK);
    CHECK(v == doctest::Approx(3.0 / 32.0).epsilon(1e-13));
    REQUIRE(ivm_hull_length_expectation(9, 0.0, &v) == IVM_OK);
    CHECK(v == doctest::Approx(1.6).epsilon(1e-13));
    REQUIRE(ivm_hull_length_quadrature(9, 0.0, &v) == IVM_OK);
    CHECK(v == doctest::Approx(1.6).epsilon(1e-8));
}

TEST_CASE("errors set a message and leave outputs alone") {
    double v = -7.0;
    CHECK(ivm_ball_intrinsic_volume(3, 9, &v) == IVM_ERR_PARAM);
    CHECK(v == -7.0);
    CHECK(std::strlen(ivm_last_error()) > 0);
    CHECK(ivm_flag_coefficient(2, 1, nullptr) == IVM_ERR_PARAM);
    CHECK(ivm_cap_constant(2, -1.5, &v) == IVM_ERR_PARAM);
}

TEST_CASE("delta between nested squares, exact planar path") {
    const double outer[] = {0, 0, 2, 0, 2, 2, 0, 2};
    const double inner[] = {0.5, 0.5, 1.5, 0.5, 1.5, 1.5, 0.5, 1.5};
    double value = 0.0, se = -1.0;
    REQUIRE(ivm_delta_j(2, 2, outer, 4, inner, 4, 32, 512, 5, &value, &se) ==
            IVM_OK);
    CHECK(value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(se == 0.0);

    // identical bodies
    REQUIRE(ivm_delta_j(2, 1, outer, 4, outer, 4, 32, 512, 5, &value, &se) ==
            IVM_OK);
    CHECK(value == doctest::Approx(0.0));
}

TEST_CASE("intrinsic volume of a square") {
    const double sq[] = {0, 0, 1, 0, 1, 1, 0, 1};
    double value = 0.0, se = 0.0;
    REQUIRE(ivm_intrinsic_volume(2, 2, sq, 4, 64, 1024, 3, &value, &se) == IVM_OK);
    CHECK(value == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(ivm_intrinsic_volume(2, 1, sq, 4, 256, 1024, 3, &value, &se) == IVM_OK);
    CHECK(std::fabs(value - 2.0) <= 4.0 * se);

    CHECK(ivm_intrinsic_volume(2, 2, nullptr, 0, 8, 8, 1, &value, &se) ==
          IVM_ERR_PARAM);
}

TEST_CASE("command runner and table accessors") {
    ivm_table* t = nullptr;
    REQUIRE(ivm_run_command("appendixB", "N=1,4\nbeta=0\n", &t) == IVM_OK);
    REQUIRE(t != nullptr);
    CHECK(ivm_table_rows(t) == 2);
    CHECK(ivm_table_cols(t) == 4);
    CHECK(std::string(ivm_table_column_name(t, 0)) == "N");
    CHECK(ivm_table_cell(t, 1, 1) == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(ivm_table_label(t, 0) == nullptr);

    char* csv = ivm_table_csv(t);
    REQUIRE(csv != nullptr);
    CHECK(std::string(csv).rfind("N,value,quadrature,abs_diff\n", 0) == 0);
    ivm_string_free(csv);

    char* meta = ivm_table_meta_json(t);
    REQUIRE(meta != nullptr);
    CHECK(std::string(meta).find("\"spec\"") != std::string::npos);
    ivm_string_free(meta);
    ivm_table_free(t);

    CHECK(ivm_run_command("nope", "", &t) == IVM_ERR_PARAM);
    CHECK(std::string(ivm_last_error()).find("nope") != std::string::npos);
    CHECK(ivm_run_command("appendixB", "bogus=1\n", &t) == IVM_ERR_PARAM);
}

TEST_CASE("labelled tables expose row names") {
    ivm_table* t = nullptr;
    REQUIRE(ivm_run_command("constants", "mc_samples=200\nnmax=10\n", &t) == IVM_OK);
    REQUIRE(ivm_table_rows(t) > 10);
    REQUIRE(ivm_table_label(t, 0) != nullptr);
    CHECK(std::string(ivm_table_label(t, 0)) == "flag(2,1)");
    CHECK(ivm_table_cell(t, 0, 0) == doctest::Approx(kPi / 2).epsilon(1e-12));
    ivm_table_free(t);
}
