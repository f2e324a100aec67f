#include <doctest.h>

#include "lucaszeck/density_analysis.hpp"
#include "lucaszeck/errors.hpp"
#include "oracles.hpp"

using namespace lucaszeck;

TEST_SUITE("density_analysis") {

TEST_CASE("c_of reproduces the published counts in formula mode") {
    for (std::size_t i = 0; i < kReferenceBounds.size(); ++i) {
        CAPTURE(kReferenceBounds[i]);
        CHECK(c_of(kReferenceBounds[i]) == kReferenceCounts[i]);
    }
    CHECK(c_of(1) == 0);
    CHECK(c_of(4) == 0);
    CHECK(c_of(5) == 1);
    CHECK_THROWS_AS(c_of(0), ValidationError);
}

TEST_CASE("formula and enumeration agree, c is monotone with unit steps") {
    Int previous = 0;
    for (Int n = 1; n <= 3000; ++n) {
        const Int c = c_of(n);
        if (c != c_of(n, CountMode::enumeration, 1)) FAIL("modes disagree at N=" << n);
        if (c - previous != 0 && c - previous != 1) FAIL("step " << c - previous << " at N=" << n);
        previous = c;
    }
    CHECK(c_of(100'000, CountMode::enumeration) == 17'082);
}

TEST_CASE("alpha examples and the independent convergent oracle") {
    CHECK(alpha(5) == "0.17082");
    CHECK(alpha(1) == "0.2");
    CHECK(alpha(0) == "0");
    CHECK(alpha(12) == "0.170820393250");
    for (int digits : {10, 12, 30, 60}) {
        CAPTURE(digits);
        const auto floor_scaled = oracle::alpha_scaled_floor(digits + 1);
        const std::string digits_str = oracle::cpp_int((floor_scaled + 5) / 10).str();
        const std::string expected =
            "0." + std::string(static_cast<std::size_t>(digits) - digits_str.size(), '0') + digits_str;
        CHECK(alpha(digits) == expected);
    }
    CHECK_THROWS_AS(alpha(-1), ValidationError);
}

TEST_CASE("floor_alpha_times") {
    CHECK(floor_alpha_times(0) == 0);
    CHECK(floor_alpha_times(99) == 16);
    CHECK(floor_alpha_times(999'999) == 170'820);
}

TEST_CASE("rational_to_decimal rounds half up") {
    CHECK(rational_to_decimal(17, 100, 5) == "0.17000");
    CHECK(rational_to_decimal(1, 8, 2) == "0.13");
    CHECK(rational_to_decimal(2, 3, 3) == "0.667");
    CHECK(rational_to_decimal(1708000, 10000, 3) == "170.800");
    CHECK(rational_to_decimal(5, 1, 0) == "5");
}

TEST_CASE("beta_of examples") {
    const auto r100 = beta_of(100);
    CHECK(r100.c == 17);
    CHECK(r100.beta == "0.17000");
    CHECK(r100.percent == "17.000%");
    CHECK(r100.beta_numerator == 17);
    CHECK(r100.beta_denominator == 100);
    CHECK(beta_of(100'000).beta == "0.17082");
    CHECK(beta_of(1).beta == "0.00000");
    CHECK(beta_of(10).percent == "10.000%");
    CHECK(beta_of(1000).percent == "17.100%");
    CHECK(beta_of(10'000).percent == "17.080%");
    // |17/100 - 0.170820393249937| = 0.000820393249937
    CHECK(r100.alpha_gap == "0.000820393250");
}

TEST_CASE("beta converges within 5/N") {
    for (Int n : {1'000, 10'000, 100'000, 1'000'000}) {
        CAPTURE(n);
        const Int c = c_of(n);
        const Int floor_n_alpha = floor_alpha_times(n);
        // |c - N alpha| <= 5 with N alpha irrational.
        CHECK(floor_n_alpha >= c - 5);
        CHECK(floor_n_alpha <= c + 4);
    }
}

TEST_CASE("error_bound_check") {
    CHECK(error_bound_check(100));
    CHECK(error_bound_check(10'000));
    CHECK(error_bound_check(1'000'000));
    const auto r = error_bound_report(100);
    CHECK(r.c == 17);
    CHECK(r.reference == "16.911218931744");
    CHECK(r.deviation == doctest::Approx(0.0888).epsilon(0.001));
    CHECK(r.within_one);
    CHECK_THROWS_AS(error_bound_check(4), ValidationError);
    for (Int n = 5; n <= 5'000; ++n) {
        if (!error_bound_check(n)) FAIL("error bound fails at N=" << n);
    }
}

TEST_CASE("format_density_table") {
    const std::vector<DensityReport> rows{beta_of(10), beta_of(100)};
    CHECK(format_density_table(rows) == "N\tc\tpercent\n10\t1\t10.000%\n100\t17\t17.000%\n");
}

}  // TEST_SUITE
