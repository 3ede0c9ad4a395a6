#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "rescool/errors.hpp"
#include "rescool/io.hpp"

using namespace rescool;

TEST_SUITE("io") {
    TEST_CASE("number formatting") {
        CHECK(format_number(0.0) == "0");
        CHECK(format_number(0.5) == "0.5");
        CHECK(format_number(1.0 / 3.0) == "0.333333333333");
        CHECK(format_number(-2.5e-20) == "-2.5e-20");
    }

    TEST_CASE("number parsing") {
        CHECK(parse_double("1.25") == 1.25);
        CHECK(parse_double("-3e2") == -300.0);
        CHECK_THROWS_AS(parse_double("1.2x"), ParseError);
        CHECK_THROWS_AS(parse_double(""), ParseError);
        CHECK(parse_complex("1,-2") == cplx(1, -2));
        CHECK_THROWS_AS(parse_complex("1"), ParseError);
    }

    TEST_CASE("matrix round trip") {
        Rng rng(61);
        auto m = oracle::random_hermitian(4, rng);
        std::stringstream ss;
        write_matrix(ss, m);
        auto back = read_matrix(ss);
        CHECK(max_abs_diff(back, m) < 1e-11);
    }

    TEST_CASE("matrix file with comments") {
        std::istringstream in("# two levels\ndim 2\n0,0 1,0\n\n1,0 0,0\n");
        auto m = read_matrix(in);
        CHECK(m(0, 1) == cplx(1.0));
        std::istringstream bad("dim 2\n0,0 1,0\n");
        CHECK_THROWS_AS(read_matrix(bad), ParseError);
    }

    TEST_CASE("amplitude files") {
        std::istringstream in("# state\n0.6,0\n0,0.8\n");
        auto v = read_amplitudes(in);
        CHECK(v.dim() == 2);
        CHECK(v.is_normalized());
        std::istringstream unnorm("1,0\n1,0\n");
        CHECK_THROWS_AS(read_amplitudes(unnorm), NotNormalized);
    }
}
