#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kronq/laurent.hpp"

using namespace kronq;

namespace {

LaurentPoly x(int i, int e = 1) { return LaurentPoly::variable(2, i, e); }

LaurentPoly random_poly(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> n_terms(1, 4), exp(-3, 3), coeff(-5, 5);
    LaurentPoly p(nvars);
    for (int t = 0; t < n_terms(rng); ++t) {
        LaurentPoly::Exps e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = exp(rng);
        p += LaurentPoly::monomial(nvars, e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("Canonical form drops zero terms", "[laurent]") {
    LaurentPoly p = x(1) + x(2);
    p -= x(1);
    CHECK(p == x(2));
    CHECK(p.term_count() == 1);
    p -= x(2);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK(LaurentPoly::constant(2, 0).is_zero());
}

TEST_CASE("Arithmetic", "[laurent]") {
    const LaurentPoly sq = (x(1) + x(2)) * (x(1) + x(2));
    CHECK(sq == x(1, 2) + BigInt(2) * (x(1) * x(2)) + x(2, 2));
    CHECK((x(1) - x(1)).is_zero());
    CHECK(-(x(1) - x(2)) == x(2) - x(1));
    CHECK((x(1) + x(2)).pow(0) == LaurentPoly::constant(2, 1));
    CHECK((x(1) + x(2)).pow(2) == sq);
    CHECK_THROWS_AS(x(1) + LaurentPoly::variable(3, 1), std::invalid_argument);
}

TEST_CASE("Exact division", "[laurent]") {
    CHECK(exact_div(x(1, 2) - x(2, 2), x(1) - x(2)) == x(1) + x(2));
    // dividing by a monomial is always exact in the Laurent ring
    CHECK(exact_div(x(1, 2) + LaurentPoly::constant(2, 1), x(2)) ==
          x(1, 2) * x(2, -1) + x(2, -1));
    CHECK(exact_div(LaurentPoly(2), x(1)).is_zero());

    CHECK_THROWS_AS(exact_div(x(1) + LaurentPoly::constant(2, 1),
                              x(2) + LaurentPoly::constant(2, 1)),
                    inexact_division);
    CHECK_THROWS_AS(exact_div(x(1, 2) + LaurentPoly::constant(2, 1),
                              x(1) + LaurentPoly::constant(2, 1)),
                    inexact_division);
    CHECK_THROWS_AS(exact_div(BigInt(3) * x(1), BigInt(2) * x(1)), inexact_division);
    CHECK_THROWS_AS(exact_div(x(1), LaurentPoly(2)), inexact_division);
}

TEST_CASE("Multiply-divide round trip", "[laurent]") {
    std::mt19937 rng(987);
    for (int nvars : {2, 3})
        for (int trial = 0; trial < 50; ++trial) {
            const LaurentPoly p = random_poly(rng, nvars);
            LaurentPoly q = random_poly(rng, nvars);
            if (q.is_zero()) q = LaurentPoly::variable(nvars, 1);
            CHECK(exact_div(p * q, q) == p);
        }
}

TEST_CASE("Substitution", "[laurent]") {
    // x1^2 / x2 with x1 -> y1 + y2, x2 -> y1
    const LaurentPoly p = x(1, 2) * x(2, -1);
    const LaurentPoly image = p.substitute({x(1) + x(2), x(1)});
    CHECK(image == x(1) + BigInt(2) * x(2) + x(2, 2) * x(1, -1));
    // identity substitution
    const LaurentPoly q = x(1, -2) + x(2, 3);
    CHECK(q.substitute({x(1), x(2)}) == q);
    CHECK_THROWS_AS(q.substitute({x(1)}), std::invalid_argument);
}

TEST_CASE("Canonical text form", "[laurent]") {
    CHECK(LaurentPoly(2).to_string() == "0");
    CHECK(LaurentPoly::constant(2, 7).to_string() == "7");
    CHECK(LaurentPoly::constant(2, -1).to_string() == "-1");
    CHECK(x(1).to_string() == "x1");
    CHECK((BigInt(2) * x(1)).to_string() == "2*x1");
    CHECK((x(1) - x(2)).to_string() == "x1 - x2");
    CHECK((x(2) - x(1)).to_string() == "-x1 + x2");

    // graded order, then reverse-lexicographic within a degree
    const LaurentPoly z1 = x(1, -1) * x(2, -1) + x(1) * x(2, -1) + x(1, -1) * x(2);
    CHECK(z1.to_string() == "x1^-1*x2^-1 + x1*x2^-1 + x1^-1*x2");
    const LaurentPoly v3 = x(1, -1) + x(1, -1) * x(2, 2);
    CHECK(v3.to_string() == "x1^-1 + x1^-1*x2^2");
}

TEST_CASE("Exponent utilities", "[laurent]") {
    const LaurentPoly p = x(1, -2) * x(2, 3) + x(1, 1);
    CHECK(p.min_exponents() == LaurentPoly::Exps{-2, 0});
    CHECK(p.shifted({2, 0}) == x(2, 3) + x(1, 3));
    CHECK(p.coeff({-2, 3}) == 1);
    CHECK(p.coeff({0, 0}) == 0);
    CHECK(p.has_nonnegative_coeffs());
    CHECK_FALSE((p - x(2)).has_nonnegative_coeffs());
}
