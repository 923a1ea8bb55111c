#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "multideg/bipoly.hpp"

using namespace multideg;

namespace {

std::mt19937 rng(20260826);

BiPoly random_poly() {
    std::uniform_int_distribution<int> nterms(0, 6), expo(0, 5), coeff(-9, 9);
    BiPoly p;
    for (int k = nterms(rng); k > 0; --k) p.add_term(expo(rng), expo(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    BiPoly sq = (BiPoly::t1() + BiPoly::t2()).pow(2);
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.coeff(1, 1) == 2);
    CHECK(sq.coeff(0, 2) == 1);
    CHECK(sq.term_count() == 3);

    BiPoly p = random_poly();
    CHECK(p * BiPoly::constant(1) == p);
    CHECK(p.pow(0) == BiPoly::constant(1));
}

TEST_CASE("ring axioms on randomized inputs") {
    for (int trial = 0; trial < 200; ++trial) {
        BiPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("pow of t1+t2 has binomial coefficients") {
    // Row n-1 of Pascal's triangle, exercised well past 64-bit territory.
    BiPoly p = (BiPoly::t1() + BiPoly::t2()).pow(80);
    Int expected = 1;
    for (int i = 0; i <= 80; ++i) {
        CHECK(p.coeff(80 - i, i) == expected);
        expected = expected * (80 - i) / (i + 1);
    }
}

TEST_CASE("h_poly") {
    CHECK(h_poly(1) == BiPoly::constant(1));

    BiPoly h3;
    h3.add_term(2, 0, 1);
    h3.add_term(1, 1, 1);
    h3.add_term(0, 2, 1);
    CHECK(h_poly(3) == h3);

    for (int n = 1; n <= 12; ++n) {
        CHECK(h_poly(n).eval(1, 1) == n);
        int deg = 0;
        CHECK(is_homogeneous(h_poly(n), &deg));
        CHECK(deg == n - 1);
        CHECK(is_symmetric(h_poly(n)));
    }
    CHECK(h_poly(4) * BiPoly::constant(1) == h_poly(4));
    CHECK((h_poly(3) * h_poly(5)).eval(1, 1) == 15);
    CHECK_THROWS_AS(h_poly(0), std::invalid_argument);
}

TEST_CASE("substitute_one_minus") {
    CHECK(substitute_one_minus(BiPoly::constant(1)) == BiPoly::constant(1));

    BiPoly p = BiPoly::constant(1) - BiPoly::term(1, 1, 1);  // 1 - t1 t2
    BiPoly expect = BiPoly::t1() + BiPoly::t2() - BiPoly::term(1, 1, 1);
    CHECK(substitute_one_minus(p) == expect);

    // (1 - t1 t2)^(n-1) has lowest part (t1 + t2)^(n-1).
    for (int n = 2; n <= 7; ++n) {
        auto [deg, part] = lowest_total_degree_part(substitute_one_minus(p.pow(n - 1)));
        CHECK(deg == n - 1);
        CHECK(part == (BiPoly::t1() + BiPoly::t2()).pow(n - 1));
    }
}

TEST_CASE("substitute_one_minus is an involution") {
    for (int trial = 0; trial < 100; ++trial) {
        BiPoly p = random_poly();
        CHECK(substitute_one_minus(substitute_one_minus(p)) == p);
    }
}

TEST_CASE("lowest_total_degree_part") {
    BiPoly p = BiPoly::t1() + BiPoly::t2() - BiPoly::term(1, 1, 1);
    auto [deg, part] = lowest_total_degree_part(p);
    CHECK(deg == 1);
    CHECK(part == BiPoly::t1() + BiPoly::t2());

    auto [deg2, part2] = lowest_total_degree_part(h_poly(5));
    CHECK(deg2 == 4);
    CHECK(part2 == h_poly(5));

    CHECK_THROWS_AS(lowest_total_degree_part(BiPoly()), std::invalid_argument);
}

TEST_CASE("multidegree predicates") {
    CHECK(is_multiplicity_free(h_poly(5)));
    CHECK(leading_coefficient(h_poly(5)) == 1);

    // C of the horned complete graph: n t1^{n+1} t2^{n-1} + (n+1) t1^n t2^n + n t1^{n-1} t2^{n+1}
    for (int n = 1; n <= 6; ++n) {
        BiPoly horned;
        horned.add_term(n + 1, n - 1, n);
        horned.add_term(n, n, n + 1);
        horned.add_term(n - 1, n + 1, n);
        CHECK(leading_coefficient(horned) == n);
        CHECK(is_symmetric(horned));
        CHECK(is_multiplicity_free(horned) == false);
    }

    BiPoly b3;  // barbell B_3 coefficients 1,3,5,5,3,1
    for (int i = 0; i <= 5; ++i) b3.add_term(i, 5 - i, 1 + 2 * std::min(i, 5 - i));
    CHECK(b3.eval(1, 1) == 18);

    CHECK_FALSE(is_symmetric(BiPoly::t1() + BiPoly::term(1, 1, 1)));
    CHECK_THROWS_AS(leading_coefficient(BiPoly()), std::invalid_argument);
    CHECK_THROWS_AS(is_multiplicity_free(BiPoly::term(1, 1, -2)), std::logic_error);
}

TEST_CASE("rendering") {
    BiPoly horned4;
    horned4.add_term(5, 3, 4);
    horned4.add_term(4, 4, 5);
    horned4.add_term(3, 5, 4);
    CHECK(to_latex(horned4) == "4t_1^5t_2^3 + 5t_1^4t_2^4 + 4t_1^3t_2^5");
    CHECK(to_text(BiPoly::term(1, 1, 1)) == "t1*t2");
    CHECK(to_text(BiPoly()) == "0");
    CHECK(to_text(BiPoly::constant(-3) + BiPoly::t1()) == "t1 - 3");
}

TEST_CASE("json round trip") {
    for (int trial = 0; trial < 50; ++trial) {
        BiPoly p = random_poly();
        CHECK(bipoly_from_json(to_json(p)) == p);
    }
    nlohmann::json j = to_json(h_poly(2));
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["i"] == 1);
    CHECK(j["terms"][0]["c"] == "1");
}
