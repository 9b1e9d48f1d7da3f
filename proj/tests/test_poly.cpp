#include "doctest.h"

#include <random>

#include "qpxval/errors.hpp"
#include "qpxval/poly.hpp"

using namespace qpxval;

namespace {

Poly P(const std::string& s) { return poly_from_string(s); }

Poly random_poly(std::mt19937_64& rng, int max_deg, int height) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-height, height);
    std::vector<BigRat> v(static_cast<size_t>(deg(rng)) + 1);
    for (auto& x : v) x = BigRat(c(rng));
    return Poly(std::move(v));
}

} // namespace

TEST_CASE("hasse derivatives") {
    CHECK(hasse_derivative(P("X^2+1"), 1) == P("2*X"));
    CHECK(hasse_derivative(P("X^2+1"), 2) == P("1"));
    CHECK(hasse_derivative(P("X^4"), 3) == P("4*X"));
    CHECK(hasse_derivative(P("X^2+1"), 3).is_zero());
    CHECK_THROWS_AS(hasse_derivative(P("X"), 0), std::domain_error);
}

TEST_CASE("hasse derivatives satisfy the Leibniz rule") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Poly f = random_poly(rng, 5, 9), g = random_poly(rng, 5, 9);
        if (f.is_zero() || g.is_zero()) continue;
        for (long b = 1; b <= 6; ++b) {
            Poly sum;
            for (long k = 0; k <= b; ++k) {
                const Poly df = k == 0 ? f : hasse_derivative(f, k);
                const Poly dg = (b - k) == 0 ? g : hasse_derivative(g, b - k);
                sum = sum + df * dg;
            }
            CHECK(hasse_derivative(f * g, b) == sum);
        }
    }
}

TEST_CASE("q_expansion") {
    const QExpansion e1 = q_expansion(P("X^3+2*X+1"), P("X^2+1"));
    REQUIRE(e1.coeffs().size() == 2);
    CHECK(e1.coeff(0) == P("X+1"));
    CHECK(e1.coeff(1) == P("X"));

    const QExpansion e2 = q_expansion(P("X^2+1"), P("X"));
    REQUIRE(e2.coeffs().size() == 3);
    CHECK(e2.coeff(0) == P("1"));
    CHECK(e2.coeff(1).is_zero());
    CHECK(e2.coeff(2) == P("1"));

    const QExpansion e3 = q_expansion(P("X^2+2"), P("X^2+1"));
    REQUIRE(e3.coeffs().size() == 2);
    CHECK(e3.coeff(0) == P("1"));
    CHECK(e3.coeff(1) == P("1"));

    CHECK_THROWS_AS(q_expansion(P("X"), P("2*X")), std::domain_error);
    CHECK_THROWS_AS(q_expansion(P("X"), P("3")), std::domain_error);
}

TEST_CASE("q_expansion reconstructs and bounds coefficient degrees") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Poly f = random_poly(rng, 9, 20);
        Poly q = random_poly(rng, 3, 6);
        if (q.is_constant()) continue;
        // force monic
        std::vector<BigRat> qc = q.coeffs();
        qc.back() = 1;
        q = Poly(qc);
        const QExpansion ex = q_expansion(f, q);
        CHECK(ex.reconstruct() == f);
        for (const Poly& c : ex.coeffs())
            if (!c.is_zero()) CHECK(*c.degree() < *q.degree());
        if (!f.is_zero()) CHECK_FALSE(ex.coeffs().back().is_zero());
    }
}

TEST_CASE("resultant values") {
    CHECK(resultant(P("X^2+1"), P("X")) == BigRat(1));
    CHECK(resultant(P("X-2"), P("X-5")) == BigRat(3)); // lc(g)^deg f * f(5)
    CHECK(resultant(P("X^2-3"), P("X^2-3")) == BigRat(0));
    CHECK_THROWS_AS(resultant(P("X"), Poly::zero()), std::domain_error);
}

TEST_CASE("resultant swap symmetry") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 150; ++i) {
        const Poly f = random_poly(rng, 4, 8), g = random_poly(rng, 4, 8);
        if (f.is_zero() || g.is_zero()) continue;
        const BigRat rf = resultant(f, g), rg = resultant(g, f);
        const size_t m = *f.degree(), n = *g.degree();
        CHECK(rf == ((m * n) % 2 == 0 ? rg : BigRat(-rg)));
    }
}

TEST_CASE("resultant is multiplicative in the first argument") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 80; ++i) {
        const Poly f1 = random_poly(rng, 3, 5), f2 = random_poly(rng, 3, 5), g = random_poly(rng, 3, 5);
        if (f1.is_zero() || f2.is_zero() || g.is_zero()) continue;
        CHECK(resultant(f1 * f2, g) == resultant(f1, g) * resultant(f2, g));
    }
}

TEST_CASE("polynomial text round trip") {
    for (const char* s : {"X^2+1", "X^2-3", "3*X", "X^4+2*X^2+4", "1/2*X^3-X+2/3", "-X", "0", "X-1"}) {
        const Poly f = P(s);
        CHECK(poly_to_string(f) == s);
        CHECK(poly_from_string(poly_to_string(f)) == f);
    }
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const Poly f = random_poly(rng, 7, 30);
        CHECK(poly_from_string(poly_to_string(f)) == f);
    }
    CHECK_THROWS_AS(P("X^^2"), parse_error);
    CHECK_THROWS_AS(P(""), parse_error);
    CHECK_THROWS_AS(P("X+"), parse_error);
}

TEST_CASE("degree sentinel and monic checks") {
    CHECK_FALSE(Poly::zero().degree().has_value());
    CHECK(*P("5").degree() == 0);
    CHECK(P("X^2+1").is_monic());
    CHECK_FALSE(P("2*X").is_monic());
}
