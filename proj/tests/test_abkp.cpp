#include "doctest.h"

#include <random>

#include "qpxval/abkp.hpp"
#include "qpxval/errors.hpp"
#include "qpxval/oracle.hpp"

using namespace qpxval;

namespace {

Poly P(const std::string& s) { return poly_from_string(s); }

ValuationChain chain(std::int64_t p, std::initializer_list<std::pair<const char*, const char*>> lv) {
    ChainSpecData spec;
    spec.p = p;
    for (const auto& [q, g] : lv) spec.levels.push_back({P(q), rat_from_string(g)});
    return ValuationChain::from_spec(std::move(spec));
}

ValuationChain ex13() { return chain(3, {{"X", "0"}, {"X^2+1", "1/2"}}); }
ValuationChain ram3() { return chain(3, {{"X", "1/2"}, {"X^2-3", "3/2"}}); }

} // namespace

TEST_CASE("alpha_invariant") {
    CHECK(alpha_invariant(ex13(), P("X")) == 2);
    CHECK_FALSE(alpha_invariant(ex13(), P("X^2+1")).has_value()); // top: w_Q = w
    CHECK(alpha_invariant(ram3(), P("X")) == 2);
    CHECK_THROWS_AS(alpha_invariant(ex13(), P("X+1")), std::domain_error);
}

TEST_CASE("alpha_invariant agrees with bounded brute force") {
    for (const auto& W : {ex13(), ram3()}) {
        // no monic linear polynomial has a truncation discrepancy at Q = X
        const TruncationHandle T{W, P("X")};
        for (const Poly& g : enumerate_monic(1, 9, 3, 1))
            CHECK(truncation_eval(T, g) == w_eval(W, g));
        // while the next key polynomial does
        CHECK(truncation_eval(T, W.level(1).key) < w_eval(W, W.level(1).key));
    }
}

TEST_CASE("psi_member") {
    const auto v1 = psi_member(ex13(), P("X"), P("X^2+1"));
    CHECK(v1.member);
    CHECK(v1.wq_value == ExtValue(0));
    CHECK(v1.w_value == ExtValue(BigRat(1, 2)));

    const auto v2 = psi_member(ex13(), P("X"), P("X^2+2"));
    CHECK_FALSE(v2.member);
    CHECK(v2.wq_value == ExtValue(0));
    CHECK(v2.w_value == ExtValue(0));

    CHECK(psi_member(ram3(), P("X"), P("X^2-3")).member);
    CHECK_THROWS_AS(psi_member(ex13(), P("X"), P("2*X^2")), std::domain_error);

    // degree overshoot reports the witness degree
    const auto v3 = psi_member(ex13(), P("X"), P("X^4+2*X^2+1"));
    CHECK_FALSE(v3.member);
    CHECK(v3.wq_value < v3.w_value);
    CHECK(v3.degree_witness == 2);
}

TEST_CASE("falsify_abkp") {
    CHECK_FALSE(falsify_abkp(ex13(), P("X^2+1"), {9, 1}).has_value());

    // boundary instance: epsilon(X^2+2) = 0 = epsilon of any unit-value linear
    const auto witness = falsify_abkp(ex13(), P("X^2+2"), {9, 1});
    REQUIRE(witness.has_value());
    CHECK(*witness->degree() == 1);
    CHECK(epsilon(ex13(), *witness) >= epsilon(ex13(), P("X^2+2")));

    CHECK_FALSE(falsify_abkp(ex13(), P("X-5"), {9, 1}).has_value()); // no degree-0 candidates
}

TEST_CASE("is_distinguished_pair") {
    CHECK(is_distinguished_pair(ram3(), P("X^2-3"), P("X")));
    CHECK_FALSE(is_distinguished_pair(ex13(), P("X^2+2"), P("X")));
    CHECK(is_distinguished_pair(ex13(), P("X^2+1"), P("X")));
    CHECK_THROWS_AS(is_distinguished_pair(ex13(), P("X^2+1"), P("X+2")), std::domain_error);
}

TEST_CASE("saturated_chain") {
    const auto c1 = saturated_chain(ram3());
    REQUIRE(c1.links.size() == 1);
    CHECK(c1.links[0].F == P("X^2-3"));
    CHECK(c1.links[0].Q == P("X"));
    CHECK(c1.all_distinguished());
    CHECK(c1.entries[0].epsilon == BigRat(1, 2));
    CHECK(c1.entries[1].epsilon == BigRat(1));

    const auto c2 = saturated_chain(ex13());
    CHECK(c2.all_distinguished());

    CHECK_THROWS_AS(saturated_chain(chain(3, {{"X", "0"}})), std::domain_error);
}

TEST_CASE("truncations at distinct keys with equal epsilon agree") {
    // X and X+3 both have epsilon 0 under the Gauss-anchored chain
    const auto W = ex13();
    REQUIRE(epsilon(W, P("X")) == epsilon(W, P("X+3")));
    const TruncationHandle t1{W, P("X")}, t2{W, P("X+3")};
    std::mt19937_64 rng(211);
    std::uniform_int_distribution<int> deg(0, 6), c(-27, 27);
    for (int i = 0; i < 150; ++i) {
        std::vector<BigRat> v(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : v) x = BigRat(c(rng));
        const Poly f{v};
        if (f.is_zero()) continue;
        CHECK(truncation_eval(t1, f) == truncation_eval(t2, f));
    }
}

TEST_CASE("earlier keys truncate later keys strictly below their value") {
    for (const auto& W : {ex13(), ram3()}) {
        for (size_t i = 0; i < W.top_level(); ++i)
            for (size_t j = i + 1; j <= W.top_level(); ++j) {
                CHECK(epsilon(W, W.level(i).key) < epsilon(W, W.level(j).key));
                CHECK(truncation_eval({W, W.level(i).key}, W.level(j).key) <
                      w_eval(W, W.level(j).key));
            }
    }
}

TEST_CASE("psi-side criterion agrees with the root-side oracle") {
    const auto catalog = standard_catalog(1, 9, 3, 1);
    struct Instance {
        ValuationChain W;
        Poly F, Q;
    };
    const std::vector<Instance> instances = {
        {ram3(), P("X^2-3"), P("X")},
        {ex13(), P("X^2+2"), P("X")},
        {ex13(), P("X^2+1"), P("X")},
    };
    for (const auto& [W, F, Q] : instances) {
        const auto rep = distinguished_pair_root_oracle(F, Q, W.p(), catalog);
        REQUIRE(rep.verdict != OracleVerdict::Inconclusive);
        CHECK((rep.verdict == OracleVerdict::True) == is_distinguished_pair(W, F, Q));
    }
}
