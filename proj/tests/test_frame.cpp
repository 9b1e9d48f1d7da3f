#include "doctest.h"

#include <random>

#include "qpxval/errors.hpp"
#include "qpxval/frame.hpp"

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
ValuationChain gauss3() { return chain(3, {{"X", "0"}}); }

} // namespace

TEST_CASE("value_group_below") {
    CHECK(value_group_below(ram3(), P("X^2-3")) == ValueGroup(2));
    CHECK(value_group_below(ex13(), P("X^2+1")) == ValueGroup(1));
    CHECK(value_group_below(ex13(), P("X")) == ValueGroup(1));
    CHECK_THROWS_AS(value_group_below(ex13(), P("X^2+2")), std::domain_error);
}

TEST_CASE("build_frame at a ramified level-0 key") {
    const RTFrame fr = build_frame(ram3(), P("X"));
    CHECK(fr.n() == 1);
    CHECK(fr.gamma() == BigRat(1, 2));
    CHECK(fr.group() == ValueGroup(1));
    CHECK(fr.e() == 2);
    CHECK(fr.h() == P("3"));
    CHECK(fr.residue_field().is_prime_field());
}

TEST_CASE("build_frame at a ramified top key") {
    const RTFrame fr = build_frame(ram3(), P("X^2-3"));
    CHECK(fr.n() == 2);
    CHECK(fr.gamma() == BigRat(3, 2));
    CHECK(fr.group() == ValueGroup(2));
    CHECK(fr.e() == 1);
    CHECK(fr.h() == P("3*X"));
    CHECK(fr.residue_field().is_prime_field()); // level-0 residual of X^2-3 is linear
}

TEST_CASE("build_frame at an unramified top key") {
    const RTFrame fr = build_frame(ex13(), P("X^2+1"));
    CHECK(fr.n() == 2);
    CHECK(fr.gamma() == BigRat(1, 2));
    CHECK(fr.group() == ValueGroup(1));
    CHECK(fr.e() == 2);
    CHECK(fr.h() == P("3"));
    CHECK_FALSE(fr.residue_field().is_prime_field());
    CHECK(fr.residue_field().modulus() == fp::FpPoly{1, 0, 1}); // t^2+1
}

TEST_CASE("residual polynomials of the worked examples") {
    // Gauss frame at Q = X: the residual of X^2+2 is Y^2+2
    const RTFrame g = build_frame(gauss3(), P("X"));
    const ResidueField f3 = ResidueField::prime_field(3);
    CHECK(residual_polynomial(g, P("X^2+2")) ==
          ResidualPoly(f3, {ResidueElem::from_int(f3, 2), ResidueElem::zero(f3),
                            ResidueElem::one(f3)}));
    CHECK(residual_polynomial(g, P("X^2+2")).to_string() == "Y^2+2");

    // frame of Q = X in the ramified chain: residue of -3/3 = -1
    const RTFrame r0 = build_frame(ram3(), P("X"));
    CHECK(residual_polynomial(r0, P("X^2-3")).to_string() == "Y+2");

    // frame of Q = X^2+1: residue of 3/3 = 1
    const RTFrame u1 = build_frame(ex13(), P("X^2+1"));
    CHECK(residual_polynomial(u1, P("X^4+2*X^2+4")).to_string() == "Y+1");
}

TEST_CASE("residual precondition errors") {
    const RTFrame u1 = build_frame(ex13(), P("X^2+1"));
    CHECK_THROWS_AS(residual_polynomial(u1, P("X^3+1")), std::domain_error);  // degree
    CHECK_THROWS_AS(residual_polynomial(u1, P("X^4+2*X^2+2")), std::domain_error); // value
    CHECK_THROWS_AS(residual_polynomial(u1, P("2*X^4+1")), std::domain_error); // not monic
    // F = Q^{em} itself legitimately reduces to Y^m
    CHECK(residual_polynomial(u1, P("X^4+2*X^2+1")).to_string() == "Y");
}

TEST_CASE("lift reproduces the worked examples") {
    const RTFrame r0 = build_frame(ram3(), P("X"));
    const ResidueField f3 = ResidueField::prime_field(3);
    CHECK(lift(r0, ResidualPoly::from_string(f3, "Y+1")) == P("X^2+3"));

    const RTFrame g = build_frame(gauss3(), P("X"));
    CHECK(lift(g, ResidualPoly::from_string(f3, "Y^2+2")) == P("X^2+2"));

    const RTFrame u1 = build_frame(ex13(), P("X^2+1"));
    const ResidueField f9 = u1.residue_field();
    CHECK(lift(u1, ResidualPoly::from_string(f9, "Y+1")) == P("X^4+2*X^2+4"));
}

TEST_CASE("lift rejects Y and non-monic residuals") {
    const RTFrame g = build_frame(gauss3(), P("X"));
    const ResidueField f3 = ResidueField::prime_field(3);
    CHECK_THROWS_AS(lift(g, ResidualPoly::from_string(f3, "Y")), std::domain_error);
    CHECK_THROWS_AS(lift(g, ResidualPoly::from_string(f3, "2*Y+1")), std::domain_error);
    CHECK_THROWS_AS(lift(g, ResidualPoly::from_string(f3, "2")), std::domain_error);
    // zero constant term is fine as long as G != Y
    CHECK(lift(g, ResidualPoly::from_string(f3, "Y^2")) == P("X^2"));
}

TEST_CASE("is_trivial_lifting") {
    CHECK(is_trivial_lifting(build_frame(gauss3(), P("X")), P("X+3")));
    CHECK_FALSE(is_trivial_lifting(build_frame(chain(3, {{"X", "1/2"}}), P("X")), P("X^2+3")));
    CHECK_FALSE(is_trivial_lifting(build_frame(ex13(), P("X^2+1")), P("X^4+2*X^2+4")));
}

TEST_CASE("round trip: residual_polynomial(lift(G)) = G") {
    std::mt19937_64 rng(71);
    const std::vector<ValuationChain> chains = {
        gauss3(), ram3(), ex13(),
        chain(5, {{"X", "1/2"}}), chain(2, {{"X", "1/2"}, {"X^2+2", "3/2"}}),
        chain(3, {{"X+1", "2/3"}}),
    };
    for (const auto& W : chains) {
        for (size_t lvl = 0; lvl <= W.top_level(); ++lvl) {
            const RTFrame fr = build_frame(W, W.level(lvl).key);
            const ResidueField& k = fr.residue_field();
            const long q = static_cast<long>(k.p());
            std::uniform_int_distribution<long> scal(0, q - 1);
            std::uniform_int_distribution<int> degd(1, 3);
            for (int it = 0; it < 30; ++it) {
                const size_t m = static_cast<size_t>(degd(rng));
                std::vector<ResidueElem> cs;
                for (size_t i = 0; i < m; ++i) {
                    fp::FpPoly raw(k.ext_degree(), 0);
                    for (auto& x : raw) x = scal(rng);
                    cs.push_back(ResidueElem(k, raw));
                }
                cs.push_back(ResidueElem::one(k));
                const ResidualPoly G(k, cs);
                if (G.is_Y()) continue;
                const Poly F = lift(fr, G);
                CHECK(*F.degree() == static_cast<size_t>(fr.e()) * m * fr.n());
                CHECK(residual_polynomial(fr, F) == G);
                CHECK(w_eval_prefix(W, lvl, F) ==
                      ExtValue(BigRat(fr.e()) * BigRat(m) * fr.gamma()));
            }
        }
    }
}

TEST_CASE("liftings satisfy the psi-membership and expansion shape") {
    // for F = lift(G) with deg F > deg Q: truncation at Q stays strictly below
    // the value of any augmentation at F, and the Q-expansion has f_d = 1 with
    // delta_Q(F) = d
    std::mt19937_64 rng(73);
    const std::vector<ValuationChain> chains = {gauss3(), ram3(), ex13()};
    for (const auto& W : chains) {
        const size_t lvl = W.top_level();
        const RTFrame fr = build_frame(W, W.level(lvl).key);
        const ResidueField& k = fr.residue_field();
        std::uniform_int_distribution<long> scal(0, k.p() - 1);
        for (int it = 0; it < 40; ++it) {
            const size_t m = 1 + static_cast<size_t>(it % 3);
            std::vector<ResidueElem> cs;
            for (size_t i = 0; i < m; ++i) {
                fp::FpPoly raw(k.ext_degree(), 0);
                for (auto& x : raw) x = scal(rng);
                cs.push_back(ResidueElem(k, raw));
            }
            cs.push_back(ResidueElem::one(k));
            const ResidualPoly G(k, cs);
            if (G.is_Y()) continue;
            const Poly F = lift(fr, G);
            if (*F.degree() <= *fr.q().degree()) continue;

            const ExtValue truncF = truncation_eval({W, fr.q()}, F);
            const ValuationChain W2 = augment(W, F, truncF.finite() + 1);
            CHECK(truncation_eval({W2, fr.q()}, F) < w_eval(W2, F));

            const QExpansion ex = q_expansion(F, fr.q());
            const size_t d = ex.top_index();
            CHECK(ex.coeff(d) == Poly::constant(1));
            CHECK(support_and_top({W, fr.q()}, F).top == d);
        }
    }
}

TEST_CASE("residual polynomial text round trip") {
    const ResidueField f9 = ResidueField::extension(3, {1, 0, 1});
    for (const char* s : {"Y^2+(t+1)*Y+2", "Y+(2*t)", "Y^3+t", "Y^2+2"}) {
        const ResidualPoly g = ResidualPoly::from_string(f9, s);
        CHECK(ResidualPoly::from_string(f9, g.to_string()) == g);
    }
    CHECK(ResidualPoly::from_string(f9, "Y-1").to_string() == "Y+2");
}
