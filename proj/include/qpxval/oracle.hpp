#pragma once

// Independent root-side machinery: Newton polygons, resultant-based
// root-difference valuations, the direct distinguished-pair check, valuation
// axiom sweeps and deterministic enumeration. Core computations consume only
// polynomial coefficients and p, never chain data, so agreement with the
// derivative-side production code is evidence rather than circularity.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpxval/poly.hpp"
#include "qpxval/values.hpp"

namespace qpxval {

// valuations of the nonzero roots of a polynomial, with multiplicities
struct SlopeMultiset {
    std::vector<std::pair<BigRat, long>> values; // ascending, multiplicities positive
    long zero_roots = 0;                         // number of roots equal to 0

    long total_multiplicity() const;
    std::optional<BigRat> max_value() const; // nonzero-root part only
    std::string to_string() const;           // "{1/2 x 2}" etc.

    friend bool operator==(const SlopeMultiset&, const SlopeMultiset&) = default;
};

// lower convex hull of (i, v_p(c_i)); negated slopes with lattice lengths
SlopeMultiset newton_polygon(const Poly& f, std::int64_t p);

// R(T) = Res_X(f(X), g(X+T)), computed exactly by interpolation
Poly resultant_in_shift(const Poly& f, const Poly& g);

// multiset of valuations of theta_i - beta_j over all root pairs; zero_roots
// counts shared roots of f and g
SlopeMultiset root_difference_valuations(const Poly& f, const Poly& g, std::int64_t p);

// Conclusive-when-possible factorization degrees of f over Q_p by one round
// of Newton-polygon slopes and residual factorization (tame/regular cases).
struct PadicFactorSketch {
    bool squarefree = true;       // over Q; nothing else is known when false
    std::vector<long> certain;    // degrees of certainly irreducible factors
    std::vector<long> unresolved; // degrees of chunks with repeated residual factors

    bool conclusive() const { return squarefree && unresolved.empty(); }
    bool irreducible_known(size_t deg) const {
        return conclusive() && certain.size() == 1 && certain[0] == static_cast<long>(deg);
    }
    bool reducible_known() const { return squarefree && certain.size() + unresolved.size() >= 2; }
};

PadicFactorSketch padic_factor_sketch(const Poly& f, std::int64_t p);

// sup over beta in Q_p of v(theta - beta) for a root theta of an irreducible
// monic quadratic; nullopt when the discriminant is a square in Q_p
std::optional<BigRat> quadratic_best_approx_value(const Poly& F, std::int64_t p);

enum class OracleVerdict { True, False, Inconclusive };

std::string to_string(OracleVerdict v);

struct OracleCheck {
    std::string name;
    OracleVerdict verdict;
    std::string detail;
};

struct DistinguishedPairReport {
    OracleVerdict verdict = OracleVerdict::Inconclusive;
    std::vector<OracleCheck> checks;
};

// Direct root-side check of the distinguished-pair definition, with beta
// ranging over roots of catalog members. Conclusive only when a witness is
// found or a Krasner-type bound closes the gap; quadratics are always decided
// exactly.
DistinguishedPairReport distinguished_pair_root_oracle(const Poly& F, const Poly& Q,
                                                       std::int64_t p,
                                                       const std::vector<Poly>& catalog);

// root-side optimizing-root value delta(f) anchored at the top pair
// (top_key, gamma_top) of a chain; consumes coefficients and p only
ExtValue optimizing_value_oracle(const Poly& top_key, const BigRat& gamma_top, const Poly& f,
                                 std::int64_t p);

struct AxiomViolation {
    Poly f, g;
    std::string law; // which axiom failed, with the offending values
};

struct AxiomReport {
    long pairs_checked = 0;
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

AxiomReport check_valuation_axioms(const std::function<ExtValue(const Poly&)>& value_of,
                                   const std::vector<std::pair<Poly, Poly>>& samples);

// deterministic lexicographic stream of monic degree-d polynomials with
// coefficients c*p^j, |c| <= height, |j| <= p_power_cap
class MonicEnumerator {
public:
    MonicEnumerator(long degree, long height, std::int64_t p, long p_power_cap);

    const std::vector<BigRat>& pool() const { return pool_; }
    BigInt count() const; // pool^degree
    std::optional<Poly> next();
    void reset();

private:
    long degree_;
    std::vector<BigRat> pool_;
    std::vector<size_t> odometer_;
    bool done_ = false;
};

std::vector<Poly> enumerate_monic(long degree, long height, std::int64_t p, long p_power_cap);

// all monic polynomials of degree 1..max_degree from the same pool
std::vector<Poly> standard_catalog(long max_degree, long height, std::int64_t p, long p_power_cap);

} // namespace qpxval
