#include "qpxval/oracle.hpp"

#include <algorithm>
#include <set>

#include "qpxval/errors.hpp"

namespace qpxval {

long SlopeMultiset::total_multiplicity() const {
    long t = 0;
    for (const auto& [v, m] : values) t += m;
    return t;
}

std::optional<BigRat> SlopeMultiset::max_value() const {
    if (values.empty()) return std::nullopt;
    return values.back().first;
}

std::string SlopeMultiset::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(values[i].first) + " x " + std::to_string(values[i].second);
    }
    s += "}";
    if (zero_roots > 0) s += ", zero-roots " + std::to_string(zero_roots);
    return s;
}

SlopeMultiset newton_polygon(const Poly& f, std::int64_t p) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: f must be nonzero");
    if (!is_prime(p)) throw std::domain_error("newton_polygon: p must be prime");
    SlopeMultiset out;
    size_t k = 0;
    while (f.coeff(k) == 0) ++k;
    out.zero_roots = static_cast<long>(k);
    const size_t n = *f.degree();
    if (n == k) return out; // constant after removing X^k

    auto val = [&](size_t i) {
        const BigRat& c = f.coeff(i);
        return BigRat(int_valuation(numerator(c), p) - int_valuation(denominator(c), p));
    };
    size_t i = k;
    BigRat vi = val(i);
    while (i < n) {
        // next hull vertex: minimal slope, then farthest
        size_t best_j = 0;
        BigRat best_slope;
        bool have = false;
        for (size_t j = i + 1; j <= n; ++j) {
            if (f.coeff(j) == 0) continue;
            const BigRat slope = (val(j) - vi) / BigRat(j - i);
            if (!have || slope < best_slope || (slope == best_slope && j > best_j)) {
                have = true;
                best_slope = slope;
                best_j = j;
            }
        }
        out.values.emplace_back(-best_slope, static_cast<long>(best_j - i));
        i = best_j;
        vi = val(i);
    }
    std::reverse(out.values.begin(), out.values.end());
    return out;
}

namespace {

Poly lagrange_interpolate(const std::vector<std::pair<BigRat, BigRat>>& pts) {
    Poly acc;
    for (size_t i = 0; i < pts.size(); ++i) {
        Poly basis = Poly::constant(1);
        BigRat denom(1);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly({-pts[j].first, BigRat(1)});
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + basis.scaled(pts[i].second / denom);
    }
    return acc;
}

} // namespace

Poly resultant_in_shift(const Poly& f, const Poly& g) {
    const auto df = f.degree(), dg = g.degree();
    if (!df || !dg || *df < 1 || *dg < 1)
        throw std::domain_error("resultant_in_shift: inputs must have degree >= 1");
    const size_t deg = *df * *dg;
    std::vector<std::pair<BigRat, BigRat>> pts;
    for (size_t t = 0; t <= deg; ++t)
        pts.emplace_back(BigRat(t), resultant(f, g.shifted(BigRat(t))));
    return lagrange_interpolate(pts);
}

SlopeMultiset root_difference_valuations(const Poly& f, const Poly& g, std::int64_t p) {
    const auto df = f.degree(), dg = g.degree();
    if (!df || !dg || *df < 1 || *dg < 1)
        throw std::domain_error("root_difference_valuations: inputs must have degree >= 1");
    const Poly R = resultant_in_shift(f, g);
    if (R.is_zero()) throw std::domain_error("root_difference_valuations: shared root (zero resultant)");
    return newton_polygon(R, p);
}

PadicFactorSketch padic_factor_sketch(const Poly& f, std::int64_t p) {
    const auto deg = f.degree();
    if (!deg || *deg < 1) throw std::domain_error("padic_factor_sketch: degree >= 1 required");
    PadicFactorSketch out;
    if (!is_squarefree(f)) {
        out.squarefree = false;
        return out;
    }
    size_t k = 0;
    while (f.coeff(k) == 0) ++k;
    for (size_t i = 0; i < k; ++i) out.certain.push_back(1); // roots at 0

    // per Newton-polygon segment: slope u/e and the attached residual polynomial
    auto val = [&](size_t i) {
        const BigRat& c = f.coeff(i);
        return BigRat(int_valuation(numerator(c), p) - int_valuation(denominator(c), p));
    };
    size_t i = k;
    while (i < *deg) {
        BigRat vi = val(i);
        size_t best_j = 0;
        BigRat best_slope;
        bool have = false;
        for (size_t j = i + 1; j <= *deg; ++j) {
            if (f.coeff(j) == 0) continue;
            const BigRat slope = (val(j) - vi) / BigRat(j - i);
            if (!have || slope < best_slope || (slope == best_slope && j > best_j)) {
                have = true;
                best_slope = slope;
                best_j = j;
            }
        }
        // residual polynomial of the segment [(i, v_i), (best_j, v_j)]
        const long e = denominator(best_slope).convert_to<long>();
        const long L = static_cast<long>(best_j - i);
        if (L % e != 0) throw internal_error("padic_factor_sketch: lattice length not divisible");
        fp::FpPoly A(static_cast<size_t>(L / e) + 1, 0);
        for (long j = 0; j <= L / e; ++j) {
            const size_t idx = i + static_cast<size_t>(j * e);
            const BigRat& c = f.coeff(idx);
            if (c == 0) continue;
            const BigRat hull = vi + best_slope * BigRat(j * e); // integral at lattice points
            if (denominator(hull) != 1) throw internal_error("padic_factor_sketch: non-integral hull");
            const BigRat u = c / pow_rat(p, numerator(hull).convert_to<long>());
            if (base_valuation(u, p) == ExtValue(0)) {
                const ResidueElem r = residue_of_rational(u, p);
                A[static_cast<size_t>(j)] = r.is_zero() ? 0 : r.coeffs()[0];
            }
        }
        fp::trim(A);
        for (const auto& [R, mult] : fp::factor(A, p)) {
            const long piece = e * fp::degree(R);
            if (mult == 1)
                out.certain.push_back(piece);
            else
                out.unresolved.push_back(piece * mult);
        }
        i = best_j;
    }
    return out;
}

std::optional<BigRat> quadratic_best_approx_value(const Poly& F, std::int64_t p) {
    const auto deg = F.degree();
    if (!deg || *deg != 2 || !F.is_monic())
        throw std::domain_error("quadratic_best_approx_value: monic quadratic required");
    const BigRat A = F.coeff(1), B = F.coeff(0);
    const BigRat D = A * A - 4 * B;
    if (D == 0) return std::nullopt; // not squarefree
    const long v2 = (p == 2) ? 1 : 0;
    const long vD = numerator(base_valuation(D, p).finite()).convert_to<long>();
    const long vD4 = vD - 2 * v2;
    if (vD4 % 2 != 0) {
        // |vD4| odd: sup v(F(beta)) = vD4, split evenly between conjugates
        return BigRat(vD4, 2);
    }
    const long s = vD4 / 2;
    const BigRat u0 = (D / 4) / pow_rat(p, vD4);
    if (p == 2) {
        // odd unit u0; squares are exactly 1 mod 8
        const BigInt num = numerator(u0), den = denominator(u0);
        const std::int64_t r = fp::mod_reduce((num % 8).convert_to<std::int64_t>() *
                                                  fp::mod_inverse((den % 8).convert_to<std::int64_t>(), 8),
                                              8);
        if (r == 1) return std::nullopt; // square: F reducible over Q_2
        const long vdiff = numerator(base_valuation(1 - u0, p).finite()).convert_to<long>();
        return BigRat(2 * s + vdiff, 2);
    }
    // p odd: u0 is a square in Q_p iff its residue is a QR mod p
    const ResidueElem r = residue_of_rational(u0, p);
    if (r.pow((p - 1) / 2) == ResidueElem::one(r.field())) return std::nullopt;
    return BigRat(s);
}

std::string to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::True: return "true";
        case OracleVerdict::False: return "false";
        default: return "inconclusive";
    }
}

namespace {

// largest valuation among differences theta - beta over all root pairs;
// nullopt when f and g share a root
struct PairMax {
    std::optional<BigRat> value;
    bool shared_root = false;
};

PairMax pair_max(const Poly& f, const Poly& g, std::int64_t p) {
    const SlopeMultiset s = root_difference_valuations(f, g, p);
    PairMax out;
    out.shared_root = s.zero_roots > 0;
    out.value = s.max_value();
    return out;
}

} // namespace

DistinguishedPairReport distinguished_pair_root_oracle(const Poly& F, const Poly& Q,
                                                       std::int64_t p,
                                                       const std::vector<Poly>& catalog) {
    const auto dF = F.degree(), dQ = Q.degree();
    if (!dF || !dQ || !F.is_monic() || !Q.is_monic())
        throw std::domain_error("distinguished_pair_root_oracle: monic F, Q required");
    if (!(*dF > *dQ && *dQ >= 1))
        throw std::domain_error("distinguished_pair_root_oracle: deg F > deg Q >= 1 required");
    if (catalog.empty()) {
        DistinguishedPairReport rep;
        rep.verdict = OracleVerdict::Inconclusive;
        rep.checks.push_back({"catalog", OracleVerdict::Inconclusive, "empty catalog"});
        return rep;
    }

    DistinguishedPairReport rep;
    auto fail = [&](const std::string& name, const std::string& detail) {
        rep.checks.push_back({name, OracleVerdict::False, detail});
        rep.verdict = OracleVerdict::False;
        return rep;
    };

    // degree side of condition (i): both polynomials must be irreducible over
    // Q_p for their roots to have the full degrees
    for (const Poly* poly : {&F, &Q}) {
        const std::string name = poly == &F ? "F irreducible" : "Q irreducible";
        const PadicFactorSketch sk = padic_factor_sketch(*poly, p);
        if (sk.reducible_known()) {
            std::string detail = "splits over Q_p with factor degrees";
            for (long deg : sk.certain) detail += " " + std::to_string(deg);
            for (long deg : sk.unresolved) detail += " (" + std::to_string(deg) + ")";
            return fail(name, detail);
        }
        if (sk.irreducible_known(*poly->degree()))
            rep.checks.push_back({name, OracleVerdict::True, "Newton polygon + residual factor"});
        else
            rep.checks.push_back(
                {name, OracleVerdict::Inconclusive, "assumed from the caller's assertion"});
    }

    const PairMax dfq = pair_max(F, Q, p);
    if (dfq.shared_root)
        return fail("common root", "F and Q share a root; F cannot be irreducible");
    const BigRat d = *dfq.value; // candidate v(theta - alpha)
    rep.checks.push_back({"v(theta-alpha)", OracleVerdict::True, rat_to_string(d)});

    // condition (ii): no beta of degree < deg F beats alpha
    OracleVerdict cond2 = OracleVerdict::Inconclusive;
    std::string cond2_detail;
    for (const Poly& g : catalog) {
        const auto dg = g.degree();
        if (!dg || *dg < 1 || *dg >= *dF) continue;
        const PairMax m = pair_max(F, g, p);
        if (m.shared_root)
            return fail("condition (ii)",
                        "F shares a root with catalog member " + g.to_string() +
                            " of smaller degree; F is reducible");
        if (*m.value > d) {
            cond2 = OracleVerdict::False;
            cond2_detail = "beta from " + g.to_string() + " attains " + rat_to_string(*m.value) +
                           " > " + rat_to_string(d);
            break;
        }
    }
    if (cond2 != OracleVerdict::False) {
        const PairMax conj = pair_max(F, F, p);
        const BigRat krasner = *conj.value;
        if (d == krasner) {
            cond2 = OracleVerdict::True;
            cond2_detail = "max equals the Krasner radius " + rat_to_string(krasner);
        } else if (*dF == 2) {
            const auto delta1 = quadratic_best_approx_value(F, p);
            if (!delta1) return fail("condition (ii)", "discriminant is a square: F reducible");
            if (*delta1 == d) {
                cond2 = OracleVerdict::True;
                cond2_detail = "exact quadratic bound sup = " + rat_to_string(*delta1);
            } else {
                cond2 = OracleVerdict::False;
                cond2_detail = "a degree-1 approximant attains " + rat_to_string(*delta1) + " > " +
                               rat_to_string(d);
            }
        } else {
            cond2_detail = "catalog max " + rat_to_string(d) + " below the Krasner radius " +
                           rat_to_string(krasner) + "; catalog cannot witness the sup";
        }
    }
    rep.checks.push_back({"condition (ii)", cond2, cond2_detail});
    if (cond2 == OracleVerdict::False) {
        rep.verdict = OracleVerdict::False;
        return rep;
    }

    // condition (iii): every eta of degree < deg Q stays strictly farther
    OracleVerdict cond3 = OracleVerdict::Inconclusive;
    std::string cond3_detail;
    if (*dQ == 1) {
        cond3 = OracleVerdict::True;
        cond3_detail = "vacuous: no elements of degree < 1";
    } else {
        for (const Poly& g : catalog) {
            const auto dg = g.degree();
            if (!dg || *dg < 1 || *dg >= *dQ) continue;
            const PairMax m = pair_max(Q, g, p);
            if (m.shared_root)
                return fail("condition (iii)",
                            "Q shares a root with " + g.to_string() + "; Q is reducible");
            if (*m.value >= d) {
                cond3 = OracleVerdict::False;
                cond3_detail = "eta from " + g.to_string() + " has v(alpha-eta) = " +
                               rat_to_string(*m.value) + " >= " + rat_to_string(d);
                break;
            }
        }
        if (cond3 != OracleVerdict::False) {
            const PairMax conjq = pair_max(Q, Q, p);
            if (d > *conjq.value) {
                cond3 = OracleVerdict::True;
                cond3_detail = "v(theta-alpha) exceeds Q's Krasner radius " +
                               rat_to_string(*conjq.value);
            } else if (*dQ == 2) {
                const auto delta1q = quadratic_best_approx_value(Q, p);
                if (!delta1q) return fail("condition (iii)", "Q's discriminant is a square: Q reducible");
                if (*delta1q >= d) {
                    cond3 = OracleVerdict::False;
                    cond3_detail = "a degree-1 eta attains " + rat_to_string(*delta1q) +
                                   " >= " + rat_to_string(d);
                } else {
                    cond3 = OracleVerdict::True;
                    cond3_detail = "exact quadratic bound " + rat_to_string(*delta1q) + " < " +
                                   rat_to_string(d);
                }
            } else {
                cond3_detail = "catalog cannot bound approximants of degree < deg Q";
            }
        }
    }
    rep.checks.push_back({"condition (iii)", cond3, cond3_detail});
    if (cond3 == OracleVerdict::False) {
        rep.verdict = OracleVerdict::False;
        return rep;
    }

    if (cond2 == OracleVerdict::True && cond3 == OracleVerdict::True)
        rep.verdict = OracleVerdict::True;
    else
        rep.verdict = OracleVerdict::Inconclusive;
    return rep;
}

ExtValue optimizing_value_oracle(const Poly& top_key, const BigRat& gamma_top, const Poly& f,
                                 std::int64_t p) {
    const auto dq = top_key.degree(), df = f.degree();
    if (!dq || *dq < 1 || !top_key.is_monic())
        throw std::domain_error("optimizing_value_oracle: monic top key required");
    if (!df || *df < 1) throw std::domain_error("optimizing_value_oracle: deg f >= 1 required");
    if (!is_squarefree(top_key))
        throw std::domain_error("optimizing_value_oracle: top key must be squarefree");

    const long n = static_cast<long>(*dq);
    BigRat delta_top;
    if (n == 1) {
        delta_top = gamma_top;
    } else {
        const SlopeMultiset conj = root_difference_valuations(top_key, top_key, p);
        if (conj.zero_roots != n)
            throw internal_error("optimizing_value_oracle: unexpected diagonal count");
        // one row of the conjugate-difference matrix; all rows share the multiset
        std::vector<BigRat> row;
        for (const auto& [v, m] : conj.values) {
            if (m % n != 0) throw internal_error("optimizing_value_oracle: row multiset mismatch");
            for (long i = 0; i < m / n; ++i) row.push_back(v);
        }
        // solve delta + sum min(delta, d_k) = gamma_top (strictly increasing in delta)
        std::sort(row.begin(), row.end());
        std::optional<BigRat> solved;
        BigRat prefix(0);
        for (size_t j = 0; j <= row.size(); ++j) {
            const BigRat cand = (gamma_top - prefix) / BigRat(n - static_cast<long>(j));
            const bool lower_ok = j == 0 || row[j - 1] <= cand;
            const bool upper_ok = j == row.size() || cand <= row[j];
            if (lower_ok && upper_ok) {
                solved = cand;
                break;
            }
            if (j < row.size()) prefix += row[j];
        }
        if (!solved) throw internal_error("optimizing_value_oracle: no solution for delta");
        delta_top = *solved;
    }

    const Poly R = resultant_in_shift(top_key, f);
    const SlopeMultiset diffs = newton_polygon(R, p);
    if (diffs.zero_roots > 0) return ExtValue(delta_top); // f shares a root with the key
    const BigRat best = *diffs.max_value();
    return ExtValue(best < delta_top ? best : delta_top);
}

AxiomReport check_valuation_axioms(const std::function<ExtValue(const Poly&)>& value_of,
                                   const std::vector<std::pair<Poly, Poly>>& samples) {
    AxiomReport rep;
    for (const auto& [f, g] : samples) {
        ++rep.pairs_checked;
        const ExtValue vf = value_of(f), vg = value_of(g);
        const ExtValue vprod = value_of(f * g);
        if (!(vprod == vf + vg))
            rep.violations.push_back({f, g,
                                      "V(fg) = " + vprod.to_string() + " but V(f)+V(g) = " +
                                          (vf + vg).to_string()});
        const ExtValue vsum = value_of(f + g);
        if (vsum < min(vf, vg))
            rep.violations.push_back({f, g,
                                      "V(f+g) = " + vsum.to_string() + " below min(V(f),V(g)) = " +
                                          min(vf, vg).to_string()});
    }
    return rep;
}

MonicEnumerator::MonicEnumerator(long degree, long height, std::int64_t p, long p_power_cap)
    : degree_(degree) {
    if (degree < 1) throw std::domain_error("enumerate_monic: degree >= 1 required");
    if (height < 0 || p_power_cap < 0)
        throw std::domain_error("enumerate_monic: height and p-power cap must be >= 0");
    if (!is_prime(p)) throw std::domain_error("enumerate_monic: p must be prime");
    std::set<BigRat> vals;
    for (long c = -height; c <= height; ++c)
        for (long j = -p_power_cap; j <= p_power_cap; ++j) vals.insert(BigRat(c) * pow_rat(p, j));
    pool_.assign(vals.begin(), vals.end());
    reset();
}

void MonicEnumerator::reset() {
    odometer_.assign(static_cast<size_t>(degree_), 0);
    done_ = false;
}

BigInt MonicEnumerator::count() const {
    BigInt c = 1;
    for (long i = 0; i < degree_; ++i) c *= BigInt(pool_.size());
    return c;
}

std::optional<Poly> MonicEnumerator::next() {
    if (done_) return std::nullopt;
    std::vector<BigRat> coeffs(static_cast<size_t>(degree_) + 1, BigRat(0));
    // odometer_[k] indexes the coefficient of X^{degree-1-k}: the high
    // coefficient is most significant, the constant term cycles fastest
    for (long k = 0; k < degree_; ++k)
        coeffs[static_cast<size_t>(degree_ - 1 - k)] = pool_[odometer_[static_cast<size_t>(k)]];
    coeffs[static_cast<size_t>(degree_)] = 1;
    Poly out{std::move(coeffs)};
    size_t k = odometer_.size();
    while (k > 0) {
        if (++odometer_[k - 1] < pool_.size()) break;
        odometer_[--k] = 0;
    }
    if (k == 0) done_ = true;
    return out;
}

std::vector<Poly> enumerate_monic(long degree, long height, std::int64_t p, long p_power_cap) {
    MonicEnumerator en(degree, height, p, p_power_cap);
    std::vector<Poly> out;
    while (auto f = en.next()) out.push_back(std::move(*f));
    return out;
}

std::vector<Poly> standard_catalog(long max_degree, long height, std::int64_t p, long p_power_cap) {
    std::vector<Poly> out;
    for (long d = 1; d <= max_degree; ++d)
        for (auto& f : enumerate_monic(d, height, p, p_power_cap)) out.push_back(std::move(f));
    return out;
}

} // namespace qpxval
