#include "qpxval/frame.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "qpxval/errors.hpp"

namespace qpxval {

ResidualPoly::ResidualPoly(ResidueField field, std::vector<ResidueElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.field() != field_) throw internal_error("residual coefficient from wrong field");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ResidueElem ResidualPoly::coeff(size_t i) const {
    return i < c_.size() ? c_[i] : ResidueElem::zero(field_);
}

size_t ResidualPoly::degree() const {
    if (c_.empty()) throw std::domain_error("degree of zero residual polynomial");
    return c_.size() - 1;
}

bool ResidualPoly::is_monic() const {
    return !c_.empty() && c_.back() == ResidueElem::one(field_);
}

bool ResidualPoly::is_Y() const {
    return c_.size() == 2 && c_[0].is_zero() && c_[1] == ResidueElem::one(field_);
}

std::string ResidualPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        const ResidueElem& c = coeff(i);
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        const bool scalar = c.coeffs().size() <= 1;
        const bool is_one = c == ResidueElem::one(field_);
        if (i == 0) {
            s += scalar ? c.to_string() : "(" + c.to_string() + ")";
        } else {
            if (!is_one) s += (scalar ? c.to_string() : "(" + c.to_string() + ")") + "*";
            s += (i == 1) ? "Y" : "Y^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

ResidualPoly ResidualPoly::from_string(const ResidueField& f, const std::string& s) {
    std::vector<ResidueElem> acc;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto at_digit = [&] { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        bool negate = false;
        if (s[i] == '+' || s[i] == '-') {
            negate = s[i] == '-';
            ++i;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in '" + s + "'");
        }
        first = false;
        skip_ws();
        ResidueElem coeff = ResidueElem::one(f);
        bool have_coeff = false;
        if (i < s.size() && s[i] == '(') {
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw parse_error("unbalanced '(' in '" + s + "'");
            coeff = ResidueElem::from_string(f, s.substr(i + 1, close - i - 1));
            i = close + 1;
            have_coeff = true;
        } else if (at_digit() || (i < s.size() && s[i] == 't')) {
            size_t start = i;
            while (i < s.size() && s[i] != '*' && s[i] != '+' && s[i] != '-' && s[i] != 'Y')
                ++i;
            coeff = ResidueElem::from_string(f, s.substr(start, i - start));
            have_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        size_t exp = 0;
        if (i < s.size() && s[i] == 'Y') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t e = 0;
                if (!at_digit()) throw parse_error("bad exponent in '" + s + "'");
                while (at_digit()) e = e * 10 + static_cast<size_t>(s[i++] - '0');
                exp = e;
            }
        } else if (!have_coeff) {
            throw parse_error("expected term in '" + s + "'");
        }
        if (acc.size() <= exp) acc.resize(exp + 1, ResidueElem::zero(f));
        acc[exp] = negate ? acc[exp] - coeff : acc[exp] + coeff;
        skip_ws();
    }
    if (first) throw parse_error("empty residual polynomial");
    return ResidualPoly(f, std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const ResidualPoly& g) { return os << g.to_string(); }

namespace {

struct MonomialTerm {
    BigRat r;
    std::vector<long> exps; // exponent of q_l = Q_l(alpha) per level
};

} // namespace

// Residue machinery shared by all frames of one chain. Levels are built
// bottom-up; building level i requires the keys at levels 1..i to be
// lifting-structured over their predecessors (residual polynomials exist,
// are not Y, and only the level-0 one may generate a residue extension).
class ChainTower {
public:
    struct LevelData {
        ValueGroup group{BigInt(1)};
        long e = 1;
        long a = 0;          // h = p^a * prod Q_j^{b[j]}
        std::vector<long> b; // one exponent per strictly earlier level
        Poly h;
    };

    ChainTower(ValuationChain W, size_t level)
        : chain_(std::move(W)),
          level_(level),
          fp_(ResidueField::prime_field(chain_.p())),
          ext_(ResidueField::prime_field(chain_.p())) {
        for (size_t l = 0; l <= level_; ++l) build_level(l);
        for (size_t l = 0; l < level_; ++l) build_residual_link(l);
    }

    const ValuationChain& chain() const { return chain_; }
    size_t level() const { return level_; }
    const LevelData& at(size_t l) const { return levels_.at(l); }
    const ResidueField& field_at(size_t l) const { return l == 0 ? fp_ : ext_; }
    std::int64_t p() const { return chain_.p(); }
    const BigRat& gamma(size_t l) const { return chain_.level(l).value; }
    size_t n(size_t l) const { return *chain_.level(l).key.degree(); }

    ResidueElem residue_quotient(size_t i, const Poly& g, long k) const;
    ResidualPoly residual_at(size_t i, const Poly& F) const;
    Poly preimage(const ResidueElem& c) const;

private:
    void build_level(size_t l);
    void build_residual_link(size_t l);
    std::vector<MonomialTerm> expand_monomials(const Poly& g, size_t nlevels) const;

    ValuationChain chain_;
    size_t level_;
    std::vector<LevelData> levels_;
    ResidueField fp_;
    ResidueField ext_;           // residue field for levels >= 1
    std::vector<ResidueElem> u_; // residue of q_l^{e_l}/h_l, in ext_
};

void ChainTower::build_level(size_t l) {
    LevelData ld;
    ld.group = ValueGroup::integers();
    for (size_t j = 0; j < l; ++j) ld.group = ld.group.join(gamma(j));
    ld.e = least_multiplier(ExtValue(gamma(l)), ld.group);
    const BigRat target = BigRat(ld.e) * gamma(l);
    const size_t nl = n(l);

    // canonical h: the minimal-degree, then minimal-p-power monomial
    // p^a * prod Q_j^{b_j} of degree < n with value e*gamma
    struct Cand {
        size_t deg;
        long a;
        std::vector<long> b;
    };
    std::optional<Cand> best;
    auto better = [](const Cand& x, const Cand& y) {
        if (x.deg != y.deg) return x.deg < y.deg;
        const long ax = std::abs(x.a), ay = std::abs(y.a);
        if (ax != ay) return ax < ay;
        if ((x.a < 0) != (y.a < 0)) return x.a > y.a; // prefer nonnegative power
        return x.b < y.b;
    };
    std::vector<long> b(l, 0);
    for (;;) {
        size_t deg = 0;
        BigRat val(0);
        for (size_t j = 0; j < l; ++j) {
            deg += static_cast<size_t>(b[j]) * n(j);
            val += BigRat(b[j]) * gamma(j);
        }
        if (deg < nl) {
            const BigRat a = target - val;
            if (denominator(a) == 1) {
                Cand c{deg, numerator(a).convert_to<long>(), b};
                if (!best || better(c, *best)) best = std::move(c);
            }
        }
        // odometer over b with per-digit caps
        size_t j = 0;
        while (j < l) {
            ++b[j];
            if (static_cast<size_t>(b[j]) * n(j) <= nl - 1) break;
            b[j++] = 0;
        }
        if (j == l) break;
    }
    if (!best)
        throw internal_error("no h of degree < n with value e*gamma exists at level " +
                             std::to_string(l));
    ld.a = best->a;
    ld.b = best->b;
    Poly h = Poly::constant(pow_rat(p(), ld.a));
    for (size_t j = 0; j < l; ++j)
        if (ld.b[j] > 0) h = h * chain_.level(j).key.pow(ld.b[j]);
    ld.h = std::move(h);
    if (!(w_eval_prefix(chain_, l, ld.h) == ExtValue(target)))
        throw unsupported_scope("chain is not multiplicative on key monomials at level " +
                                std::to_string(l) + "; no valid frame exists");
    levels_.push_back(std::move(ld));
}

void ChainTower::build_residual_link(size_t l) {
    const ResidualPoly G = residual_at(l, chain_.level(l + 1).key);
    if (G.is_Y())
        throw unsupported_scope("key polynomial at level " + std::to_string(l + 1) +
                                " reduces to Y; it is not a lifting over level " +
                                std::to_string(l));
    if (l == 0) {
        if (G.degree() >= 2) {
            fp::FpPoly M;
            for (const auto& c : G.coeffs()) M.push_back(c.is_zero() ? 0 : c.coeffs()[0]);
            try {
                ext_ = ResidueField::extension(p(), std::move(M));
            } catch (const std::domain_error& e) {
                throw unsupported_scope(std::string("level-0 residual modulus rejected: ") +
                                        e.what());
            }
            u_.push_back(ResidueElem::generator(ext_));
        } else {
            u_.push_back(-ResidueElem(ext_, G.coeff(0).coeffs()));
        }
    } else {
        if (G.degree() != 1)
            throw unsupported_scope("residue extension above level 0 (tower deeper than one "
                                    "extension step) is out of scope");
        u_.push_back(-G.coeff(0));
    }
}

std::vector<MonomialTerm> ChainTower::expand_monomials(const Poly& g, size_t nlevels) const {
    std::vector<MonomialTerm> out;
    if (g.is_zero()) return out;
    if (nlevels == 0) {
        if (!g.is_constant()) throw internal_error("expand_monomials: nonconstant at level 0");
        out.push_back({g.coeff(0), {}});
        return out;
    }
    if (nlevels == 1) {
        const BigRat center = -chain_.level(0).key.coeff(0);
        const auto coeffs = g.taylor_at(center);
        for (size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0) out.push_back({coeffs[j], {static_cast<long>(j)}});
        return out;
    }
    const QExpansion ex = q_expansion(g, chain_.level(nlevels - 1).key);
    for (size_t j = 0; j < ex.coeffs().size(); ++j) {
        for (MonomialTerm& t : expand_monomials(ex.coeff(j), nlevels - 1)) {
            t.exps.resize(nlevels, 0);
            t.exps[nlevels - 1] = static_cast<long>(j);
            out.push_back(std::move(t));
        }
    }
    return out;
}

ResidueElem ChainTower::residue_quotient(size_t i, const Poly& g, long k) const {
    const ResidueField& field = field_at(i);
    const LevelData& ld = levels_.at(i);
    ResidueElem acc = ResidueElem::zero(field);
    const BigRat hval = BigRat(k) * BigRat(ld.e) * gamma(i); // = k * w(h_i)

    for (const MonomialTerm& t : expand_monomials(g, i)) {
        const long vr = int_valuation(numerator(t.r), p()) - int_valuation(denominator(t.r), p());
        BigRat tau = BigRat(vr) - hval;
        for (size_t l = 0; l < i; ++l) tau += BigRat(t.exps[l]) * gamma(l);
        if (tau > 0) continue;
        if (tau < 0) throw internal_error("residue_quotient: term below the stated value");

        const BigRat unit = t.r / pow_rat(p(), vr);
        ResidueElem factor = ResidueElem(field, residue_of_rational(unit, p()).coeffs());
        long A = vr - k * ld.a;
        std::vector<long> B(i, 0);
        for (size_t l = 0; l < i; ++l) B[l] = t.exps[l] - k * ld.b[l];
        for (size_t l = i; l-- > 0;) {
            const LevelData& low = levels_.at(l);
            if (B[l] % low.e != 0)
                throw internal_error("residue_quotient: exponent not reducible at level " +
                                     std::to_string(l));
            const long s = B[l] / low.e;
            if (s != 0) {
                factor = factor * ResidueElem(field, u_.at(l).coeffs()).pow(s);
                A += s * low.a;
                for (size_t j = 0; j < l; ++j) B[j] += s * low.b[j];
            }
        }
        if (A != 0) throw internal_error("residue_quotient: leftover p-exponent");
        acc = acc + factor;
    }
    return acc;
}

ResidualPoly ChainTower::residual_at(size_t i, const Poly& F) const {
    if (!F.is_monic()) throw std::domain_error("residual_polynomial: F must be monic");
    const LevelData& ld = levels_.at(i);
    const size_t en = static_cast<size_t>(ld.e) * n(i);
    const auto degF = F.degree();
    if (!degF || *degF == 0 || *degF % en != 0)
        throw std::domain_error("residual_polynomial: deg F = " +
                                std::to_string(degF ? *degF : 0) +
                                " is not a positive multiple of e*n = " + std::to_string(en));
    const long m = static_cast<long>(*degF / en);
    const BigRat expected = BigRat(m) * BigRat(ld.e) * gamma(i);
    const ExtValue wF = w_eval_prefix(chain_, i, F);
    if (!(wF == ExtValue(expected)))
        throw std::domain_error("residual_polynomial: truncation value mismatch, w_Q(F) = " +
                                wF.to_string() + " but e*m*gamma = " + rat_to_string(expected));

    const ResidueField& field = field_at(i);
    const QExpansion ex = q_expansion(F, chain_.level(i).key);
    std::vector<ResidueElem> g(static_cast<size_t>(m) + 1, ResidueElem::zero(field));
    g[static_cast<size_t>(m)] = ResidueElem::one(field);
    if (!(ex.coeff(static_cast<size_t>(m) * ld.e) == Poly::constant(1)))
        throw internal_error("residual_polynomial: leading expansion coefficient is not 1");

    for (size_t j = 0; j + 1 <= static_cast<size_t>(m) * ld.e; ++j) {
        const Poly& fj = ex.coeff(j);
        if (fj.is_zero()) continue;
        BigRat val = w_eval_prefix(chain_, i, fj).finite() + BigRat(j) * gamma(i);
        if (val != expected) continue;
        if (j % static_cast<size_t>(ld.e) != 0)
            throw unsupported_scope("residual_polynomial: minimal term at an index not divisible "
                                    "by e; the chain violates the representation theorem");
        const size_t k = j / static_cast<size_t>(ld.e);
        const ResidueElem c = residue_quotient(i, fj, m - static_cast<long>(k));
        if (c.is_zero())
            throw unsupported_scope("residual_polynomial: vanishing residue at a minimal term; "
                                    "the chain violates the representation theorem");
        g[k] = c;
    }
    return ResidualPoly(field, std::move(g));
}

Poly ChainTower::preimage(const ResidueElem& c) const {
    if (c.is_zero()) return Poly::zero();
    if (c.coeffs().size() <= 1) return Poly::constant(BigRat(c.coeffs()[0]));
    // t is the residue of Q_0^{e_0}/p^{a_0}
    const LevelData& l0 = levels_.at(0);
    Poly out;
    for (size_t s = 0; s < c.coeffs().size(); ++s) {
        if (c.coeffs()[s] == 0) continue;
        Poly term = Poly::constant(BigRat(c.coeffs()[s]) * pow_rat(p(), -l0.a * static_cast<long>(s)));
        out = out + term * chain_.level(0).key.pow(l0.e * static_cast<long>(s));
    }
    return out;
}

RTFrame::RTFrame(std::shared_ptr<const ChainTower> tower, size_t level)
    : tower_(std::move(tower)), level_(level) {}

const ValuationChain& RTFrame::chain() const { return tower_->chain(); }
const Poly& RTFrame::q() const { return tower_->chain().level(level_).key; }
size_t RTFrame::n() const { return *q().degree(); }
const BigRat& RTFrame::gamma() const { return tower_->chain().level(level_).value; }
const ValueGroup& RTFrame::group() const { return tower_->at(level_).group; }
long RTFrame::e() const { return tower_->at(level_).e; }
const Poly& RTFrame::h() const { return tower_->at(level_).h; }
const ResidueField& RTFrame::residue_field() const { return tower_->field_at(level_); }

ValueGroup value_group_below(const ValuationChain& W, const Poly& Q) {
    const auto lvl = W.level_of(Q);
    if (!lvl) throw std::domain_error("value_group_below: Q is not a chain member");
    ValueGroup g = ValueGroup::integers();
    for (size_t j = 0; j < *lvl; ++j) g = g.join(W.level(j).value);
    return g;
}

RTFrame build_frame(const ValuationChain& W, const Poly& Q) {
    const auto lvl = W.level_of(Q);
    if (!lvl) throw std::domain_error("build_frame: Q is not a chain member");
    auto tower = std::make_shared<const ChainTower>(W, *lvl);
    return RTFrame(std::move(tower), *lvl);
}

ResidualPoly residual_polynomial(const RTFrame& fr, const Poly& F) {
    return fr.tower().residual_at(fr.level(), F);
}

Poly lift(const RTFrame& fr, const ResidualPoly& G) {
    if (G.field() != fr.residue_field())
        throw std::domain_error("lift: G is not over the frame's residue field");
    if (G.is_zero() || !G.is_monic()) throw std::domain_error("lift: G must be monic");
    const size_t m = G.degree();
    if (m < 1) throw std::domain_error("lift: G must have degree >= 1");
    if (G.is_Y()) throw std::domain_error("lift: G = Y is excluded");

    const ChainTower& tw = fr.tower();
    const Poly& Q = fr.q();
    const long e = fr.e();
    Poly F = Q.pow(e * static_cast<long>(m));
    for (size_t k = 1; k <= m; ++k) {
        const ResidueElem& c = G.coeff(m - k);
        if (c.is_zero()) continue;
        F = F + tw.preimage(c) * fr.h().pow(static_cast<long>(k)) *
                    Q.pow(e * static_cast<long>(m - k));
    }
    if (!(tw.residual_at(fr.level(), F) == G))
        throw internal_error("lift: round trip through residual_polynomial failed");
    return F;
}

bool is_trivial_lifting(const RTFrame& fr, const Poly& F) {
    residual_polynomial(fr, F); // enforce the residual preconditions
    return *F.degree() == fr.n();
}

} // namespace qpxval
