#include "qpxval/valchain.hpp"

#include "qpxval/errors.hpp"

namespace qpxval {

namespace {

// value of f under levels[0..level] of a (possibly still unvalidated) chain;
// validation only ever evaluates against already-checked prefixes
ExtValue eval_levels(std::int64_t p, const std::vector<ChainLevel>& levels, size_t level,
                     const Poly& f) {
    if (f.is_zero()) return ExtValue::infinity();
    const ChainLevel& lv = levels[level];
    if (level == 0) {
        const BigRat center = -lv.key.coeff(0); // key = X - center
        const auto coeffs = f.taylor_at(center);
        ExtValue best = ExtValue::infinity();
        for (size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) continue;
            ExtValue v = base_valuation(coeffs[j], p) + ExtValue(BigRat(j) * lv.value);
            best = min(best, v);
        }
        return best;
    }
    const QExpansion ex = q_expansion(f, lv.key);
    ExtValue best = ExtValue::infinity();
    for (size_t j = 0; j < ex.coeffs().size(); ++j) {
        if (ex.coeff(j).is_zero()) continue;
        ExtValue v = eval_levels(p, levels, level - 1, ex.coeff(j)) + ExtValue(BigRat(j) * lv.value);
        best = min(best, v);
    }
    return best;
}

} // namespace

std::optional<ChainViolation> chain_validate(const ChainSpecData& spec) {
    if (!is_prime(spec.p)) return ChainViolation{"p is not prime", 0};
    if (spec.levels.empty()) return ChainViolation{"chain has no levels", 0};
    for (size_t i = 0; i < spec.levels.size(); ++i) {
        const Poly& q = spec.levels[i].key;
        const auto deg = q.degree();
        if (!deg || *deg < 1)
            return ChainViolation{"key polynomial at level " + std::to_string(i) + " is constant", i};
        if (!q.is_monic())
            return ChainViolation{"key polynomial at level " + std::to_string(i) + " is not monic", i};
        if (i == 0 && *deg != 1)
            return ChainViolation{"level-0 key polynomial must be linear", 0};
        if (i > 0 && *deg <= *spec.levels[i - 1].key.degree())
            return ChainViolation{"degrees must strictly increase at level " + std::to_string(i), i};
    }
    for (size_t i = 1; i < spec.levels.size(); ++i) {
        const ExtValue prev = eval_levels(spec.p, spec.levels, i - 1, spec.levels[i].key);
        if (!(ExtValue(spec.levels[i].value) > prev))
            return ChainViolation{"value growth: prefix value of " + spec.levels[i].key.to_string() +
                                      " is " + prev.to_string() + ", not < " +
                                      rat_to_string(spec.levels[i].value),
                                  i};
    }
    // assigned values must themselves increase; value growth alone permits
    // w(Q_i) < w(Q_{i-1}) when values are negative
    for (size_t i = 1; i < spec.levels.size(); ++i) {
        if (!(spec.levels[i].value > spec.levels[i - 1].value))
            return ChainViolation{"value monotonicity: w(" + spec.levels[i].key.to_string() +
                                      ") = " + rat_to_string(spec.levels[i].value) +
                                      " does not exceed the previous level's " +
                                      rat_to_string(spec.levels[i - 1].value),
                                  i};
    }
    return std::nullopt;
}

ValuationChain ValuationChain::from_spec(ChainSpecData spec) {
    if (auto bad = chain_validate(spec))
        throw std::domain_error("invalid chain: " + bad->message);
    return ValuationChain(spec.p, std::move(spec.levels));
}

std::optional<size_t> ValuationChain::level_of(const Poly& q) const {
    for (size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].key == q) return i;
    return std::nullopt;
}

ValuationChain ValuationChain::prefix(size_t level) const {
    if (level >= levels_.size()) throw internal_error("prefix level out of range");
    return ValuationChain(p_, {levels_.begin(), levels_.begin() + static_cast<long>(level) + 1});
}

ExtValue w_eval(const ValuationChain& W, const Poly& f) {
    return eval_levels(W.p(), W.levels(), W.top_level(), f);
}

ExtValue w_eval_prefix(const ValuationChain& W, size_t level, const Poly& f) {
    if (level > W.top_level()) throw internal_error("w_eval_prefix: level out of range");
    return eval_levels(W.p(), W.levels(), level, f);
}

ExtValue epsilon(const ValuationChain& W, const Poly& f) {
    const auto deg = f.degree();
    if (!deg || *deg < 1)
        throw std::domain_error("epsilon: polynomial must have degree >= 1");
    const ExtValue wf = w_eval(W, f);
    std::optional<BigRat> best;
    for (long b = 1; b <= static_cast<long>(*deg); ++b) {
        const Poly db = hasse_derivative(f, b);
        if (db.is_zero()) continue; // cannot achieve the max
        const BigRat cand = (wf.finite() - w_eval(W, db).finite()) / b;
        if (!best || cand > *best) best = cand;
    }
    if (!best) throw internal_error("epsilon: no nonzero derivative found");
    return ExtValue(*best);
}

ExtValue delta_opt(const ValuationChain& W, const Poly& f) {
    if (!f.is_monic()) throw std::domain_error("delta_opt: polynomial must be monic");
    return epsilon(W, f);
}

TruncationHandle::TruncationHandle(ValuationChain chain, Poly q)
    : chain_(std::move(chain)), q_(std::move(q)) {
    const auto deg = q_.degree();
    if (!deg || *deg < 1 || !q_.is_monic())
        throw std::domain_error("truncation: Q must be monic of degree >= 1");
    wq_ = w_eval(chain_, q_);
}

ExtValue truncation_eval(const TruncationHandle& T, const Poly& f) {
    if (f.is_zero()) return ExtValue::infinity();
    const ExtValue& wq = T.wq();
    const QExpansion ex = q_expansion(f, T.q());
    ExtValue best = ExtValue::infinity();
    for (size_t i = 0; i < ex.coeffs().size(); ++i) {
        if (ex.coeff(i).is_zero()) continue;
        ExtValue v = w_eval(T.chain(), ex.coeff(i));
        if (i > 0) v = v + static_cast<long>(i) * wq;
        best = min(best, v);
    }
    return best;
}

SupportResult support_and_top(const TruncationHandle& T, const Poly& f) {
    if (f.is_zero()) throw std::domain_error("support: polynomial must be nonzero");
    const ExtValue& wq = T.wq();
    const QExpansion ex = q_expansion(f, T.q());
    std::vector<ExtValue> vals;
    ExtValue best = ExtValue::infinity();
    for (size_t i = 0; i < ex.coeffs().size(); ++i) {
        ExtValue v = ExtValue::infinity();
        if (!ex.coeff(i).is_zero()) {
            v = w_eval(T.chain(), ex.coeff(i));
            if (i > 0) v = v + static_cast<long>(i) * wq;
        }
        vals.push_back(v);
        best = min(best, v);
    }
    SupportResult out;
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i] == best) out.support.push_back(i);
    out.top = out.support.back();
    return out;
}

ValuationChain augment(const ValuationChain& W, Poly q, BigRat gamma) {
    const auto deg = q.degree();
    if (!deg || !q.is_monic())
        throw std::domain_error("augment: key polynomial must be monic and nonconstant");
    if (*deg <= *W.top().key.degree())
        throw std::domain_error("augment: degree must exceed the top key polynomial's");
    if (!(ExtValue(gamma) > w_eval(W, q)))
        throw std::domain_error("augment: value must exceed w(" + q.to_string() + ") = " +
                                w_eval(W, q).to_string());
    ChainSpecData spec = W.to_spec();
    spec.levels.push_back({std::move(q), std::move(gamma)});
    return ValuationChain::from_spec(std::move(spec));
}

} // namespace qpxval
