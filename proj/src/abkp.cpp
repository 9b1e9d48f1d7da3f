#include "qpxval/abkp.hpp"

#include "qpxval/errors.hpp"
#include "qpxval/oracle.hpp"

namespace qpxval {

std::optional<size_t> alpha_invariant(const ValuationChain& W, const Poly& Q) {
    const auto lvl = W.level_of(Q);
    if (!lvl)
        throw std::domain_error(
            "alpha_invariant: unknown for truncators that are not chain members");
    if (*lvl == W.top_level()) return std::nullopt; // w_Q = w
    return *W.level(*lvl + 1).key.degree();
}

PsiVerdict psi_member(const ValuationChain& W, const Poly& Q, const Poly& F) {
    if (!F.is_monic()) throw std::domain_error("psi_member: F must be monic");
    const auto alpha = alpha_invariant(W, Q);
    PsiVerdict v;
    v.wq_value = truncation_eval({W, Q}, F);
    v.w_value = w_eval(W, F);
    const bool discrepancy = v.wq_value < v.w_value;
    v.member = discrepancy && alpha.has_value() && *F.degree() == *alpha;
    if (discrepancy && alpha.has_value() && *F.degree() > *alpha) v.degree_witness = alpha;
    return v;
}

std::optional<Poly> falsify_abkp(const ValuationChain& W, const Poly& Q,
                                 const FalsifyBounds& bounds) {
    const auto dq = Q.degree();
    if (!dq || *dq < 1 || !Q.is_monic())
        throw std::domain_error("falsify_abkp: Q must be monic of degree >= 1");
    const ExtValue eq = epsilon(W, Q);
    long dcap = static_cast<long>(*dq) - 1;
    if (bounds.max_degree > 0 && bounds.max_degree < dcap) dcap = bounds.max_degree;
    for (long d = 1; d <= dcap; ++d) {
        MonicEnumerator en(d, bounds.height, W.p(), bounds.p_power_cap);
        while (auto f = en.next()) {
            if (epsilon(W, *f) >= eq) return f;
        }
    }
    return std::nullopt;
}

bool is_distinguished_pair(const ValuationChain& W, const Poly& F, const Poly& Q) {
    if (!F.is_monic() || F.is_constant())
        throw std::domain_error("is_distinguished_pair: F must be monic of degree >= 1");
    if (!W.level_of(Q))
        throw std::domain_error("is_distinguished_pair: Q must be a chain member");
    return psi_member(W, Q, F).member && *F.degree() > *Q.degree();
}

bool ChainCertificate::all_distinguished() const {
    for (const auto& l : links)
        if (!l.distinguished) return false;
    return true;
}

ChainCertificate saturated_chain(const ValuationChain& W) {
    if (W.top_level() < 1)
        throw std::domain_error("saturated_chain: a single-level chain has no pair");
    ChainCertificate cert;
    for (size_t i = 0; i <= W.top_level(); ++i)
        cert.entries.push_back(
            {W.level(i).key, W.level(i).value, epsilon(W, W.level(i).key).finite()});
    for (size_t i = W.top_level(); i >= 1; --i)
        cert.links.push_back({W.level(i).key, W.level(i - 1).key,
                              is_distinguished_pair(W, W.level(i).key, W.level(i - 1).key)});
    return cert;
}

} // namespace qpxval
