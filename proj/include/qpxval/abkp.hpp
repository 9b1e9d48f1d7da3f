#pragma once

// psi(Q)-membership, the alpha invariant, abstract-key-polynomial
// falsification, distinguished pairs and saturated distinguished chains.

#include <optional>
#include <vector>

#include "qpxval/valchain.hpp"

namespace qpxval {

struct PsiVerdict {
    bool member = false;
    ExtValue wq_value;
    ExtValue w_value;
    // a smaller degree at which a discrepancy already exists, when F's degree
    // overshoots alpha(Q)
    std::optional<size_t> degree_witness;
};

// alpha(Q) = min deg f with w_Q(f) < w(f), read structurally off the chain:
// the next level's degree, or nullopt (= +inf, w_Q = w) for the top element.
// Non-members raise a domain error (alpha is unknown for them).
std::optional<size_t> alpha_invariant(const ValuationChain& W, const Poly& Q);

// F monic, w_Q(F) < w(F) and deg F = alpha(Q)
PsiVerdict psi_member(const ValuationChain& W, const Poly& Q, const Poly& F);

struct FalsifyBounds {
    long height = 9;
    long p_power_cap = 1;
    long max_degree = 0; // 0: search every degree below deg Q
};

// Searches monic f with deg f < deg Q over the bounded coefficient pool for a
// witness with epsilon(f) >= epsilon(Q). A witness disproves that Q is an
// abstract key polynomial for w; absence of a witness proves nothing.
std::optional<Poly> falsify_abkp(const ValuationChain& W, const Poly& Q,
                                 const FalsifyBounds& bounds);

// the psi-side criterion: F in psi(Q) and deg F > deg Q. F is expected to be
// an abstract key polynomial for w (chain-constructed or caller-asserted;
// falsify_abkp is the sanity gate).
bool is_distinguished_pair(const ValuationChain& W, const Poly& F, const Poly& Q);

struct ChainCertificateEntry {
    Poly key;
    BigRat value;
    BigRat epsilon;
};

struct ChainLink {
    Poly F, Q;
    bool distinguished = false;
};

struct ChainCertificate {
    std::vector<ChainCertificateEntry> entries; // levels 0..N
    std::vector<ChainLink> links;               // (Q_N, Q_{N-1}), ..., (Q_1, Q_0)

    bool all_distinguished() const;
};

// verifies every adjacent pair of chain keys; N >= 1 required
ChainCertificate saturated_chain(const ValuationChain& W);

} // namespace qpxval
