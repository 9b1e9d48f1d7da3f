#pragma once

// Chain-represented valuations w of Q_p(X): validation, evaluation, the
// epsilon invariant, truncations and augmentation.

#include <cstdint>
#include <optional>
#include <vector>

#include "qpxval/poly.hpp"
#include "qpxval/values.hpp"

namespace qpxval {

struct ChainLevel {
    Poly key;     // monic; degree 1 at level 0, strictly increasing after
    BigRat value; // assigned value gamma_i

    friend bool operator==(const ChainLevel&, const ChainLevel&) = default;
};

// raw, not-yet-validated chain data (JSON-facing)
struct ChainSpecData {
    std::int64_t p = 0;
    std::vector<ChainLevel> levels;
};

struct ChainViolation {
    std::string message;
    size_t level = 0; // index of the offending level
};

// checks all chain invariants; reports the first violated one
std::optional<ChainViolation> chain_validate(const ChainSpecData& spec);

class ValuationChain {
public:
    // throws std::domain_error when chain_validate reports a violation
    static ValuationChain from_spec(ChainSpecData spec);

    std::int64_t p() const { return p_; }
    const std::vector<ChainLevel>& levels() const { return levels_; }
    size_t top_level() const { return levels_.size() - 1; } // N
    const ChainLevel& level(size_t i) const { return levels_.at(i); }
    const ChainLevel& top() const { return levels_.back(); }

    std::optional<size_t> level_of(const Poly& q) const;
    ValuationChain prefix(size_t level) const; // levels 0..level

    ChainSpecData to_spec() const { return {p_, levels_}; }

    friend bool operator==(const ValuationChain&, const ValuationChain&) = default;

private:
    ValuationChain(std::int64_t p, std::vector<ChainLevel> levels)
        : p_(p), levels_(std::move(levels)) {}
    std::int64_t p_;
    std::vector<ChainLevel> levels_;
};

// w(f) under the chain; +inf iff f = 0
ExtValue w_eval(const ValuationChain& W, const Poly& f);

// value under the prefix chain through `level` (w of the truncation w_{Q_level})
ExtValue w_eval_prefix(const ValuationChain& W, size_t level, const Poly& f);

// max over 1 <= b <= deg f of (w(f) - w(d_b f))/b; deg f >= 1 required
ExtValue epsilon(const ValuationChain& W, const Poly& f);

// the optimizing-root value delta(f) = epsilon(f) for monic f
ExtValue delta_opt(const ValuationChain& W, const Poly& f);

// truncation of w at an arbitrary monic Q of degree >= 1; a min-map that is a
// valuation only when Q is an abstract key polynomial for w
class TruncationHandle {
public:
    TruncationHandle(ValuationChain chain, Poly q);
    const ValuationChain& chain() const { return chain_; }
    const Poly& q() const { return q_; }
    const ExtValue& wq() const { return wq_; } // w(Q), fixed at construction

private:
    ValuationChain chain_;
    Poly q_;
    ExtValue wq_;
};

ExtValue truncation_eval(const TruncationHandle& T, const Poly& f);

struct SupportResult {
    std::vector<size_t> support; // S_Q(f), ascending
    size_t top;                  // delta_Q(f) = max S_Q(f)
};

// indices of the Q-expansion achieving the truncation min; f != 0 required
SupportResult support_and_top(const TruncationHandle& T, const Poly& f);

// append (q, gamma); requires deg q > top degree and gamma > w(q)
ValuationChain augment(const ValuationChain& W, Poly q, BigRat gamma);

} // namespace qpxval
