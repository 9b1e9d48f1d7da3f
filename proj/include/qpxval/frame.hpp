#pragma once

// Representation-theorem frames for residually transcendental truncations:
// the data (n, gamma, Gamma_{v1}, e, h, k_{v1}) attached to a chain key
// polynomial, residual polynomials, and the lifting construction.

#include <memory>
#include <string>
#include <vector>

#include "qpxval/valchain.hpp"

namespace qpxval {

// monic polynomial G(Y) over a residue field
class ResidualPoly {
public:
    ResidualPoly(ResidueField field, std::vector<ResidueElem> coeffs);

    const ResidueField& field() const { return field_; }
    const std::vector<ResidueElem>& coeffs() const { return c_; }
    ResidueElem coeff(size_t i) const; // zero beyond the degree
    size_t degree() const;             // nonzero polynomials only
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    bool is_Y() const; // G(Y) = Y exactly

    friend bool operator==(const ResidualPoly&, const ResidualPoly&) = default;

    std::string to_string() const; // e.g. "Y^2+(t+1)*Y+2"
    static ResidualPoly from_string(const ResidueField& f, const std::string& s);

private:
    ResidueField field_;
    std::vector<ResidueElem> c_;
};

std::ostream& operator<<(std::ostream& os, const ResidualPoly& g);

class ChainTower; // internal residue machinery, shared by frames of one chain

// Frame of the truncation w_Q at a chain key polynomial Q:
//   n = deg Q, gamma = w(Q), Gamma_{v1} = value group below Q,
//   e minimal with e*gamma in Gamma_{v1}, h of degree < n with w(h) = e*gamma,
//   and the residue field k_{v1}.
class RTFrame {
public:
    const ValuationChain& chain() const; // prefix chain through the level (= w_Q)
    size_t level() const { return level_; }
    const Poly& q() const;
    size_t n() const;
    const BigRat& gamma() const;
    const ValueGroup& group() const;
    long e() const;
    const Poly& h() const;
    const ResidueField& residue_field() const;

    const ChainTower& tower() const { return *tower_; } // residue machinery

private:
    friend RTFrame build_frame(const ValuationChain&, const Poly&);
    RTFrame(std::shared_ptr<const ChainTower> tower, size_t level);
    std::shared_ptr<const ChainTower> tower_;
    size_t level_;
};

// value group of the restriction v_1: the subgroup of Q generated by 1 and
// the values gamma_j of all levels strictly below Q's
ValueGroup value_group_below(const ValuationChain& W, const Poly& Q);

RTFrame build_frame(const ValuationChain& W, const Poly& Q);

// G(Y) with F/h^m = G(Y) up to higher-value terms; requires deg F = e*m*n
// and w_Q(F) = e*m*gamma
ResidualPoly residual_polynomial(const RTFrame& fr, const Poly& F);

// monic F with deg F = e*m*n, w_Q(F) = e*m*gamma and w_Q-residue of F/h^m
// equal to G; rejects G = Y
Poly lift(const RTFrame& fr, const ResidualPoly& G);

// true iff deg F = n (no value-group or residue extension at this step)
bool is_trivial_lifting(const RTFrame& fr, const Poly& F);

} // namespace qpxval
