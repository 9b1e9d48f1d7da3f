#pragma once

// Exact extended-rational values, value subgroups of Q, and residue-field
// arithmetic over F_p and one-step extensions F_p[t]/(M).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpxval/fp_poly.hpp"

namespace qpxval {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t p);

// v_p(n) for a nonzero integer.
long int_valuation(BigInt n, std::int64_t p);

BigInt pow_int(std::int64_t base, long exp); // exp >= 0
BigRat pow_rat(std::int64_t base, long exp); // any sign of exp

std::string rat_to_string(const BigRat& r);
BigRat rat_from_string(const std::string& s);

std::string t_poly_to_string(const fp::FpPoly& f); // "t^2+1", "2", "0"

// An exact rational value or +inf. +inf absorbs addition and dominates
// comparison; it is the valuation of 0 rather than an error.
class ExtValue {
public:
    ExtValue() : finite_(true), value_(0) {}
    ExtValue(const BigRat& v) : finite_(true), value_(v) {}
    ExtValue(long v) : finite_(true), value_(v) {}
    static ExtValue infinity() {
        ExtValue v;
        v.finite_ = false;
        return v;
    }

    bool is_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }

    // the rational value; +inf has none
    const BigRat& finite() const;

    friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
    friend ExtValue operator*(long k, const ExtValue& a); // k > 0
    friend bool operator==(const ExtValue& a, const ExtValue& b);
    friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);

    friend const ExtValue& min(const ExtValue& a, const ExtValue& b) { return a < b ? a : b; }
    friend const ExtValue& max(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }

    std::string to_string() const;              // "a/b", "a" or "inf"
    static ExtValue from_string(const std::string& s);

private:
    bool finite_;
    BigRat value_;
};

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

// The subgroup (1/d)Z of Q.
class ValueGroup {
public:
    explicit ValueGroup(BigInt d);
    static ValueGroup integers() { return ValueGroup(1); }

    const BigInt& denominator() const { return d_; }
    bool contains(const BigRat& g) const;

    // smallest subgroup (1/d)Z containing this one, 1 and g
    ValueGroup join(const BigRat& g) const;

    friend bool operator==(const ValueGroup&, const ValueGroup&) = default;

private:
    BigInt d_;
};

// v_p on Q, normalized so that v(p) = 1. Returns +inf exactly for r = 0.
ExtValue base_valuation(const BigRat& r, std::int64_t p);

// least e >= 1 with e*gamma in G
long least_multiplier(const ExtValue& gamma, const ValueGroup& G);

// F_p, or F_p[t]/(M) for a monic irreducible M of degree 2..4.
class ResidueField {
public:
    static ResidueField prime_field(std::int64_t p);
    static ResidueField extension(std::int64_t p, fp::FpPoly modulus);

    std::int64_t p() const { return p_; }
    bool is_prime_field() const { return modulus_.empty(); }
    const fp::FpPoly& modulus() const { return modulus_; } // empty for F_p
    size_t ext_degree() const { return modulus_.empty() ? 1 : modulus_.size() - 1; }

    std::string to_string() const; // "F_3" or "F_3[t]/(t^2+1)"

    friend bool operator==(const ResidueField&, const ResidueField&) = default;

private:
    ResidueField(std::int64_t p, fp::FpPoly modulus);
    std::int64_t p_ = 0;
    fp::FpPoly modulus_;
};

// An element of a ResidueField, as a t-polynomial of degree < deg M.
class ResidueElem {
public:
    ResidueElem(ResidueField field, fp::FpPoly coeffs);
    static ResidueElem zero(const ResidueField& f) { return {f, {}}; }
    static ResidueElem one(const ResidueField& f) { return {f, {1}}; }
    static ResidueElem from_int(const ResidueField& f, std::int64_t n);
    static ResidueElem generator(const ResidueField& f); // t; extension fields only

    const ResidueField& field() const { return field_; }
    const fp::FpPoly& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    ResidueElem operator+(const ResidueElem& o) const;
    ResidueElem operator-(const ResidueElem& o) const;
    ResidueElem operator*(const ResidueElem& o) const;
    ResidueElem operator-() const;
    ResidueElem inverse() const; // nonzero only
    ResidueElem pow(long k) const; // negative k inverts

    friend bool operator==(const ResidueElem& a, const ResidueElem& b);

    std::string to_string() const; // "t+2", "2", "0"
    static ResidueElem from_string(const ResidueField& f, const std::string& s);

private:
    ResidueField field_;
    fp::FpPoly coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ResidueElem& e);

// canonical image of r in F_p; requires base_valuation(r, p) >= 0
ResidueElem residue_of_rational(const BigRat& r, std::int64_t p);

} // namespace qpxval
