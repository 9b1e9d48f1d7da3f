#pragma once

// Exact univariate polynomials over Q: arithmetic, Hasse derivatives,
// Q-expansions, resultants, and the text format used by the CLI.

#include <optional>
#include <string>
#include <vector>

#include "qpxval/values.hpp"

namespace qpxval {

class Poly {
public:
    Poly() = default; // zero polynomial
    explicit Poly(std::vector<BigRat> coeffs);

    static Poly zero() { return Poly(); }
    static Poly constant(const BigRat& c) { return Poly({c}); }
    static Poly monomial(const BigRat& c, size_t k);
    static Poly variable() { return monomial(1, 1); } // X

    bool is_zero() const { return c_.empty(); }
    // nullopt for the zero polynomial; no -1 sentinel
    std::optional<size_t> degree() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const BigRat& coeff(size_t k) const; // 0 beyond the degree
    const std::vector<BigRat>& coeffs() const { return c_; }
    const BigRat& leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const BigRat& c) const;
    Poly pow(long k) const; // k >= 0

    // quotient and remainder; divisor nonzero
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    BigRat eval(const BigRat& x) const;
    // coefficients in powers of (X - c)
    std::vector<BigRat> taylor_at(const BigRat& c) const;
    // g(X + a)
    Poly shifted(const BigRat& a) const;

    // max over coefficients of max(|num|, den)
    BigInt height() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string(const std::string& var = "X") const;

private:
    std::vector<BigRat> c_; // constant term first, trailing zeros trimmed
};

Poly operator*(const BigRat& c, const Poly& f);

// b-th Hasse (divided) derivative: coefficient of X^{k-b} is C(k,b)*f_k; b >= 1
Poly hasse_derivative(const Poly& f, long b);

// monic gcd (zero if both inputs are zero)
Poly poly_gcd(Poly a, Poly b);

bool is_squarefree(const Poly& f);

// f = sum f_i Q^i with deg f_i < deg Q
class QExpansion {
public:
    QExpansion(Poly base, std::vector<Poly> coeffs);

    const Poly& base() const { return base_; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& coeff(size_t i) const;
    size_t top_index() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    Poly reconstruct() const;

private:
    Poly base_;
    std::vector<Poly> coeffs_;
};

// repeated Euclidean division; Q monic of degree >= 1
QExpansion q_expansion(const Poly& f, const Poly& Q);

// Res(f,g) = lc(g)^{deg f} * prod f(beta_j) over the roots beta_j of g.
// Swapping the arguments changes the sign by (-1)^{deg f * deg g}.
BigRat resultant(const Poly& f, const Poly& g);

std::string poly_to_string(const Poly& f, const std::string& var = "X");
// terms "c*X^k", "X^k", "c" joined by +/-, rational c as "a/b"
Poly poly_from_string(const std::string& s, const std::string& var = "X");

} // namespace qpxval
