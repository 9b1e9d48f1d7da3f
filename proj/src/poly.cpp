#include "qpxval/poly.hpp"

#include <algorithm>
#include <cctype>

#include "qpxval/errors.hpp"

namespace qpxval {

namespace {

void trim(std::vector<BigRat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt binomial(size_t n, size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (size_t i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

} // namespace

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly Poly::monomial(const BigRat& c, size_t k) {
    if (c == 0) return Poly();
    std::vector<BigRat> v(k + 1, BigRat(0));
    v[k] = c;
    return Poly(std::move(v));
}

std::optional<size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const BigRat& Poly::coeff(size_t k) const {
    static const BigRat zero(0);
    return k < c_.size() ? c_[k] : zero;
}

const BigRat& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<BigRat> r = c_;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<BigRat> r(c_.size() + o.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(const BigRat& c) const {
    std::vector<BigRat> r = c_;
    for (auto& x : r) x *= c;
    return Poly(std::move(r));
}

Poly operator*(const BigRat& c, const Poly& f) { return f.scaled(c); }

Poly Poly::pow(long k) const {
    if (k < 0) throw std::domain_error("negative polynomial power");
    Poly acc = Poly::constant(1), base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<BigRat> rem = c_;
    trim(rem);
    std::vector<BigRat> quo;
    const size_t dd = d.c_.size();
    if (rem.size() >= dd) quo.assign(rem.size() - dd + 1, BigRat(0));
    while (rem.size() >= dd) {
        const size_t shift = rem.size() - dd;
        const BigRat q = rem.back() / d.c_.back();
        quo[shift] = q;
        for (size_t i = 0; i < dd; ++i) rem[shift + i] -= q * d.c_[i];
        trim(rem);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

BigRat Poly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::vector<BigRat> Poly::taylor_at(const BigRat& c) const {
    // repeated synthetic division by (X - c), in place
    std::vector<BigRat> a = c_;
    if (a.empty()) return a;
    for (size_t j = 0; j + 1 < a.size(); ++j)
        for (size_t i = a.size() - 1; i-- > j;) a[i] += c * a[i + 1];
    return a;
}

Poly Poly::shifted(const BigRat& a) const {
    // f(X + a) has the Taylor coefficients of f at a
    return Poly(taylor_at(a));
}

BigInt Poly::height() const {
    BigInt h = 0;
    for (const auto& x : c_) {
        BigInt n = abs(numerator(x)), d = denominator(x);
        if (n > h) h = n;
        if (d > h) h = d;
    }
    return h;
}

Poly hasse_derivative(const Poly& f, long b) {
    if (b < 1) throw std::domain_error("hasse_derivative: b must be >= 1");
    const auto deg = f.degree();
    if (!deg || static_cast<size_t>(b) > *deg) return Poly();
    std::vector<BigRat> r(*deg - b + 1, BigRat(0));
    for (size_t k = static_cast<size_t>(b); k <= *deg; ++k)
        r[k - b] = BigRat(binomial(k, static_cast<size_t>(b))) * f.coeff(k);
    return Poly(std::move(r));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(BigRat(1) / a.leading());
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    const Poly g = poly_gcd(f, hasse_derivative(f, 1));
    return g.is_constant();
}

QExpansion::QExpansion(Poly base, std::vector<Poly> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Poly());
}

const Poly& QExpansion::coeff(size_t i) const {
    static const Poly zero;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

Poly QExpansion::reconstruct() const {
    Poly acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * base_ + coeffs_[i];
    return acc;
}

QExpansion q_expansion(const Poly& f, const Poly& Q) {
    const auto dq = Q.degree();
    if (!dq || *dq < 1 || !Q.is_monic())
        throw std::domain_error("q_expansion: Q must be monic of degree >= 1");
    std::vector<Poly> coeffs;
    Poly rest = f;
    do {
        auto [q, r] = rest.divmod(Q);
        coeffs.push_back(std::move(r));
        rest = std::move(q);
    } while (!rest.is_zero());
    return QExpansion(Q, std::move(coeffs));
}

BigRat resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
    const size_t m = *f.degree(), n = *g.degree();
    if (m == 0) {
        BigRat r(1);
        for (size_t i = 0; i < n; ++i) r *= f.coeff(0);
        return r;
    }
    if (n == 0) {
        BigRat r(1);
        for (size_t i = 0; i < m; ++i) r *= g.coeff(0);
        return r;
    }
    const Poly r = f.divmod(g).second;
    if (r.is_zero()) return BigRat(0);
    const size_t dr = *r.degree();
    // Res(f,g) = lc(g)^{m - deg r} * (-1)^{deg r * n} * Res(g, r)
    BigRat scale(1);
    for (size_t i = 0; i < m - dr; ++i) scale *= g.leading();
    if ((dr * n) % 2 == 1) scale = -scale;
    return scale * resultant(g, r);
}

std::string Poly::to_string(const std::string& var) const { return poly_to_string(*this, var); }

std::string poly_to_string(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        const BigRat& c = f.coeff(i);
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigRat a = neg ? BigRat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? "-" : "+";
        if (i == 0) {
            s += rat_to_string(a);
        } else {
            if (a != 1) s += rat_to_string(a) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

struct PolyParser {
    const std::string& s;
    const std::string& var;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool at_digit() { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }

    BigInt parse_uint() {
        if (!at_digit()) throw parse_error("expected number at position " + std::to_string(i) + " in '" + s + "'");
        std::string t;
        while (at_digit()) t += s[i++];
        return BigInt(t);
    }

    bool match_var() {
        if (s.compare(i, var.size(), var) == 0) {
            i += var.size();
            return true;
        }
        return false;
    }

    Poly parse() {
        std::vector<BigRat> acc;
        skip_ws();
        bool first = true;
        while (i < s.size()) {
            int sign = 1;
            skip_ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                throw parse_error("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
            }
            first = false;
            skip_ws();
            BigRat coeff(1);
            bool have_coeff = false;
            if (at_digit()) {
                BigInt num = parse_uint();
                BigInt den = 1;
                skip_ws();
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    skip_ws();
                    den = parse_uint();
                    if (den == 0) throw parse_error("zero denominator in '" + s + "'");
                }
                coeff = BigRat(num, den);
                have_coeff = true;
                skip_ws();
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    skip_ws();
                }
            }
            size_t exp = 0;
            skip_ws();
            if (i < s.size() && match_var()) {
                exp = 1;
                skip_ws();
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    skip_ws();
                    exp = parse_uint().convert_to<size_t>();
                }
            } else if (!have_coeff) {
                throw parse_error("expected term at position " + std::to_string(i) + " in '" + s + "'");
            }
            if (acc.size() <= exp) acc.resize(exp + 1, BigRat(0));
            acc[exp] += sign > 0 ? coeff : BigRat(-coeff);
            skip_ws();
        }
        if (first) throw parse_error("empty polynomial");
        return Poly(std::move(acc));
    }
};

} // namespace

Poly poly_from_string(const std::string& s, const std::string& var) {
    PolyParser p{s, var};
    return p.parse();
}

} // namespace qpxval
