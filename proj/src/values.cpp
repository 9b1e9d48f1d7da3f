#include "qpxval/values.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "qpxval/errors.hpp"

namespace qpxval {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long int_valuation(BigInt n, std::int64_t p) {
    if (n == 0) throw internal_error("int_valuation of zero");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

BigInt pow_int(std::int64_t base, long exp) {
    if (exp < 0) throw internal_error("pow_int: negative exponent");
    BigInt r = 1, b = base;
    for (long i = 0; i < exp; ++i) r *= b;
    return r;
}

BigRat pow_rat(std::int64_t base, long exp) {
    if (exp >= 0) return BigRat(pow_int(base, exp));
    return BigRat(1, pow_int(base, -exp));
}

std::string rat_to_string(const BigRat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

BigRat rat_from_string(const std::string& s) {
    auto parse_int = [](const std::string& t) -> BigInt {
        if (t.empty()) throw parse_error("empty integer literal");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw parse_error("bad integer literal: '" + t + "'");
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw parse_error("bad integer literal: '" + t + "'");
        return BigInt(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in '" + s + "'");
    return BigRat(num, den);
}

const BigRat& ExtValue::finite() const {
    if (!finite_) throw std::domain_error("value is +inf where a finite value is required");
    return value_;
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity() || b.is_infinity()) return ExtValue::infinity();
    return ExtValue(a.value_ + b.value_);
}

ExtValue operator*(long k, const ExtValue& a) {
    if (k <= 0) throw std::domain_error("scalar multiple must be positive");
    if (a.is_infinity()) return a;
    return ExtValue(BigRat(k) * a.value_);
}

bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
    if (a.is_infinity()) return std::strong_ordering::greater;
    if (b.is_infinity()) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
}

std::string ExtValue::to_string() const { return finite_ ? rat_to_string(value_) : "inf"; }

ExtValue ExtValue::from_string(const std::string& s) {
    if (s == "inf" || s == "+inf") return infinity();
    return ExtValue(rat_from_string(s));
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.to_string(); }

ValueGroup::ValueGroup(BigInt d) : d_(std::move(d)) {
    if (d_ < 1) throw std::domain_error("value group denominator must be positive");
}

bool ValueGroup::contains(const BigRat& g) const {
    return d_ % boost::multiprecision::denominator(g) == 0;
}

ValueGroup ValueGroup::join(const BigRat& g) const {
    const BigInt den = boost::multiprecision::denominator(g);
    return ValueGroup(d_ / gcd(d_, den) * den);
}

ExtValue base_valuation(const BigRat& r, std::int64_t p) {
    if (!is_prime(p)) throw std::domain_error("base_valuation: p must be prime");
    if (r == 0) return ExtValue::infinity();
    return ExtValue(BigRat(int_valuation(numerator(r), p) - int_valuation(denominator(r), p)));
}

long least_multiplier(const ExtValue& gamma, const ValueGroup& G) {
    if (gamma.is_infinity()) throw std::domain_error("least_multiplier: gamma must be finite");
    // e*gamma in (1/d)Z iff den(gamma) | e*d
    const BigInt den = denominator(gamma.finite());
    BigInt e = den / gcd(den, G.denominator());
    return static_cast<long>(e);
}

ResidueField::ResidueField(std::int64_t p, fp::FpPoly modulus) : p_(p), modulus_(std::move(modulus)) {}

ResidueField ResidueField::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw std::domain_error("residue field: p must be prime");
    return ResidueField(p, {});
}

ResidueField ResidueField::extension(std::int64_t p, fp::FpPoly modulus) {
    if (!is_prime(p)) throw std::domain_error("residue field: p must be prime");
    for (auto& c : modulus) c = fp::mod_reduce(c, p);
    fp::trim(modulus);
    const int deg = fp::degree(modulus);
    if (deg < 2 || modulus.back() != 1)
        throw std::domain_error("residue field modulus must be monic of degree >= 2");
    if (deg > 4)
        throw unsupported_scope("residue field modulus degree > 4 is out of scope");
    if (!fp::is_irreducible(modulus, p))
        throw std::domain_error("residue field modulus is reducible over F_p");
    return ResidueField(p, std::move(modulus));
}

std::string t_poly_to_string(const fp::FpPoly& f) {
    if (f.empty()) return "0";
    std::string s;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += std::to_string(f[i]);
        else {
            if (f[i] != 1) s += std::to_string(f[i]) + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s;
}

std::string ResidueField::to_string() const {
    std::string s = "F_" + std::to_string(p_);
    if (!is_prime_field()) s += "[t]/(" + t_poly_to_string(modulus_) + ")";
    return s;
}

ResidueElem::ResidueElem(ResidueField field, fp::FpPoly coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = fp::mod_reduce(c, field_.p());
    if (!field_.is_prime_field()) coeffs_ = fp::mod(coeffs_, field_.modulus(), field_.p());
    else if (coeffs_.size() > 1) throw internal_error("prime-field element with t-coefficients");
    fp::trim(coeffs_);
}

ResidueElem ResidueElem::from_int(const ResidueField& f, std::int64_t n) {
    return ResidueElem(f, {fp::mod_reduce(n, f.p())});
}

ResidueElem ResidueElem::generator(const ResidueField& f) {
    if (f.is_prime_field()) throw std::domain_error("prime field has no generator t");
    return ResidueElem(f, {0, 1});
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
    if (field_ != o.field_) throw std::domain_error("residue arithmetic across different fields");
    return ResidueElem(field_, fp::add(coeffs_, o.coeffs_, field_.p()));
}

ResidueElem ResidueElem::operator-(const ResidueElem& o) const {
    if (field_ != o.field_) throw std::domain_error("residue arithmetic across different fields");
    return ResidueElem(field_, fp::sub(coeffs_, o.coeffs_, field_.p()));
}

ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
    if (field_ != o.field_) throw std::domain_error("residue arithmetic across different fields");
    return ResidueElem(field_, fp::mul(coeffs_, o.coeffs_, field_.p()));
}

ResidueElem ResidueElem::operator-() const {
    return ResidueElem(field_, fp::scalar_mul(coeffs_, field_.p() - 1, field_.p()));
}

ResidueElem ResidueElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero residue element");
    if (field_.is_prime_field())
        return ResidueElem(field_, {fp::mod_inverse(coeffs_[0], field_.p())});
    return ResidueElem(field_, fp::inverse_mod(coeffs_, field_.modulus(), field_.p()));
}

ResidueElem ResidueElem::pow(long k) const {
    ResidueElem base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    ResidueElem acc = one(field_);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const ResidueElem& a, const ResidueElem& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string ResidueElem::to_string() const { return t_poly_to_string(coeffs_); }

namespace {

// "c", "t", "c*t^k", joined by +/-
fp::FpPoly parse_t_poly(const std::string& s, std::int64_t p) {
    fp::FpPoly out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw parse_error("empty residue element");
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in '" + s + "'");
        }
        first = false;
        skip_ws();
        std::int64_t coeff = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coeff = coeff * 10 + (s[i++] - '0');
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        size_t exp = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw parse_error("bad exponent in '" + s + "'");
                exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    exp = exp * 10 + static_cast<size_t>(s[i++] - '0');
            }
        } else if (!have_coeff) {
            throw parse_error("expected term in '" + s + "'");
        }
        if (out.size() <= exp) out.resize(exp + 1, 0);
        out[exp] = fp::mod_reduce(out[exp] + sign * coeff, p);
        skip_ws();
    }
    fp::trim(out);
    return out;
}

} // namespace

ResidueElem ResidueElem::from_string(const ResidueField& f, const std::string& s) {
    return ResidueElem(f, parse_t_poly(s, f.p()));
}

std::ostream& operator<<(std::ostream& os, const ResidueElem& e) { return os << e.to_string(); }

ResidueElem residue_of_rational(const BigRat& r, std::int64_t p) {
    const ExtValue v = base_valuation(r, p);
    if (v.is_finite() && v.finite() < 0)
        throw std::domain_error("residue_of_rational: negative valuation");
    const ResidueField f = ResidueField::prime_field(p);
    if (r == 0) return ResidueElem::zero(f);
    const std::int64_t num = BigInt(numerator(r) % p).convert_to<std::int64_t>();
    const std::int64_t den = BigInt(denominator(r) % p).convert_to<std::int64_t>();
    if (fp::mod_reduce(num, p) == 0) return ResidueElem::zero(f);
    return ResidueElem(f, {fp::mod_reduce(num * fp::mod_inverse(den, p), p)});
}

} // namespace qpxval
