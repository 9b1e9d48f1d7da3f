#include "qpxval/fp_poly.hpp"

#include "qpxval/errors.hpp"

namespace qpxval::fp {

Coeff mod_reduce(Coeff a, Coeff p) {
    Coeff r = a % p;
    return r < 0 ? r + p : r;
}

Coeff mod_inverse(Coeff a, Coeff p) {
    a = mod_reduce(a, p);
    if (a == 0) throw internal_error("mod_inverse of zero");
    Coeff t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        Coeff q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw internal_error("mod_inverse: modulus not prime?");
    return mod_reduce(t, p);
}

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_zero(const FpPoly& f) { return f.empty(); }

int degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly add(const FpPoly& a, const FpPoly& b, Coeff p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Coeff s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = mod_reduce(s, p);
    }
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, Coeff p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Coeff s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = mod_reduce(s, p);
    }
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, Coeff p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_reduce(r[i + j] + a[i] * b[j], p);
    trim(r);
    return r;
}

FpPoly scalar_mul(const FpPoly& a, Coeff s, Coeff p) {
    FpPoly r = a;
    for (auto& c : r) c = mod_reduce(c * s, p);
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, Coeff p) {
    if (b.empty()) throw internal_error("fp divmod by zero");
    FpPoly rem = a, quo;
    Coeff inv_lead = mod_inverse(b.back(), p);
    if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, 0);
    while (rem.size() >= b.size() && !rem.empty()) {
        size_t shift = rem.size() - b.size();
        Coeff c = mod_reduce(rem.back() * inv_lead, p);
        quo[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = mod_reduce(rem[shift + i] - c * b[i], p);
        trim(rem);
    }
    trim(quo);
    return {quo, rem};
}

FpPoly mod(const FpPoly& a, const FpPoly& m, Coeff p) { return divmod(a, m, p).second; }

FpPoly monic(const FpPoly& a, Coeff p) {
    if (a.empty()) return a;
    return scalar_mul(a, mod_inverse(a.back(), p), p);
}

FpPoly gcd(FpPoly a, FpPoly b, Coeff p) {
    while (!b.empty()) {
        FpPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

FpPoly inverse_mod(const FpPoly& a, const FpPoly& m, Coeff p) {
    // extended Euclid in F_p[t]
    FpPoly r0 = m, r1 = mod(a, m, p);
    FpPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1, p);
        FpPoly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (degree(r0) != 0) throw internal_error("inverse_mod: element not invertible");
    return mod(scalar_mul(t0, mod_inverse(r0[0], p), p), m, p);
}

std::vector<Coeff> roots(const FpPoly& f, Coeff p) {
    std::vector<Coeff> out;
    for (Coeff r = 0; r < p; ++r) {
        Coeff acc = 0;
        for (size_t i = f.size(); i-- > 0;) acc = mod_reduce(acc * r + f[i], p);
        if (acc == 0) out.push_back(r);
    }
    return out;
}

std::vector<std::pair<FpPoly, int>> factor(FpPoly f, Coeff p) {
    std::vector<std::pair<FpPoly, int>> out;
    if (degree(f) < 1) return out;
    f = monic(f, p);

    auto divide_out = [&](const FpPoly& d) {
        int mult = 0;
        for (;;) {
            auto [q, r] = divmod(f, d, p);
            if (!r.empty()) break;
            f = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(d, mult);
    };

    for (Coeff r : roots(f, p)) divide_out(FpPoly{mod_reduce(-r, p), 1});

    // remaining part has no roots; pull out monic factors of degree 2, 3, ...
    for (int d = 2; 2 * d <= degree(f); ++d) {
        std::vector<Coeff> idx(static_cast<size_t>(d), 0);
        for (;;) {
            FpPoly cand(idx.begin(), idx.end());
            cand.push_back(1);
            if (roots(cand, p).empty()) // rootless candidates only; others already removed
                divide_out(cand);
            size_t k = 0;
            while (k < idx.size() && ++idx[k] == p) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    if (degree(f) >= 1) out.emplace_back(f, 1); // leftover is irreducible
    return out;
}

bool is_irreducible(const FpPoly& f, Coeff p) {
    if (degree(f) < 1) return false;
    auto fs = factor(f, p);
    return fs.size() == 1 && fs[0].second == 1 && degree(fs[0].first) == degree(f);
}

} // namespace qpxval::fp
