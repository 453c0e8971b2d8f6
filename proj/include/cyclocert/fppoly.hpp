#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclocert/bigint.hpp"
#include "cyclocert/zpoly.hpp"

namespace cyclo {

/// Dense univariate polynomial over F_p, coefficients canonical in [0, p-1].
/// Same storage conventions as ZPoly: ascending coefficients, no trailing
/// zeros, deg() == -1 for the zero polynomial.
class FpPoly {
  public:
    FpPoly() = delete;
    explicit FpPoly(Int p) : p_(std::move(p)) { check_modulus(); }
    FpPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
        check_modulus();
        for (Int& v : c_) v = floor_mod(v, p_);
        trim();
    }
    FpPoly(Int p, std::initializer_list<long> coeffs) : p_(std::move(p)) {
        check_modulus();
        for (long v : coeffs) c_.push_back(floor_mod(Int(v), p_));
        trim();
    }

    static FpPoly zero(Int p) { return FpPoly(std::move(p)); }
    static FpPoly one(Int p) { return FpPoly(std::move(p), std::vector<Int>{Int(1)}); }
    static FpPoly monomial(Int p, size_t d, Int lead = Int(1)) {
        std::vector<Int> c(d + 1);
        c[d] = std::move(lead);
        return FpPoly(std::move(p), std::move(c));
    }

    const Int& modulus() const { return p_; }
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& operator[](size_t i) const {
        static const Int kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }
    Int lc() const { return c_.empty() ? Int(0) : c_.back(); }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = floor_mod(acc * x + c_[i], p_);
        return acc;
    }

    FpPoly monic() const {
        if (is_zero() || c_.back() == 1) return *this;
        Int inv = mod_inverse(c_.back(), p_);
        std::vector<Int> c(c_);
        for (Int& v : c) v = floor_mod(v * inv, p_);
        return FpPoly(p_, std::move(c));
    }

    FpPoly derivative() const {
        if (c_.size() <= 1) return FpPoly(p_);
        std::vector<Int> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = floor_mod(Int(i) * c_[i], p_);
        return FpPoly(p_, std::move(c));
    }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        a.check_same(b);
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(a[i] + b[i], a.p_);
        return FpPoly(a.p_, std::move(c));
    }
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        a.check_same(b);
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(a[i] - b[i], a.p_);
        return FpPoly(a.p_, std::move(c));
    }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        for (Int& v : c) v = floor_mod(v, a.p_);
        return FpPoly(a.p_, std::move(c));
    }
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ' ';
            s += c_[i].str();
        }
        return s;
    }

    void check_same(const FpPoly& other) const {
        if (p_ != other.p_) throw std::invalid_argument("FpPoly: modulus mismatch");
    }

  private:
    void check_modulus() const {
        if (p_ < 2) throw std::invalid_argument("FpPoly: modulus must be at least 2");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Int p_;
    std::vector<Int> c_;
};

/// Canonical total order used wherever factor lists must be byte-stable:
/// ascending degree, then lexicographic on the ascending coefficient
/// sequence.
inline bool canonical_less(const FpPoly& a, const FpPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return false;
}

/// Reduce an integer polynomial modulo a prime p (coefficientwise).
inline FpPoly mod_reduce(const ZPoly& a, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("mod_reduce: modulus must be prime");
    return FpPoly(p, a.coeffs());
}

/// Canonical integer lift, coefficients kept in [0, p-1].
inline ZPoly lift(const FpPoly& a) { return ZPoly(a.coeffs()); }

inline std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    if (b.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    const Int& p = a.modulus();
    long db = b.deg();
    if (a.deg() < db) return {FpPoly(p), a};
    Int lead_inv = mod_inverse(b.lc(), p);
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quo(static_cast<size_t>(a.deg() - db) + 1);
    for (long i = a.deg(); i >= db; --i) {
        Int t = floor_mod(rem[static_cast<size_t>(i)] * lead_inv, p);
        if (t == 0) continue;
        quo[static_cast<size_t>(i - db)] = t;
        for (long j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            rem[k] = floor_mod(rem[k] - t * b[static_cast<size_t>(j)], p);
        }
    }
    return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

/// Quotient of an exact division; a nonzero remainder is a hard fault.
inline FpPoly divide_exact(const FpPoly& a, const FpPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw internal_error("divide_exact: division not exact over F_p");
    return q;
}

/// Monic gcd.
inline FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

struct Bezout {
    FpPoly u, v, d;  // a*u + b*v = d, d the monic gcd
};

/// Extended Euclid with the usual minimal-degree normalization:
/// deg u < deg b - deg d and deg v < deg a - deg d whenever u, v are
/// nonzero and the bounds are meaningful.
inline Bezout bezout(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("bezout: both inputs zero");
    const Int& p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::one(p), s1 = FpPoly::zero(p);
    FpPoly t0 = FpPoly::zero(p), t1 = FpPoly::one(p);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        FpPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // scale so the gcd is monic
    Int inv = mod_inverse(r0.lc(), p);
    FpPoly scale(p, std::vector<Int>{inv});
    FpPoly d = r0 * scale, u = s0 * scale, v = t0 * scale;
    // reduce u modulo b/d so the degree bounds hold, recomputing v exactly
    if (!b.is_zero() && !d.is_zero()) {
        FpPoly bq = divide_exact(b, d);
        if (bq.deg() > 0 && !u.is_zero() && u.deg() >= bq.deg()) {
            u = divmod(u, bq).second;
            v = divide_exact(d - a * u, b);
        }
    }
    return {std::move(u), std::move(v), std::move(d)};
}

/// base^e mod m over F_p[X], e >= 0.
inline FpPoly powmod(const FpPoly& base, Int e, const FpPoly& m) {
    base.check_same(m);
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    FpPoly acc = FpPoly::one(base.modulus());
    FpPoly b = divmod(base, m).second;
    while (e > 0) {
        if ((e & 1) != 0) acc = divmod(acc * b, m).second;
        e >>= 1;
        if (e > 0) b = divmod(b * b, m).second;
    }
    return acc;
}

inline FpPoly pow(const FpPoly& base, unsigned long e) {
    FpPoly acc = FpPoly::one(base.modulus());
    FpPoly b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return acc;
}

}  // namespace cyclo
