#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclocert/bigint.hpp"

namespace cyclo {

/// Dense univariate polynomial over Z.  Index i holds the coefficient of
/// X^i; no trailing zeros are stored, so the zero polynomial is the empty
/// vector and deg() returns -1 for it (the "no degree" sentinel).
class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZPoly constant(Int v) { return ZPoly(std::vector<Int>{std::move(v)}); }
    static ZPoly monomial(size_t d, Int lead = Int(1)) {
        std::vector<Int> c(d + 1);
        c[d] = std::move(lead);
        return ZPoly(std::move(c));
    }
    // X^n - 1
    static ZPoly power_minus_one(size_t n) {
        std::vector<Int> c(n + 1);
        c[0] = -1;
        c[n] = 1;
        return ZPoly(std::move(c));
    }

    long deg() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& coeffs() const { return c_; }

    // Coefficient of X^i, zero beyond the degree.
    const Int& operator[](size_t i) const {
        static const Int kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }
    Int lc() const { return c_.empty() ? Int(0) : c_.back(); }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    std::complex<double> eval(const std::complex<double>& z) const {
        std::complex<double> acc = 0;
        for (size_t i = c_.size(); i-- > 0;)
            acc = acc * z + std::complex<double>(static_cast<double>(c_[i]), 0.0);
        return acc;
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return ZPoly(std::move(c));
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return ZPoly(std::move(c));
    }
    ZPoly operator-() const {
        std::vector<Int> c(c_);
        for (Int& v : c) v = -v;
        return ZPoly(std::move(c));
    }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZPoly();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return ZPoly(std::move(c));
    }
    friend ZPoly operator*(const Int& s, const ZPoly& a) {
        std::vector<Int> c(a.c_);
        for (Int& v : c) v *= s;
        return ZPoly(std::move(c));
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    // Coefficients ascending, space-separated: X^2 - 1 prints as "-1 0 1".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ' ';
            os << c_[i];
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// Division with remainder by a monic divisor: a = b*q + r, deg r < deg b.
/// Stays in integer arithmetic, which is exactly why b must be monic.
inline std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero() || !b.is_monic())
        throw std::invalid_argument("divmod: divisor must be monic and nonzero");
    long db = b.deg();
    std::vector<Int> rem(a.coeffs());
    if (a.deg() < db) return {ZPoly(), a};
    std::vector<Int> quo(static_cast<size_t>(a.deg() - db) + 1);
    for (long i = a.deg(); i >= db; --i) {
        Int t = rem[static_cast<size_t>(i)];
        if (t == 0) continue;
        quo[static_cast<size_t>(i - db)] = t;
        for (long j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= t * b[static_cast<size_t>(j)];
    }
    return {ZPoly(std::move(quo)), ZPoly(std::move(rem))};
}

/// Quotient of an exact scalar division; non-exactness is a hard fault.
inline ZPoly divide_exact(const ZPoly& a, const Int& s) {
    if (s == 0) throw std::invalid_argument("divide_exact: zero divisor");
    std::vector<Int> c(a.coeffs());
    for (Int& v : c) {
        if (v % s != 0) throw internal_error("divide_exact: scalar division not exact");
        v /= s;
    }
    return ZPoly(std::move(c));
}

}  // namespace cyclo
