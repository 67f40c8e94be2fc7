#include "umbral/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/errors.hpp"

namespace umbral {

namespace {
// floor + shift with saturation at the exact sentinel
int sat_add(int f, int t) { return f == kExactFloor ? kExactFloor : f + t; }
}  // namespace

void LaurentTail::trim_leading_zeros() {
    size_t i = 0;
    while (i < c_.size() && c_[i].is_zero()) ++i;
    if (i > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(i));
        top_ -= static_cast<int>(i);
    }
    if (c_.empty() && exact_) top_ = 0;
}

LaurentTail LaurentTail::exact_monomial(int exponent, const Rational& c) {
    LaurentTail t;
    if (c.is_zero()) return t;
    t.top_ = exponent;
    t.c_ = {c};
    t.exact_ = true;
    return t;
}

LaurentTail LaurentTail::of_poly(const UniPoly& p) {
    LaurentTail t;
    if (p.is_zero()) return t;
    t.top_ = p.degree();
    t.c_.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int e = p.degree(); e >= 0; --e) t.c_.push_back(p.coeff(e));
    t.exact_ = true;
    t.trim_leading_zeros();
    return t;
}

LaurentTail LaurentTail::of_ratfun(const RationalFunction& f, int width) {
    if (f.is_zero()) return LaurentTail();
    return of_poly(f.numerator()) * of_poly(f.denominator()).invert(width);
}

Rational LaurentTail::coeff(int e) const {
    if (e <= unknown_floor()) throw InsufficientPrecision("LaurentTail::coeff: exponent below window");
    return coeff_or_zero(e);
}

LaurentTail LaurentTail::operator-() const {
    LaurentTail r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentTail operator+(const LaurentTail& a, const LaurentTail& b) {
    if (a.known_zero()) return b;
    if (b.known_zero()) return a;
    LaurentTail r;
    const int uf = std::max(a.unknown_floor(), b.unknown_floor());
    r.exact_ = a.exact_ && b.exact_;
    r.top_ = std::max(a.top_, b.top_);
    const int bottom = r.exact_
                           ? std::min(a.top_ - a.width() + 1, b.top_ - b.width() + 1)
                           : uf + 1;
    if (bottom > r.top_) {  // empty guaranteed window
        r.top_ = uf;
        r.exact_ = false;
        return r;
    }
    r.c_.assign(static_cast<size_t>(r.top_ - bottom + 1), Rational(0));
    for (int e = r.top_; e >= bottom; --e)
        r.c_[static_cast<size_t>(r.top_ - e)] = a.coeff_or_zero(e) + b.coeff_or_zero(e);
    r.trim_leading_zeros();
    return r;
}

LaurentTail operator-(const LaurentTail& a, const LaurentTail& b) { return a + (-b); }

LaurentTail operator*(const LaurentTail& a, const LaurentTail& b) {
    if (a.known_zero() || b.known_zero()) return LaurentTail();
    LaurentTail r;
    r.top_ = a.top_ + b.top_;
    r.exact_ = a.exact_ && b.exact_;
    const int uf = std::max(sat_add(a.unknown_floor(), b.top_), sat_add(b.unknown_floor(), a.top_));
    const int bottom = r.exact_ ? (a.top_ - a.width() + 1) + (b.top_ - b.width() + 1) : uf + 1;
    if (bottom > r.top_) {
        r.top_ = uf;
        r.exact_ = false;
        return r;
    }
    r.c_.assign(static_cast<size_t>(r.top_ - bottom + 1), Rational(0));
    for (int i = 0; i < a.width(); ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        const int ea = a.top_ - i;
        for (int j = 0; j < b.width(); ++j) {
            const int e = ea + (b.top_ - j);
            if (e < bottom) break;
            r.c_[static_cast<size_t>(r.top_ - e)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    r.trim_leading_zeros();
    return r;
}

LaurentTail LaurentTail::scaled(const Rational& s) const {
    if (s.is_zero()) {
        LaurentTail r;
        if (!exact_) {  // the unknown part scales to an unknown zero region
            r.exact_ = false;
            r.top_ = unknown_floor();
        }
        return r;
    }
    LaurentTail r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

LaurentTail LaurentTail::mul_xpow(int k) const {
    LaurentTail r(*this);
    if (!r.known_zero()) r.top_ += k;
    return r;
}

LaurentTail LaurentTail::invert(int width) const {
    if (known_zero()) throw std::invalid_argument("LaurentTail::invert: inverse of zero");
    LaurentTail f(*this);
    f.trim_leading_zeros();
    if (f.c_.empty()) throw InsufficientPrecision("LaurentTail::invert: no known leading coefficient");
    const int avail = f.exact_ ? width : f.width();
    const int w = std::min(width, avail);
    if (w <= 0) throw InsufficientPrecision("LaurentTail::invert: empty window");
    const Rational f0inv = f.c_[0].inverse();
    LaurentTail r;
    r.top_ = -f.top_;
    r.exact_ = f.exact_ && f.c_.size() == 1;
    r.c_.assign(static_cast<size_t>(r.exact_ ? 1 : w), Rational(0));
    r.c_[0] = f0inv;
    for (size_t m = 1; m < r.c_.size(); ++m) {
        Rational s(0);
        const size_t imax = std::min(m, f.c_.size() - 1);
        for (size_t i = 1; i <= imax; ++i) s += f.c_[i] * r.c_[m - i];
        r.c_[m] = -(s * f0inv);
    }
    return r;
}

LaurentTail LaurentTail::truncated_to_floor(int floor_exp) const {
    if (floor_exp <= unknown_floor()) return *this;
    LaurentTail r;
    r.exact_ = false;
    if (floor_exp >= top_) {
        r.top_ = floor_exp;
        return r;
    }
    r.top_ = top_;
    r.c_.assign(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(top_ - floor_exp)));
    // pad with known zeros if the source window extended beyond its coeffs
    r.c_.resize(static_cast<size_t>(top_ - floor_exp), Rational(0));
    return r;
}

std::string LaurentTail::mismatch_witness(const LaurentTail& a, const LaurentTail& b, int floor_exp) {
    const int uf = std::max({a.unknown_floor(), b.unknown_floor(), floor_exp});
    const int top = std::max(a.top_, b.top_);
    if (top <= uf) return "empty comparison window";
    for (int e = top; e > uf; --e) {
        const Rational ca = a.coeff_or_zero(e), cb = b.coeff_or_zero(e);
        if (!(ca == cb))
            return "coefficient of x^" + std::to_string(e) + ": " + ca.str() + " vs " + cb.str();
    }
    return "";
}

std::string LaurentTail::str(const std::string& var) const {
    std::string out;
    for (int i = 0; i < width(); ++i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        const int e = top_ - i;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
        }
        if (e == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    if (out.empty()) out = "0";
    if (!exact_) out += " + O(" + var + "^" + std::to_string(unknown_floor()) + ")";
    return out;
}

}  // namespace umbral
