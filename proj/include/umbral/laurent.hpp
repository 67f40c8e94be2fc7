#pragma once

#include <limits>
#include <string>
#include <vector>

#include "umbral/ratfun.hpp"
#include "umbral/unipoly.hpp"

namespace umbral {

// Sentinel for "all lower terms are exactly zero".
inline constexpr int kExactFloor = std::numeric_limits<int>::min() / 4;

// Truncated element of Q((x^{-1})): coefficients for exponents
// top, top-1, ..., top-len+1 are stored and guaranteed correct; everything
// strictly below unknown_floor() is unknown unless the tail is exact.
// Arithmetic shrinks the guaranteed window as required and never reports
// a coefficient it cannot prove.
class LaurentTail {
public:
    LaurentTail() = default;  // exact zero

    static LaurentTail exact_monomial(int exponent, const Rational& c);
    static LaurentTail of_poly(const UniPoly& p);
    // Expansion of num/den in descending powers, to `width` terms.
    static LaurentTail of_ratfun(const RationalFunction& f, int width);

    bool is_exact() const { return exact_; }
    bool known_zero() const { return exact_ && c_.empty(); }
    int top() const { return top_; }
    int width() const { return static_cast<int>(c_.size()); }
    // First unknown exponent (kExactFloor when the tail is exact).
    int unknown_floor() const { return exact_ ? kExactFloor : top_ - width(); }

    // Coefficient of x^e; throws InsufficientPrecision outside the window.
    Rational coeff(int e) const;
    bool knows(int e) const { return e > unknown_floor(); }
    // Non-throwing variant; caller guarantees e > unknown_floor().
    Rational coeff_or_zero(int e) const {
        if (e > top_ || e <= top_ - width()) return Rational(0);
        return c_[static_cast<size_t>(top_ - e)];
    }

    LaurentTail operator-() const;
    friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b);
    friend LaurentTail operator-(const LaurentTail& a, const LaurentTail& b);
    friend LaurentTail operator*(const LaurentTail& a, const LaurentTail& b);
    LaurentTail& operator+=(const LaurentTail& o) { return *this = *this + o; }
    LaurentTail& operator-=(const LaurentTail& o) { return *this = *this - o; }
    LaurentTail& operator*=(const LaurentTail& o) { return *this = *this * o; }

    LaurentTail scaled(const Rational& s) const;
    LaurentTail mul_xpow(int k) const;  // multiply by x^k (any sign)

    // Multiplicative inverse to `width` correct terms; the leading
    // coefficient within the window must be nonzero.
    LaurentTail invert(int width) const;

    // Restrict the guaranteed window to exponents >= floor_exp.
    LaurentTail truncated_to_floor(int floor_exp) const;

    // Equal on the overlap of guaranteed windows, restricted to exponents
    // > floor_exp. Returns an empty string on success, else a witness.
    static std::string mismatch_witness(const LaurentTail& a, const LaurentTail& b, int floor_exp);

    std::string str(const std::string& var = "x") const;

private:
    void trim_leading_zeros();
    int top_ = 0;
    std::vector<Rational> c_;  // c_[i] = coefficient of x^(top_-i)
    bool exact_ = true;
};

}  // namespace umbral
