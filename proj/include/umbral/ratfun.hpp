#pragma once

#include <string>

#include "umbral/unipoly.hpp"

namespace umbral {

// Quotient of univariate polynomials, kept reduced (gcd 1) with a monic
// denominator. This canonical form makes equality a field-wise compare.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UniPoly::one()) {}
    RationalFunction(UniPoly num, UniPoly den);
    explicit RationalFunction(const UniPoly& p) : num_(p), den_(UniPoly::one()) {}
    explicit RationalFunction(const Rational& c) : num_(UniPoly(c)), den_(UniPoly::one()) {}

    static RationalFunction one() { return RationalFunction(UniPoly::one()); }

    const UniPoly& numerator() const { return num_; }
    const UniPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction scaled(const Rational& s) const { return RationalFunction(num_.scaled(s), den_); }

    // Evaluation; throws std::domain_error at a pole.
    Rational eval(const Rational& x) const;

    RationalFunction shift(const Rational& a) const {  // f(x) -> f(x+a)
        return RationalFunction(num_.shift(a), den_.shift(a));
    }
    RationalFunction derivative() const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    UniPoly num_, den_;
};

}  // namespace umbral
