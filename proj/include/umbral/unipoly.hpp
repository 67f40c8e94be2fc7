#pragma once

#include <string>
#include <utility>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

// Dense univariate polynomial over the rationals. Coefficients are indexed
// by exponent; the vector carries no trailing zeros, and the zero polynomial
// is the empty vector (degree -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rational(1)); }
    static UniPoly variable() { return monomial(1, Rational(1)); }
    static UniPoly monomial(int deg, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly scaled(const Rational& s) const;
    UniPoly mul_xpow(int k) const;  // multiply by x^k, k >= 0

    Rational eval(const Rational& x) const;  // Horner
    UniPoly shift(const Rational& a) const;  // f(x) -> f(x+a)
    UniPoly derivative() const;
    UniPoly negate_arg() const;  // f(x) -> f(-x)

    // Exact division by x; requires a zero constant term.
    UniPoly divided_by_x() const;

    // Euclidean division: returns (quotient, remainder).
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
    // Monic gcd; gcd(0,0) = 0.
    static UniPoly gcd(UniPoly a, UniPoly b);

    // Canonical text form, terms by descending degree, e.g. "x^3 - 1/4*x".
    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace umbral
