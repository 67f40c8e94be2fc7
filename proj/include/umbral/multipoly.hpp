#pragma once

#include <map>
#include <string>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/unipoly.hpp"

namespace umbral {

using ExpVec = std::vector<int>;

// Graded reverse lexicographic order: higher total degree wins; on ties the
// monomial with the smaller exponent at the last differing position wins.
struct GrevlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

// Sparse exact multivariate polynomial in a fixed number of variables.
// No zero coefficients are stored; exponents are nonnegative.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrevlexLess>;

    explicit MultiPoly(int nvars = 0) : nv_(nvars) {}
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int var);
    // Embed a univariate polynomial as a polynomial in variable `var`.
    static MultiPoly from_unipoly(const UniPoly& p, int nvars, int var);

    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }
    Rational coeff(const ExpVec& e) const;
    long total_degree() const;  // -1 for zero
    int degree_in(int var) const;

    void add_term(const ExpVec& e, const Rational& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nv_ == b.nv_ && a.t_ == b.t_;
    }

    MultiPoly scaled(const Rational& s) const;

    Rational eval(const std::vector<Rational>& pts) const;
    // Evaluate every variable except `var`, leaving a univariate polynomial;
    // pts has nvars entries and pts[var] is ignored.
    UniPoly eval_except(int var, const std::vector<Rational>& pts) const;

    // Substitute x_var = value, dropping the variable (result has nvars-1).
    MultiPoly subst_value(int var, const Rational& value) const;
    // Reinterpret in a wider ring; existing variables keep their indices.
    MultiPoly extended(int new_nvars) const;
    // Reinterpret in a wider ring with variable i mapped to offset + i.
    MultiPoly embedded(int new_nvars, int offset) const;
    MultiPoly permuted(const std::vector<int>& perm) const;  // var i -> perm[i]
    MultiPoly swapped(int i, int j) const;

    // x_var -> x_var + a, exactly.
    MultiPoly shifted_var(int var, const Rational& a) const;
    // x_i -> x_i + sign*u for all current variables; u is appended as the
    // last variable of the result.
    MultiPoly shift_all_vars(int sign) const;

    MultiPoly derivative(int var) const;

    // Exact division by (x_i - x_j); throws NonExactDivision on remainder.
    MultiPoly divided_by_linear(int i, int j) const;
    // Exact division by the difference product prod_{i<j} (x_i - x_j).
    MultiPoly divided_by_difference_product() const;

    MultiPoly top_homogeneous() const;

    // Horner evaluation of a univariate polynomial at this polynomial.
    static MultiPoly compose(const UniPoly& p, const MultiPoly& arg);

    // Canonical text: terms in descending grevlex order, reduced fractional
    // coefficients, e.g. "x1^2*x2 + 1/2*x1 - 3".
    std::string str(const std::vector<std::string>& names) const;
    std::string str() const;  // default names x1..xN

private:
    int nv_;
    TermMap t_;
};

// Empty string when equal; otherwise describes the grevlex-largest
// differing monomial with both coefficients (failure witness).
std::string multipoly_mismatch(const MultiPoly& a, const MultiPoly& b);

// Difference product prod_{i<j} (x_i - x_j) on nvars variables.
MultiPoly difference_product(int nvars);

// Vandermonde-type product evaluated at points: prod_{i<j} (p_i - p_j).
Rational difference_product_value(const std::vector<Rational>& pts);

}  // namespace umbral
