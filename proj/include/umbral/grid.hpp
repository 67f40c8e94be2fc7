#pragma once

#include <map>
#include <string>
#include <vector>

#include "umbral/laurent.hpp"
#include "umbral/multipoly.hpp"

namespace umbral {

// Truncated element of Q((x_1^{-1},...,x_n^{-1})): exponents of every
// variable are bounded above by top_[j], and coefficients are guaranteed
// correct exactly on the grid window { e : e_j > floor_[j] for all j }.
// floor_[j] == kExactFloor means the object is exact in that direction.
// Used for identities whose series direction is multivariate; all divisions
// are avoided by comparing alternant-level (difference-product-cleared)
// forms instead.
class GridSeries {
public:
    explicit GridSeries(int nvars);
    static GridSeries constant(int nvars, const Rational& c);
    static GridSeries from_tail(const LaurentTail& t, int nvars, int var);
    static GridSeries from_multipoly(const MultiPoly& p);
    static GridSeries from_unipoly(const UniPoly& p, int nvars, int var);

    int nvars() const { return nv_; }
    bool has_terms() const { return !t_.empty(); }
    bool is_exact() const;
    const std::vector<int>& tops() const { return top_; }
    const std::vector<int>& floors() const { return floor_; }
    const std::map<ExpVec, Rational, GrevlexLess>& terms() const { return t_; }

    // Upper bound on the total degree of any term, including unknown ones.
    long max_total_degree() const;

    GridSeries operator-() const;
    friend GridSeries operator+(const GridSeries& a, const GridSeries& b);
    friend GridSeries operator-(const GridSeries& a, const GridSeries& b);
    friend GridSeries operator*(const GridSeries& a, const GridSeries& b);
    GridSeries& operator+=(const GridSeries& o) { return *this = *this + o; }
    GridSeries& operator-=(const GridSeries& o) { return *this = *this - o; }
    GridSeries& operator*=(const GridSeries& o) { return *this = *this * o; }
    GridSeries scaled(const Rational& s) const;

    // Forget everything outside the given window (raises floors).
    void prune_to(const std::vector<int>& floors);

    // Compare on the intersection of guaranteed windows further restricted
    // by `floors`; empty string when equal there.
    static std::string mismatch_witness(const GridSeries& a, const GridSeries& b,
                                        const std::vector<int>& floors);

private:
    void drop_out_of_window();
    int nv_;
    std::vector<int> top_, floor_;
    std::map<ExpVec, Rational, GrevlexLess> t_;
};

// Polynomial in a formal u with GridSeries coefficients, truncated at a
// fixed u-degree cap. Coefficients of u^m for m <= ucap are exact in the
// u-direction (truncation only discards higher powers).
class UGridPoly {
public:
    UGridPoly(int nvars, int ucap);
    static UGridPoly from_grid(const GridSeries& g, int ucap);

    int nvars() const { return nv_; }
    int ucap() const { return ucap_; }
    GridSeries slice(int m) const;  // exact zero beyond stored slices
    void set_slice(int m, GridSeries g);

    friend UGridPoly operator+(const UGridPoly& a, const UGridPoly& b);
    friend UGridPoly operator-(const UGridPoly& a, const UGridPoly& b);
    friend UGridPoly operator*(const UGridPoly& a, const UGridPoly& b);
    UGridPoly& operator+=(const UGridPoly& o) { return *this = *this + o; }
    UGridPoly operator-() const;
    UGridPoly scaled(const Rational& s) const;
    // Multiply by a univariate polynomial in u.
    UGridPoly mul_upoly(const UniPoly& p) const;

    static std::string mismatch_witness(const UGridPoly& a, const UGridPoly& b,
                                        const std::vector<int>& floors);

private:
    int nv_, ucap_;
    std::vector<GridSeries> c_;  // c_[m] = coefficient of u^m
};

}  // namespace umbral
