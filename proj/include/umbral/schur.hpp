#pragma once

#include <vector>

#include "umbral/delta.hpp"
#include "umbral/multipoly.hpp"
#include "umbral/partition.hpp"

namespace umbral {

// A binomial sequence together with the number of variables x_1..x_N.
struct SchurContext {
    SequencePtr seq;
    int nvars;
};

// Zero-pads an index vector to length n; rejects longer vectors whose extra
// entries are nonzero.
std::vector<long> pad_signature(const std::vector<long>& lambda, int n);

// det(p_{l_i}(x_j)) with l_i = lambda_i + N - i, expanded exactly.
// All row indices must be nonnegative (otherwise NegativeRowIndex).
MultiPoly alternant(const SchurContext& ctx, const std::vector<long>& lambda, bool star);

// Alternant divided exactly by the difference product. Symmetric; the top
// homogeneous part is the classical Schur polynomial.
MultiPoly schur_poly(const SchurContext& ctx, const std::vector<long>& lambda, bool star);

MultiPoly elementary(const SchurContext& ctx, int k, bool star);  // s_{(1^k)}, 0 <= k <= N
MultiPoly complete(const SchurContext& ctx, int k, bool star);    // s_{(k)}, k >= 0

// Exact value of s_lambda (or s*_lambda) at pairwise distinct rational
// points, for an arbitrary integer signature; negative row indices use the
// exact rational-function extension (built-in operators only).
Rational schur_value(const SchurContext& ctx, const std::vector<long>& lambda, bool star,
                     const std::vector<Rational>& pts);

// Same determinant with every argument shifted by a formal u:
// det(p_{l_i}(pt_j + u)) / difference-product(pts), as a rational function
// of u. Built-in operators only when a row index is negative.
RationalFunction schur_shifted_ratfun(const SchurContext& ctx, const std::vector<long>& lambda,
                                      bool star, const std::vector<Rational>& pts);

Rational eh_value(const SchurContext& ctx, long k, bool star, const std::vector<Rational>& pts);

// Shift-expansion coefficient d_{lambda,mu}(u) (or the p* variant):
// det( C(l_i, lambda_i - mu_j - i + j) p_{lambda_i - mu_j - i + j}(u) ).
// Entries with a negative inner index vanish through the binomial factor.
UniPoly d_coeff(const SchurContext& ctx, const Partition& lambda, const Partition& mu, bool star);

// N-stable variant: det( p_(lambda_i - mu_j - i + j)(u) ) over
// max(depth lambda, depth mu) rows, with p_(n) = p_n / n! and p_(n) = 0 for
// n < 0. Appending zeros to both partitions does not change it.
UniPoly dhat_coeff(const SequencePtr& seq, const Partition& lambda, const Partition& mu, bool star);

}  // namespace umbral
