#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umbral/partition.hpp"
#include "umbral/report.hpp"
#include "umbral/schur.hpp"

namespace umbral {

enum class Thm31Variant { SS, StarStar, StarS };

// s_lambda(x+u) = sum over partitions mu inside lambda of d_{lambda,mu}(u)
// s_mu(x), and the two starred variants, as exact polynomial identities.
// Coefficient columns with a negative mu-part vanish through the binomial
// factor, so the partition range is exhaustive.
VerificationReport verify_expansion_thm31(const SchurContext& ctx, const Partition& lambda,
                                          Thm31Variant variant);

// dhat_{lambda,mu}(u) = (-1)^{|lambda|-|mu|} dhat_{lambda',mu'}(-u).
VerificationReport verify_dhat_duality(const SequencePtr& seq, const Partition& lambda,
                                       const Partition& mu);

// Given c_0 = 1, c_1, ..., solve c'_n from
// sum_k (-1)^k c_k c'_{n-k} = [n=0].
std::vector<Rational> solve_dual_sequence(const std::vector<Rational>& c, size_t len);

// det(c_{lambda_i - mu_j - i + j}) over depth(lambda) rows equals
// det(c'_{lambda'_i - mu'_j - i + j}) over depth(lambda') rows, for any pair
// of sequences with c_0 = c'_0 = 1 satisfying the alternating convolution
// constraint (checked first).
VerificationReport verify_seq_duality_thm34(const std::vector<Rational>& c,
                                            const std::vector<Rational>& cprime,
                                            const Partition& lambda, const Partition& mu,
                                            const std::string& tag);

// Expansion theorems for e, e*, h, h* under the shifts e(x;u) = e(x-u),
// h(x;u) = h(x+u), including the two displayed non-identities (which must
// fail for operators with p != p*) and the negative-index extensions.
std::vector<VerificationReport> verify_eh_expansions(const SchurContext& ctx, int kmax,
                                                     int neg_extra, int window,
                                                     const std::vector<Rational>& pts);

// Q_u h_k(x;u) = (N+k-1) h_{k-1}(x;u) and the h*, e, e* companions.
std::vector<VerificationReport> verify_delta_action_cor45(const SchurContext& ctx, int kmax,
                                                          int neg_extra, const std::vector<Rational>& pts);

// The three generating-function identities: the monic expansion of
// (u-x_1)...(u-x_N), and both expansions of 1/((u+x_1)...(u+x_N)).
std::vector<VerificationReport> verify_generating_functions(
    const SchurContext& ctx, int window, const std::vector<std::vector<Rational>>& xspecs);

// Cauchy-type identities: the finite box identity for prod (y_j - x_i), the
// Cauchy determinant and its mixed generalization, and the series identity
// for prod 1/(y_j + x_i).
std::vector<VerificationReport> verify_cauchy(const SequencePtr& seq, int M, int N, int window,
                                              const std::vector<Rational>& xpts,
                                              const std::vector<Rational>& ypts);

struct RunOptions {
    bool full = false;
    std::optional<uint64_t> seed;  // randomized specialization points
    std::string filter;            // substring match on report ids
};

using ReportSink = std::function<void(const VerificationReport&)>;

// Deterministic sweep of every verified identity over the four built-in
// operators and a generic series operator. quick: small boxes, 12-term
// windows; full: the complete parameter grid with >= 16-term windows.
std::vector<VerificationReport> run_all(const RunOptions& opts, const ReportSink& sink = {});

// Deterministic specialization points (positive, pairwise distinct);
// variant selects one of three fixed families, seed overrides with
// pseudo-random small rationals.
std::vector<Rational> spec_points(int n, int variant, std::optional<uint64_t> seed = {});

}  // namespace umbral
