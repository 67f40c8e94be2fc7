#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "umbral/laurent.hpp"
#include "umbral/multipoly.hpp"
#include "umbral/ratfun.hpp"
#include "umbral/report.hpp"
#include "umbral/unipoly.hpp"

namespace umbral {

enum class DeltaKind { Differentiation, ForwardDiff, BackwardDiff, CentralDiff, GenericSeries };

// Normalized delta operator: degree-lowering, shift-invariant, written as
// D + a_2 D^2 + a_3 D^3 + ... . The four built-ins also carry an exact
// functional rule (shift/derivative combination), which is what makes
// negative-index objects exact rational functions. A GenericSeries knows its
// expansion only to a declared order and fails loudly beyond it.
class DeltaOperator {
public:
    static DeltaOperator differentiation();
    static DeltaOperator forward_difference();
    static DeltaOperator backward_difference();
    static DeltaOperator central_difference();
    // coeffs = (a_1, a_2, ..., a_R); requires a_1 = 1. Coefficients beyond
    // a_R are treated as unknown, not zero.
    static DeltaOperator generic_series(std::vector<Rational> coeffs);

    DeltaKind kind() const { return kind_; }
    bool is_builtin() const { return kind_ != DeltaKind::GenericSeries; }
    // Declared order for GenericSeries; INT_MAX for built-ins (their series
    // coefficients are generated on demand).
    int series_order() const;
    Rational series_coeff(int k) const;  // coefficient of D^k, k >= 1

    UniPoly apply(const UniPoly& f) const;
    RationalFunction apply(const RationalFunction& f) const;  // built-ins only
    // Window-correct action on a truncated Laurent tail; the result keeps at
    // most `width` terms.
    LaurentTail apply(const LaurentTail& f, int width) const;
    // Action in one variable of a multivariate polynomial.
    MultiPoly apply_in_var(const MultiPoly& f, int var) const;

    std::string name() const;

private:
    DeltaOperator(DeltaKind k, std::vector<Rational> coeffs)
        : kind_(k), series_(std::move(coeffs)) {}
    DeltaKind kind_;
    std::vector<Rational> series_;  // generic only: a_1..a_R
};

// Key for memoised Schur-type polynomials (see schur.hpp).
struct SchurKey {
    int nvars;
    std::vector<long> lambda;
    bool star;
    friend bool operator<(const SchurKey& a, const SchurKey& b) {
        if (a.nvars != b.nvars) return a.nvars < b.nvars;
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.star < b.star;
    }
};

// The basic polynomials p_n of a delta operator (Q p_n = n p_{n-1},
// p_n(0) = [n=0]) together with the conjugate sequence p*_n = p_{n+1}/x and
// their negative-index extensions. All lookups are cached behind a mutex;
// returned values are independent copies.
class BinomialSequence {
public:
    explicit BinomialSequence(DeltaOperator op) : op_(std::move(op)) {}

    const DeltaOperator& op() const { return op_; }

    UniPoly basic(int n) const;          // p_n, n >= 0 (monic, degree n)
    UniPoly conj(int n) const;           // p*_n, n >= 0
    UniPoly divided_basic(int n) const;  // p_n / n!

    // Exact values for any integer index; built-in operators only when n < 0.
    RationalFunction basic_ratfun(long n) const;
    RationalFunction conj_ratfun(long n) const;

    // Truncated expansions in Q((x^{-1})) for any operator and any index.
    LaurentTail basic_tail(long n, int width) const;
    LaurentTail conj_tail(long n, int width) const;

    // R = [Q, x]; R^a applied to f (a < 0 by triangular back-substitution).
    UniPoly r_apply(const UniPoly& f, long a) const;
    UniPoly shifted_basic(int n, long a) const;  // p_n^{(a)} = R^a p_n

    // Machine check of the binomial-type identity and both Sheffer-type
    // expansions of the conjugate sequence, for 0 <= n <= n_max.
    VerificationReport check_binomial_type(int n_max) const;

    bool schur_lookup(const SchurKey& k, MultiPoly* out) const;
    void schur_store(const SchurKey& k, const MultiPoly& v) const;

private:
    const UniPoly& ensure_basic_locked(int n) const;
    const UniPoly& ensure_q_monomial_locked(int j) const;

    DeltaOperator op_;
    mutable std::mutex mu_;
    mutable std::vector<UniPoly> basic_;        // p_0, p_1, ...
    mutable std::vector<UniPoly> q_monomial_;   // Q x^0, Q x^1, ...
    mutable std::vector<RationalFunction> neg_conj_;  // p*_{-1}, p*_{-2}, ...
    mutable std::map<SchurKey, MultiPoly> schur_memo_;
};

using SequencePtr = std::shared_ptr<const BinomialSequence>;

SequencePtr make_sequence(const DeltaOperator& op);

}  // namespace umbral
