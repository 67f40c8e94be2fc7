#include "umbral/schur.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/det.hpp"
#include "umbral/errors.hpp"

namespace umbral {

std::vector<long> pad_signature(const std::vector<long>& lambda, int n) {
    std::vector<long> v(lambda);
    while (static_cast<int>(v.size()) > n) {
        if (v.back() != 0) throw std::invalid_argument("signature longer than variable count");
        v.pop_back();
    }
    v.resize(static_cast<size_t>(n), 0);
    return v;
}

namespace {

std::vector<long> row_indices(const std::vector<long>& lambda, int n) {
    std::vector<long> rows(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (n - 1 - i);
    return rows;
}

void require_distinct(const std::vector<Rational>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw RepeatedEvaluationPoint("evaluation points must be pairwise distinct");
}

}  // namespace

MultiPoly alternant(const SchurContext& ctx, const std::vector<long>& lambda, bool star) {
    const int n = ctx.nvars;
    const std::vector<long> lam = pad_signature(lambda, n);
    const std::vector<long> rows = row_indices(lam, n);
    for (long r : rows)
        if (r < 0) throw NegativeRowIndex("alternant: row index " + std::to_string(r));
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const UniPoly p = star ? ctx.seq->conj(static_cast<int>(rows[static_cast<size_t>(i)]))
                               : ctx.seq->basic(static_cast<int>(rows[static_cast<size_t>(i)]));
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)].push_back(MultiPoly::from_unipoly(p, n, j));
    }
    return determinant(m, MultiPoly(n), MultiPoly::constant(n, Rational(1)));
}

MultiPoly schur_poly(const SchurContext& ctx, const std::vector<long>& lambda, bool star) {
    const std::vector<long> lam = pad_signature(lambda, ctx.nvars);
    const SchurKey key{ctx.nvars, lam, star};
    MultiPoly cached(ctx.nvars);
    if (ctx.seq->schur_lookup(key, &cached)) return cached;
    const MultiPoly result = alternant(ctx, lam, star).divided_by_difference_product();
    ctx.seq->schur_store(key, result);
    return result;
}

MultiPoly elementary(const SchurContext& ctx, int k, bool star) {
    if (k < 0 || k > ctx.nvars)
        throw std::invalid_argument("elementary: need 0 <= k <= number of variables");
    return schur_poly(ctx, std::vector<long>(static_cast<size_t>(k), 1), star);
}

MultiPoly complete(const SchurContext& ctx, int k, bool star) {
    if (k < 0) throw std::invalid_argument("complete: use eh_value for negative indices");
    return schur_poly(ctx, {k}, star);
}

Rational schur_value(const SchurContext& ctx, const std::vector<long>& lambda, bool star,
                     const std::vector<Rational>& pts) {
    const int n = ctx.nvars;
    if (static_cast<int>(pts.size()) != n)
        throw std::invalid_argument("schur_value: wrong number of points");
    require_distinct(pts);
    const std::vector<long> lam = pad_signature(lambda, n);
    const std::vector<long> rows = row_indices(lam, n);
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const long r = rows[static_cast<size_t>(i)];
        if (r >= 0) {
            const UniPoly p = star ? ctx.seq->conj(static_cast<int>(r)) : ctx.seq->basic(static_cast<int>(r));
            for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)].push_back(p.eval(pts[static_cast<size_t>(j)]));
        } else {
            const RationalFunction p = star ? ctx.seq->conj_ratfun(r) : ctx.seq->basic_ratfun(r);
            for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)].push_back(p.eval(pts[static_cast<size_t>(j)]));
        }
    }
    const Rational det = determinant(m, Rational(0), Rational(1));
    return det / difference_product_value(pts);
}

RationalFunction schur_shifted_ratfun(const SchurContext& ctx, const std::vector<long>& lambda,
                                      bool star, const std::vector<Rational>& pts) {
    const int n = ctx.nvars;
    if (static_cast<int>(pts.size()) != n)
        throw std::invalid_argument("schur_shifted_ratfun: wrong number of points");
    require_distinct(pts);
    const std::vector<long> lam = pad_signature(lambda, n);
    const std::vector<long> rows = row_indices(lam, n);
    std::vector<std::vector<RationalFunction>> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const long r = rows[static_cast<size_t>(i)];
        const RationalFunction p = star ? ctx.seq->conj_ratfun(r) : ctx.seq->basic_ratfun(r);
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)].push_back(p.shift(pts[static_cast<size_t>(j)]));
    }
    const RationalFunction det =
        determinant(m, RationalFunction(), RationalFunction::one());
    return det.scaled(difference_product_value(pts).inverse());
}

Rational eh_value(const SchurContext& ctx, long k, bool star, const std::vector<Rational>& pts) {
    std::vector<long> lam{k};
    return schur_value(ctx, lam, star, pts);
}

UniPoly d_coeff(const SchurContext& ctx, const Partition& lambda, const Partition& mu, bool star) {
    const int n = ctx.nvars;
    const std::vector<long> lam = lambda.padded(n), m = mu.padded(n);
    std::vector<std::vector<UniPoly>> mat(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const long li = lam[static_cast<size_t>(i)] + (n - 1 - i);
        for (int j = 0; j < n; ++j) {
            const long idx = lam[static_cast<size_t>(i)] - m[static_cast<size_t>(j)] - i + j;
            const Rational b = binomial(li, idx);
            if (b.is_zero()) {
                mat[static_cast<size_t>(i)].push_back(UniPoly());
            } else {
                const UniPoly p = star ? ctx.seq->conj(static_cast<int>(idx))
                                       : ctx.seq->basic(static_cast<int>(idx));
                mat[static_cast<size_t>(i)].push_back(p.scaled(b));
            }
        }
    }
    return determinant(mat, UniPoly(), UniPoly::one());
}

UniPoly dhat_coeff(const SequencePtr& seq, const Partition& lambda, const Partition& mu, bool star) {
    const int n = std::max({lambda.depth(), mu.depth(), 1});
    const std::vector<long> lam = lambda.padded(n), m = mu.padded(n);
    std::vector<std::vector<UniPoly>> mat(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const long idx = lam[static_cast<size_t>(i)] - m[static_cast<size_t>(j)] - i + j;
            if (idx < 0) {
                mat[static_cast<size_t>(i)].push_back(UniPoly());
            } else {
                const UniPoly p =
                    star ? seq->conj(static_cast<int>(idx)) : seq->basic(static_cast<int>(idx));
                mat[static_cast<size_t>(i)].push_back(p.scaled(factorial(idx).inverse()));
            }
        }
    }
    return determinant(mat, UniPoly(), UniPoly::one());
}

}  // namespace umbral
