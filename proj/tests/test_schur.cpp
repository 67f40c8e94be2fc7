#include <doctest.h>

#include "umbral/errors.hpp"
#include "umbral/schur.hpp"

using namespace umbral;

namespace {

std::vector<SequencePtr> builtin_seqs() {
    return {make_sequence(DeltaOperator::differentiation()),
            make_sequence(DeltaOperator::forward_difference()),
            make_sequence(DeltaOperator::backward_difference()),
            make_sequence(DeltaOperator::central_difference())};
}

// Independent combinatorial oracle: classical Schur polynomial as the
// generating function of semistandard Young tableaux with entries <= N.
MultiPoly tableau_schur(const Partition& lambda, int nvars) {
    MultiPoly total(nvars);
    if (lambda.empty()) return MultiPoly::constant(nvars, Rational(1));
    const int rows = lambda.depth();
    std::vector<std::vector<int>> t(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        t[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(static_cast<size_t>(r))), 0);
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            ExpVec e(static_cast<size_t>(nvars), 0);
            for (const auto& row : t)
                for (int v : row) e[static_cast<size_t>(v - 1)] += 1;
            total.add_term(e, Rational(1));
            return;
        }
        const int nr = (c + 1 < static_cast<int>(t[static_cast<size_t>(r)].size())) ? r : r + 1;
        const int nc = (nr == r) ? c + 1 : 0;
        const int left = (c > 0) ? t[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] : 1;
        const int above =
            (r > 0 && c < static_cast<int>(t[static_cast<size_t>(r - 1)].size()))
                ? t[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1
                : 1;
        for (int v = std::max(left, above); v <= nvars; ++v) {
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            fill(nr, nc);
        }
    };
    fill(0, 0);
    return total;
}

}  // namespace

TEST_CASE("alternants: empty index gives the difference product") {
    for (const auto& seq : builtin_seqs()) {
        const SchurContext c2{seq, 2}, c3{seq, 3};
        CHECK(alternant(c2, {}, false) == difference_product(2));
        CHECK(alternant(c3, {}, false) == difference_product(3));
        CHECK(alternant(c3, {}, true) == difference_product(3));
    }
}

TEST_CASE("alternant 2x2 example for the forward difference") {
    const SchurContext ctx{make_sequence(DeltaOperator::forward_difference()), 2};
    // det[[x1(x1-1), x2(x2-1)], [1, 1]]
    const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    const MultiPoly expect =
        x1 * x1 - x1 - (x2 * x2 - x2);
    CHECK(alternant(ctx, {1}, false) == expect);
    CHECK_THROWS_AS(alternant(ctx, {-3}, false), NegativeRowIndex);
}

TEST_CASE("classical Schur polynomials for the differentiation operator") {
    const SchurContext ctx{make_sequence(DeltaOperator::differentiation()), 2};
    const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    CHECK(schur_poly(ctx, {2, 1}, false) == x1 * x1 * x2 + x1 * x2 * x2);
    CHECK(complete(ctx, 2, false) == x1 * x1 + x1 * x2 + x2 * x2);
}

TEST_CASE("tableau oracle: the differentiation case is the classical Schur") {
    const SequencePtr d = make_sequence(DeltaOperator::differentiation());
    for (int n = 1; n <= 3; ++n) {
        const SchurContext ctx{d, n};
        for (const Partition& lam : partitions_in_box(n, 4)) {
            if (lam.weight() > 4) continue;
            CHECK(schur_poly(ctx, lam.padded(n), false) == tableau_schur(lam, n));
            CHECK(schur_poly(ctx, lam.padded(n), true) == tableau_schur(lam, n));
        }
    }
}

TEST_CASE("forward-difference degree-one Schur polynomial") {
    const SchurContext ctx{make_sequence(DeltaOperator::forward_difference()), 2};
    // oracle: (x1(x1-1) - x2(x2-1))/(x1-x2)
    const MultiPoly q = alternant(ctx, {1}, false).divided_by_linear(0, 1);
    CHECK(schur_poly(ctx, {1}, false) == q);
    CHECK(q.str() == "x1 + x2 - 1");
    CHECK(elementary(ctx, 1, false) == q);
}

TEST_CASE("top-degree part is the classical Schur polynomial") {
    for (const auto& seq : builtin_seqs()) {
        const SchurContext ctx{seq, 3};
        for (const Partition& lam : partitions_in_box(3, 3)) {
            if (lam.weight() > 5) continue;
            CHECK(schur_poly(ctx, lam.padded(3), false).top_homogeneous() == tableau_schur(lam, 3));
        }
    }
}

TEST_CASE("symmetry under adjacent transpositions") {
    for (const auto& seq : builtin_seqs()) {
        for (int n = 2; n <= 3; ++n) {
            const SchurContext ctx{seq, n};
            for (const Partition& lam : partitions_in_box(std::min(n, 2), 2)) {
                for (int star = 0; star < 2; ++star) {
                    const MultiPoly s = schur_poly(ctx, lam.padded(n), star != 0);
                    for (int i = 0; i + 1 < n; ++i) CHECK(s == s.swapped(i, i + 1));
                }
            }
        }
    }
}

TEST_CASE("product of all variables appears as the top elementary function") {
    for (const auto& seq : builtin_seqs()) {
        for (int n = 1; n <= 3; ++n) {
            const SchurContext ctx{seq, n};
            MultiPoly prod = MultiPoly::constant(n, Rational(1));
            for (int i = 0; i < n; ++i) prod *= MultiPoly::variable(n, i);
            CHECK(elementary(ctx, n, false) == prod);
        }
    }
}

TEST_CASE("negative-index value conventions") {
    // With row indices used exactly as written, s*_{(-N,0,...)} evaluates to
    // (-1)^{N-1}/(x_1...x_N) while s*_{(-1,...,-1)} = 1/(x_1...x_N): sorting
    // the rows of the former into the staircase costs the sign.
    for (const auto& seq : builtin_seqs()) {
        for (int n = 1; n <= 3; ++n) {
            const SchurContext ctx{seq, n};
            const std::vector<Rational> pts{Rational(2), Rational(7, 2), Rational(5)};
            const std::vector<Rational> p(pts.begin(), pts.begin() + n);
            Rational prod(1);
            for (const auto& v : p) prod *= v;
            CHECK(eh_value(ctx, -n, true, p) ==
                  (n % 2 == 1 ? prod.inverse() : -prod.inverse()));
            const std::vector<long> allm1(static_cast<size_t>(n), -1);
            CHECK(schur_value(ctx, allm1, true, p) == prod.inverse());
            // h vanishes strictly between -N and 0
            for (long k = -n + 1; k < 0; ++k) CHECK(eh_value(ctx, k, false, p).is_zero());
        }
    }
}

TEST_CASE("schur_value matches polynomial evaluation in the polynomial regime") {
    for (const auto& seq : builtin_seqs()) {
        const SchurContext ctx{seq, 3};
        const std::vector<Rational> pts{Rational(2), Rational(5), Rational(9, 2)};
        for (const Partition& lam : partitions_in_box(3, 2)) {
            CHECK(schur_value(ctx, lam.padded(3), false, pts) ==
                  schur_poly(ctx, lam.padded(3), false).eval(pts));
        }
        CHECK_THROWS_AS(schur_value(ctx, {1}, false, {Rational(1), Rational(1), Rational(2)}),
                        RepeatedEvaluationPoint);
    }
}

TEST_CASE("variable shifts of symmetric functions") {
    const SchurContext ctx{make_sequence(DeltaOperator::forward_difference()), 2};
    const MultiPoly h1 = complete(ctx, 1, false);
    const MultiPoly y1 = MultiPoly::variable(3, 0), y2 = MultiPoly::variable(3, 1),
                    u = MultiPoly::variable(3, 2);
    // degree-one case: shifting adds N*u to the function itself
    CHECK(h1.shift_all_vars(+1) == h1.extended(3) + u.scaled(Rational(2)));
    CHECK(schur_poly(ctx, {1}, false).shift_all_vars(+1).str({"x1", "x2", "u"}) ==
          "x1 + x2 + 2*u - 1");
    // e_2 = x1 x2 shifted by -u
    const SchurContext dctx{make_sequence(DeltaOperator::differentiation()), 2};
    CHECK(elementary(dctx, 2, false).shift_all_vars(-1) == (y1 - u) * (y2 - u));
}

TEST_CASE("shifted determinant as a rational function of u") {
    const SchurContext ctx{make_sequence(DeltaOperator::forward_difference()), 2};
    const std::vector<Rational> pts{Rational(3), Rational(5)};
    // polynomial regime: must agree with evaluating the shifted polynomial
    for (long k = 0; k <= 3; ++k) {
        const RationalFunction f = schur_shifted_ratfun(ctx, {k}, false, pts);
        CHECK(f.is_polynomial());
        const MultiPoly hk = complete(ctx, static_cast<int>(k), false).shift_all_vars(+1);
        CHECK(f.numerator() ==
              hk.eval_except(2, {pts[0], pts[1], Rational(0)}));
    }
}

TEST_CASE("expansion coefficients") {
    for (const auto& seq : builtin_seqs()) {
        const SchurContext ctx{seq, 3};
        // d_{lambda,lambda}(0) = 1: the matrix is unitriangular at u = 0
        for (const Partition& lam : partitions_in_box(3, 3)) {
            const UniPoly d = d_coeff(ctx, lam, lam, false);
            CHECK(d.eval(Rational(0)) == Rational(1));
        }
        // 1x1 stable coefficient: p_(1)(u) = u for every normalized operator
        CHECK(dhat_coeff(seq, Partition({2}), Partition({1}), false).str("u") == "u");
    }
    const SchurContext one{make_sequence(DeltaOperator::forward_difference()), 1};
    CHECK(d_coeff(one, Partition({1}), Partition(), false).str("u") == "u");
}

TEST_CASE("size-stable coefficient against the rescaled plain coefficient") {
    // dhat = prod_j (mu_j + N - j)! / prod_i (lambda_i + N - i)! * d, and is
    // unchanged when N grows
    for (const auto& seq : builtin_seqs()) {
        for (const Partition& lam : partitions_in_box(2, 2)) {
            for (const Partition& mu : partitions_in_box(2, 2)) {
                const UniPoly expect = dhat_coeff(seq, lam, mu, false);
                for (int n = std::max(lam.depth(), std::max(mu.depth(), 1)); n <= 4; ++n) {
                    const SchurContext ctx{seq, n};
                    Rational scale(1);
                    for (int j = 1; j <= n; ++j)
                        scale *= factorial(mu.part(static_cast<size_t>(j - 1)) + n - j);
                    for (int i = 1; i <= n; ++i)
                        scale /= factorial(lam.part(static_cast<size_t>(i - 1)) + n - i);
                    CHECK(d_coeff(ctx, lam, mu, false).scaled(scale) == expect);
                }
            }
        }
    }
}
