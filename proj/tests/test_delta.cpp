#include <doctest.h>

#include <random>

#include "umbral/delta.hpp"
#include "umbral/errors.hpp"

using namespace umbral;

namespace {

UniPoly linear(const Rational& a) {  // x + a
    return UniPoly::variable() + UniPoly(a);
}

UniPoly falling_factorial(int n, const Rational& start = Rational(0)) {
    // (x - start)(x - start - 1)...(x - start - n + 1)
    UniPoly p = UniPoly::one();
    for (int i = 0; i < n; ++i) p *= linear(-(start + Rational(i)));
    return p;
}

UniPoly rising_factorial(int n, const Rational& start = Rational(0)) {
    UniPoly p = UniPoly::one();
    for (int i = 0; i < n; ++i) p *= linear(start + Rational(i));
    return p;
}

UniPoly central_factorial(int n) {  // (x+(n-1)/2)(x+(n-3)/2)...(x-(n-1)/2)
    UniPoly p = UniPoly::one();
    for (int i = 0; i < n; ++i) p *= linear(Rational(n - 1 - 2 * i, 2));
    return p;
}

std::vector<DeltaOperator> builtins() {
    return {DeltaOperator::differentiation(), DeltaOperator::forward_difference(),
            DeltaOperator::backward_difference(), DeltaOperator::central_difference()};
}

DeltaOperator generic_dd2(int order = 12) {  // D + D^2 declared to `order`
    std::vector<Rational> a(static_cast<size_t>(order), Rational(0));
    a[0] = Rational(1);
    a[1] = Rational(1);
    return DeltaOperator::generic_series(a);
}

DeltaOperator generic_random(int order, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::vector<Rational> a(static_cast<size_t>(order), Rational(0));
    a[0] = Rational(1);
    for (size_t i = 1; i < a.size(); ++i) a[i] = Rational(num(rng), den(rng));
    return DeltaOperator::generic_series(a);
}

}  // namespace

TEST_CASE("functional action on polynomials") {
    const UniPoly x = UniPoly::variable();
    CHECK(DeltaOperator::forward_difference().apply(x * x).str() == "2*x + 1");
    // oracle: expand (x+1/2)^3 - (x-1/2)^3 directly
    const UniPoly x3 = x * x * x;
    const UniPoly oracle = x3.shift(Rational(1, 2)) - x3.shift(Rational(-1, 2));
    CHECK(DeltaOperator::central_difference().apply(x3) == oracle);
    CHECK(oracle.str() == "3*x^2 + 1/4");
    for (int n = 1; n <= 8; ++n)
        CHECK(DeltaOperator::differentiation().apply(UniPoly::monomial(n, Rational(1))) ==
              UniPoly::monomial(n - 1, Rational(n)));
}

TEST_CASE("exact action on rational functions (built-ins)") {
    const RationalFunction inv_x(UniPoly::one(), UniPoly::variable());
    // oracle: 1/(x+1) - 1/x by common-denominator subtraction
    const RationalFunction shifted = inv_x.shift(Rational(1));
    CHECK(DeltaOperator::forward_difference().apply(inv_x) == shifted - inv_x);
    CHECK(DeltaOperator::forward_difference().apply(inv_x).str() == "-1/(x^2 + x)");
    CHECK(DeltaOperator::differentiation().apply(inv_x).str() == "-1/x^2");
    const RationalFunction ctr = DeltaOperator::central_difference().apply(inv_x);
    CHECK(ctr == inv_x.shift(Rational(1, 2)) - inv_x.shift(Rational(-1, 2)));
    CHECK(ctr.str() == "-1/(x^2 - 1/4)");
    CHECK_THROWS_AS(generic_dd2().apply(inv_x), UnsupportedOperator);
}

TEST_CASE("basic polynomials of the named operators") {
    const BinomialSequence fwd(DeltaOperator::forward_difference());
    const BinomialSequence bwd(DeltaOperator::backward_difference());
    const BinomialSequence ctr(DeltaOperator::central_difference());
    const BinomialSequence dd(DeltaOperator::differentiation());
    CHECK(fwd.basic(3) == falling_factorial(3));
    CHECK(bwd.basic(2) == rising_factorial(2));
    CHECK(ctr.basic(3).str() == "x^3 - 1/4*x");
    for (int n = 0; n <= 8; ++n) {
        CHECK(dd.basic(n) == UniPoly::monomial(n, Rational(1)));
        CHECK(dd.conj(n) == UniPoly::monomial(n, Rational(1)));
    }
    CHECK(fwd.conj(2) == falling_factorial(2, Rational(1)));  // (x-1)(x-2)
    CHECK(ctr.conj(2) == central_factorial(2));
    // the closed product forms are never hardcoded internally; they are the
    // oracle here
    for (int n = 0; n <= 6; ++n) {
        CHECK(fwd.basic(n) == falling_factorial(n));
        CHECK(bwd.basic(n) == rising_factorial(n));
        CHECK(ctr.conj(n) == central_factorial(n));
        if (n >= 1) CHECK(ctr.basic(n) == central_factorial(n - 1) * UniPoly::variable());
    }
}

TEST_CASE("defining recurrence, normalization, monicity") {
    std::vector<DeltaOperator> ops = builtins();
    ops.push_back(generic_random(12, 123));
    ops.push_back(generic_dd2());
    for (const auto& op : ops) {
        const BinomialSequence seq(op);
        for (int n = 0; n <= 10; ++n) {
            const UniPoly p = seq.basic(n);
            CHECK(p.degree() == n);
            CHECK(p.is_monic());
            CHECK(p.eval(Rational(0)) == (n == 0 ? Rational(1) : Rational(0)));
            if (n >= 1) CHECK(op.apply(p) == seq.basic(n - 1).scaled(Rational(n)));
            // conjugate sequence satisfies the same recurrence
            if (n >= 1) CHECK(op.apply(seq.conj(n)) == seq.conj(n - 1).scaled(Rational(n)));
        }
    }
}

TEST_CASE("x p*_n = p_{n+1} across negative indices") {
    for (const auto& op : builtins()) {
        const BinomialSequence seq(op);
        const RationalFunction x((UniPoly::variable()));
        for (long n = -6; n <= 9; ++n)
            CHECK(x * seq.conj_ratfun(n) == seq.basic_ratfun(n + 1));
    }
}

TEST_CASE("negative indices: forced value, recurrence, closed form") {
    for (const auto& op : builtins()) {
        const BinomialSequence seq(op);
        CHECK(seq.conj_ratfun(-1).str() == "1/x");
        // downward/upward consistency: Q p*_n = n p*_{n-1}
        for (long n = -1; n >= -5; --n)
            CHECK(op.apply(seq.conj_ratfun(n)) == seq.conj_ratfun(n - 1).scaled(Rational(n)));
    }
    const BinomialSequence fwd(DeltaOperator::forward_difference());
    // oracle: one recurrence step p*_{-2} = -(forward difference of 1/x)
    const RationalFunction inv_x(UniPoly::one(), UniPoly::variable());
    CHECK(fwd.conj_ratfun(-2) == -DeltaOperator::forward_difference().apply(inv_x));
    // closed product form 1/(x(x+1)...(x+m-1)) for m <= 6
    for (int m = 1; m <= 6; ++m)
        CHECK(fwd.conj_ratfun(-m) == RationalFunction(UniPoly::one(), rising_factorial(m)));
    const BinomialSequence dd(DeltaOperator::differentiation());
    CHECK(dd.conj_ratfun(-3) == RationalFunction(UniPoly::one(), UniPoly::monomial(3, Rational(1))));
}

TEST_CASE("generic negative-index tails agree with the exact expansion") {
    // forward difference encoded as a declared series a_k = 1/k!
    std::vector<Rational> a;
    for (long k = 1; k <= 20; ++k) a.push_back(factorial(k).inverse());
    const BinomialSequence gen(DeltaOperator::generic_series(a));
    const BinomialSequence fwd(DeltaOperator::forward_difference());
    for (long n = -1; n >= -4; --n) {
        const LaurentTail approx = gen.conj_tail(n, 10);
        const LaurentTail exact = LaurentTail::of_ratfun(fwd.conj_ratfun(n), 14);
        CHECK(LaurentTail::mismatch_witness(approx, exact, approx.unknown_floor()) == "");
        CHECK((approx.is_exact() || approx.width() >= 10));
    }
}

TEST_CASE("generic-vs-builtin basic polynomials") {
    std::vector<Rational> a;
    for (long k = 1; k <= 12; ++k) a.push_back(factorial(k).inverse());
    const BinomialSequence gen(DeltaOperator::generic_series(a));
    const BinomialSequence fwd(DeltaOperator::forward_difference());
    for (int n = 0; n <= 10; ++n) CHECK(gen.basic(n) == fwd.basic(n));
    // declared order is enforced, not silently truncated
    CHECK_THROWS_AS(gen.basic(13), TruncationTooShort);
}

TEST_CASE("commutator operator R") {
    const BinomialSequence fwd(DeltaOperator::forward_difference());
    // R maps f to f(x+1) when Q is the forward difference
    CHECK(fwd.r_apply(falling_factorial(2), 1) == falling_factorial(2).shift(Rational(1)));
    const BinomialSequence dd(DeltaOperator::differentiation());
    for (int n = 0; n <= 5; ++n)
        CHECK(dd.r_apply(UniPoly::monomial(n, Rational(1)), 3) == UniPoly::monomial(n, Rational(1)));
    std::vector<DeltaOperator> ops = builtins();
    ops.push_back(generic_dd2(14));
    for (const auto& op : ops) {
        const BinomialSequence seq(op);
        for (int k = 0; k <= 10; ++k) {
            CHECK(seq.r_apply(seq.conj(k), 1) == seq.basic(k));   // R p*_k = p_k
            CHECK(seq.r_apply(seq.basic(k), -1) == seq.conj(k));  // p^(-1) = p*
        }
        CHECK(seq.shifted_basic(4, 0) == seq.basic(4));
    }
}

TEST_CASE("shifted-family convolution identity") {
    // p^{(a+b)}_n(x+y) = sum_k C(n,k) p^{(a)}_{n-k}(x) p^{(b)}_k(y)
    const MultiPoly xy = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    std::vector<DeltaOperator> ops = builtins();
    ops.push_back(generic_dd2(16));
    for (const auto& op : ops) {
        const BinomialSequence seq(op);
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (int n = 0; n <= 6; ++n) {
                    const MultiPoly lhs = MultiPoly::compose(seq.r_apply(seq.basic(n), a + b), xy);
                    MultiPoly rhs(2);
                    for (int k = 0; k <= n; ++k)
                        rhs += MultiPoly::from_unipoly(seq.r_apply(seq.basic(n - k), a), 2, 0) *
                               MultiPoly::from_unipoly(seq.r_apply(seq.basic(k), b), 2, 1)
                                   .scaled(binomial(n, k));
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("binomial-type check covers all operators") {
    CHECK(BinomialSequence(DeltaOperator::backward_difference()).check_binomial_type(6).passed());
    CHECK(BinomialSequence(DeltaOperator::differentiation()).check_binomial_type(6).passed());
    CHECK(BinomialSequence(generic_dd2()).check_binomial_type(5).passed());
    CHECK(BinomialSequence(generic_random(12, 4242)).check_binomial_type(5).passed());
}

TEST_CASE("series order errors are loud") {
    const DeltaOperator op = generic_dd2(4);
    CHECK_THROWS_AS(op.apply(UniPoly::monomial(5, Rational(1))), TruncationTooShort);
    CHECK_NOTHROW(op.apply(UniPoly::monomial(4, Rational(1))));
    CHECK_THROWS_AS(DeltaOperator::generic_series({Rational(2)}), std::invalid_argument);
}

TEST_CASE("series coefficients of the built-ins") {
    // forward: 1/k!; backward: alternating; central: odd terms 1/(4^j (2j+1)!)
    const DeltaOperator fwd = DeltaOperator::forward_difference();
    const DeltaOperator bwd = DeltaOperator::backward_difference();
    const DeltaOperator ctr = DeltaOperator::central_difference();
    for (long k = 1; k <= 9; ++k) {
        CHECK(fwd.series_coeff(static_cast<int>(k)) == factorial(k).inverse());
        CHECK(bwd.series_coeff(static_cast<int>(k)) ==
              (k % 2 ? factorial(k).inverse() : -factorial(k).inverse()));
        if (k % 2 == 0) {
            CHECK(ctr.series_coeff(static_cast<int>(k)).is_zero());
        } else {
            CHECK(ctr.series_coeff(static_cast<int>(k)) ==
                  (Rational(4).pow((k - 1) / 2) * factorial(k)).inverse());
        }
    }
}
