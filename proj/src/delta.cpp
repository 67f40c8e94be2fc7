#include "umbral/delta.hpp"

#include <climits>
#include <stdexcept>

#include "umbral/errors.hpp"

namespace umbral {

DeltaOperator DeltaOperator::differentiation() {
    return DeltaOperator(DeltaKind::Differentiation, {});
}
DeltaOperator DeltaOperator::forward_difference() {
    return DeltaOperator(DeltaKind::ForwardDiff, {});
}
DeltaOperator DeltaOperator::backward_difference() {
    return DeltaOperator(DeltaKind::BackwardDiff, {});
}
DeltaOperator DeltaOperator::central_difference() {
    return DeltaOperator(DeltaKind::CentralDiff, {});
}

DeltaOperator DeltaOperator::generic_series(std::vector<Rational> coeffs) {
    if (coeffs.empty() || !coeffs[0].is_one())
        throw std::invalid_argument("DeltaOperator: series must start with a_1 = 1");
    return DeltaOperator(DeltaKind::GenericSeries, std::move(coeffs));
}

int DeltaOperator::series_order() const {
    return kind_ == DeltaKind::GenericSeries ? static_cast<int>(series_.size()) : INT_MAX;
}

Rational DeltaOperator::series_coeff(int k) const {
    if (k < 1) throw std::invalid_argument("DeltaOperator::series_coeff: k >= 1 required");
    switch (kind_) {
        case DeltaKind::Differentiation:
            return k == 1 ? Rational(1) : Rational(0);
        case DeltaKind::ForwardDiff:
            // e^D - 1
            return factorial(k).inverse();
        case DeltaKind::BackwardDiff:
            // 1 - e^{-D}
            return (k % 2 == 1) ? factorial(k).inverse() : -factorial(k).inverse();
        case DeltaKind::CentralDiff:
            // e^{D/2} - e^{-D/2}
            if (k % 2 == 0) return Rational(0);
            return (Rational(4).pow((k - 1) / 2) * factorial(k)).inverse();
        case DeltaKind::GenericSeries:
            if (k > static_cast<int>(series_.size()))
                throw TruncationTooShort("DeltaOperator: series coefficient beyond declared order");
            return series_[static_cast<size_t>(k - 1)];
    }
    return Rational(0);
}

UniPoly DeltaOperator::apply(const UniPoly& f) const {
    switch (kind_) {
        case DeltaKind::Differentiation:
            return f.derivative();
        case DeltaKind::ForwardDiff:
            return f.shift(Rational(1)) - f;
        case DeltaKind::BackwardDiff:
            return f - f.shift(Rational(-1));
        case DeltaKind::CentralDiff:
            return f.shift(Rational(1, 2)) - f.shift(Rational(-1, 2));
        case DeltaKind::GenericSeries: {
            if (f.degree() > series_order())
                throw TruncationTooShort("DeltaOperator::apply: polynomial degree exceeds series order");
            UniPoly acc, d = f;
            for (int k = 1; k <= f.degree(); ++k) {
                d = d.derivative();
                acc += d.scaled(series_[static_cast<size_t>(k - 1)]);
            }
            return acc;
        }
    }
    return UniPoly();
}

RationalFunction DeltaOperator::apply(const RationalFunction& f) const {
    switch (kind_) {
        case DeltaKind::Differentiation:
            return f.derivative();
        case DeltaKind::ForwardDiff:
            return f.shift(Rational(1)) - f;
        case DeltaKind::BackwardDiff:
            return f - f.shift(Rational(-1));
        case DeltaKind::CentralDiff:
            return f.shift(Rational(1, 2)) - f.shift(Rational(-1, 2));
        case DeltaKind::GenericSeries:
            throw UnsupportedOperator("DeltaOperator: no exact rational-function rule for a generic series");
    }
    return RationalFunction();
}

LaurentTail DeltaOperator::apply(const LaurentTail& f, int width) const {
    if (f.known_zero()) return LaurentTail();
    if (kind_ == DeltaKind::Differentiation) {
        // exact termwise derivative
        LaurentTail acc;
        const int low = f.top() - f.width() + 1;
        for (int e = f.top(); e >= low; --e) {
            const Rational c = f.coeff_or_zero(e);
            if (!c.is_zero() && e != 0) acc += LaurentTail::exact_monomial(e - 1, c * Rational(e));
        }
        if (!f.is_exact()) acc = acc.truncated_to_floor(f.unknown_floor() - 1);
        return acc;
    }
    const int top_out = f.top() - 1;
    const int order = series_order();
    int floor_out = top_out - width;
    if (f.unknown_floor() != kExactFloor) floor_out = std::max(floor_out, f.unknown_floor() - 1);
    if (order != INT_MAX) floor_out = std::max(floor_out, f.top() - order - 1);
    if (floor_out >= top_out) throw InsufficientPrecision("DeltaOperator::apply: empty window");
    // coefficient of x^e: sum over source exponents m = e+k of a_k * m^(k) factors
    std::vector<Rational> coeffs(static_cast<size_t>(top_out - floor_out), Rational(0));
    for (int e = top_out; e > floor_out; --e) {
        Rational acc(0);
        for (int m = e + 1; m <= f.top(); ++m) {
            const Rational c = f.coeff_or_zero(m);
            if (c.is_zero()) continue;
            const int k = m - e;
            const Rational a = series_coeff(k);
            if (a.is_zero()) continue;
            acc += a * falling(m, k) * c;
        }
        coeffs[static_cast<size_t>(top_out - e)] = acc;
    }
    LaurentTail acc;
    for (int e = top_out; e > floor_out; --e) {
        const Rational& c = coeffs[static_cast<size_t>(top_out - e)];
        if (!c.is_zero()) acc += LaurentTail::exact_monomial(e, c);
    }
    return acc.truncated_to_floor(floor_out);
}

MultiPoly DeltaOperator::apply_in_var(const MultiPoly& f, int var) const {
    switch (kind_) {
        case DeltaKind::Differentiation:
            return f.derivative(var);
        case DeltaKind::ForwardDiff:
            return f.shifted_var(var, Rational(1)) - f;
        case DeltaKind::BackwardDiff:
            return f - f.shifted_var(var, Rational(-1));
        case DeltaKind::CentralDiff:
            return f.shifted_var(var, Rational(1, 2)) - f.shifted_var(var, Rational(-1, 2));
        case DeltaKind::GenericSeries: {
            if (f.degree_in(var) > series_order())
                throw TruncationTooShort("DeltaOperator::apply_in_var: degree exceeds series order");
            const int dv = f.degree_in(var);
            MultiPoly acc(f.nvars()), d = f;
            for (int k = 1; k <= dv; ++k) {
                d = d.derivative(var);
                if (d.is_zero()) break;
                acc += d.scaled(series_[static_cast<size_t>(k - 1)]);
            }
            return acc;
        }
    }
    return MultiPoly(f.nvars());
}

std::string DeltaOperator::name() const {
    switch (kind_) {
        case DeltaKind::Differentiation: return "d";
        case DeltaKind::ForwardDiff: return "fwd";
        case DeltaKind::BackwardDiff: return "bwd";
        case DeltaKind::CentralDiff: return "ctr";
        case DeltaKind::GenericSeries: {
            std::string s = "series:";
            for (size_t i = 1; i < series_.size(); ++i) {
                if (i > 1) s += ",";
                s += series_[i].str();
            }
            return s;
        }
    }
    return "?";
}

const UniPoly& BinomialSequence::ensure_q_monomial_locked(int j) const {
    while (static_cast<int>(q_monomial_.size()) <= j) {
        const int d = static_cast<int>(q_monomial_.size());
        q_monomial_.push_back(op_.apply(UniPoly::monomial(d, Rational(1))));
    }
    return q_monomial_[static_cast<size_t>(j)];
}

const UniPoly& BinomialSequence::ensure_basic_locked(int n) const {
    if (basic_.empty()) basic_.push_back(UniPoly::one());
    while (static_cast<int>(basic_.size()) <= n) {
        const int m = static_cast<int>(basic_.size());
        // Monic ansatz p_m = x^m + sum_{j<m} c_j x^j solved from
        // Q p_m = m p_{m-1} by descending degrees; c_0 = 0 is forced.
        UniPoly target = basic_[static_cast<size_t>(m - 1)].scaled(Rational(m));
        UniPoly residue = target - ensure_q_monomial_locked(m);
        std::vector<Rational> coeffs(static_cast<size_t>(m) + 1, Rational(0));
        coeffs[static_cast<size_t>(m)] = Rational(1);
        for (int j = m - 1; j >= 1; --j) {
            const Rational c = residue.coeff(j - 1) / Rational(j);
            coeffs[static_cast<size_t>(j)] = c;
            if (!c.is_zero()) residue -= ensure_q_monomial_locked(j).scaled(c);
        }
        if (!residue.is_zero())
            throw std::logic_error("BinomialSequence: triangular solve left a residue");
        basic_.push_back(UniPoly(std::move(coeffs)));
    }
    return basic_[static_cast<size_t>(n)];
}

UniPoly BinomialSequence::basic(int n) const {
    if (n < 0) throw std::invalid_argument("BinomialSequence::basic: use basic_ratfun for n < 0");
    std::lock_guard<std::mutex> lock(mu_);
    return ensure_basic_locked(n);
}

UniPoly BinomialSequence::conj(int n) const {
    if (n < 0) throw std::invalid_argument("BinomialSequence::conj: use conj_ratfun for n < 0");
    std::lock_guard<std::mutex> lock(mu_);
    return ensure_basic_locked(n + 1).divided_by_x();
}

UniPoly BinomialSequence::divided_basic(int n) const {
    return basic(n).scaled(factorial(n).inverse());
}

RationalFunction BinomialSequence::conj_ratfun(long n) const {
    if (n >= 0) return RationalFunction(conj(static_cast<int>(n)));
    if (!op_.is_builtin())
        throw UnsupportedOperator("BinomialSequence: negative indices of a generic series are tails only");
    std::lock_guard<std::mutex> lock(mu_);
    if (neg_conj_.empty())
        neg_conj_.push_back(RationalFunction(UniPoly::one(), UniPoly::variable()));  // p*_{-1}
    while (static_cast<long>(neg_conj_.size()) < -n) {
        // p*_{m-1} = (1/m) Q p*_m, descending from m = -1
        const long m = -static_cast<long>(neg_conj_.size());
        neg_conj_.push_back(op_.apply(neg_conj_.back()).scaled(Rational(m).inverse()));
    }
    return neg_conj_[static_cast<size_t>(-n - 1)];
}

RationalFunction BinomialSequence::basic_ratfun(long n) const {
    if (n >= 0) return RationalFunction(basic(static_cast<int>(n)));
    // p_n = x p*_{n-1}
    return conj_ratfun(n - 1) * RationalFunction(UniPoly::variable());
}

LaurentTail BinomialSequence::conj_tail(long n, int width) const {
    if (n >= 0) return LaurentTail::of_poly(conj(static_cast<int>(n)));
    if (op_.is_builtin()) return LaurentTail::of_ratfun(conj_ratfun(n), width);
    LaurentTail t = LaurentTail::exact_monomial(-1, Rational(1));  // p*_{-1} = x^{-1}
    for (long m = -1; m > n; --m) t = op_.apply(t, width).scaled(Rational(m).inverse());
    return t;
}

LaurentTail BinomialSequence::basic_tail(long n, int width) const {
    if (n >= 0) return LaurentTail::of_poly(basic(static_cast<int>(n)));
    return conj_tail(n - 1, width).mul_xpow(1);
}

UniPoly BinomialSequence::r_apply(const UniPoly& f, long a) const {
    auto r_once = [this](const UniPoly& g) {
        const UniPoly xg = g.mul_xpow(1);
        return op_.apply(xg) - op_.apply(g).mul_xpow(1);
    };
    UniPoly cur = f;
    if (a >= 0) {
        for (long i = 0; i < a; ++i) cur = r_once(cur);
        return cur;
    }
    for (long i = 0; i < -a; ++i) {
        // solve R g = cur; R is unitriangular on the monomial basis
        UniPoly g, residue = cur;
        while (!residue.is_zero()) {
            const int d = residue.degree();
            const UniPoly term = UniPoly::monomial(d, residue.leading());
            g += term;
            residue -= r_once(term);
            if (!residue.is_zero() && residue.degree() >= d)
                throw std::logic_error("BinomialSequence::r_apply: back-substitution failed");
        }
        cur = g;
    }
    return cur;
}

UniPoly BinomialSequence::shifted_basic(int n, long a) const { return r_apply(basic(n), a); }

VerificationReport BinomialSequence::check_binomial_type(int n_max) const {
    const std::string id = "binomial-type";
    const std::string params = "Q=" + op_.name() + " n<=" + std::to_string(n_max);
    const MultiPoly xy = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    for (int n = 0; n <= n_max; ++n) {
        const MultiPoly lhs1 = MultiPoly::compose(basic(n), xy);
        const MultiPoly lhs2 = MultiPoly::compose(conj(n), xy);
        MultiPoly rhs1(2), rhs2(2), rhs3(2);
        for (int k = 0; k <= n; ++k) {
            const Rational b = binomial(n, k);
            const MultiPoly px = MultiPoly::from_unipoly(basic(k), 2, 0);
            const MultiPoly qx = MultiPoly::from_unipoly(conj(k), 2, 0);
            const MultiPoly py = MultiPoly::from_unipoly(basic(n - k), 2, 1);
            const MultiPoly qy = MultiPoly::from_unipoly(conj(n - k), 2, 1);
            rhs1 += (px * py).scaled(b);
            rhs2 += (px * qy).scaled(b);
            rhs3 += (qx * py).scaled(b);
        }
        if (!(lhs1 == rhs1))
            return make_fail(id, params, "basic identity fails at n=" + std::to_string(n));
        if (!(lhs2 == rhs2))
            return make_fail(id, params, "conjugate expansion (p,p*) fails at n=" + std::to_string(n));
        if (!(lhs2 == rhs3))
            return make_fail(id, params, "conjugate expansion (p*,p) fails at n=" + std::to_string(n));
    }
    return make_pass(id, params);
}

bool BinomialSequence::schur_lookup(const SchurKey& k, MultiPoly* out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = schur_memo_.find(k);
    if (it == schur_memo_.end()) return false;
    *out = it->second;
    return true;
}

void BinomialSequence::schur_store(const SchurKey& k, const MultiPoly& v) const {
    std::lock_guard<std::mutex> lock(mu_);
    schur_memo_.emplace(k, v);
}

SequencePtr make_sequence(const DeltaOperator& op) {
    return std::make_shared<const BinomialSequence>(op);
}

}  // namespace umbral
