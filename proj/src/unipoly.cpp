#include "umbral/unipoly.hpp"

#include <stdexcept>

#include "umbral/errors.hpp"

namespace umbral {

UniPoly UniPoly::monomial(int deg, const Rational& c) {
    if (deg < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    UniPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::mul_xpow(int k) const {
    if (k < 0) throw std::invalid_argument("UniPoly::mul_xpow: negative exponent");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::shift(const Rational& a) const {
    // Horner: f(x+a) = (((c_d)(x+a) + c_{d-1})(x+a) + ...)
    UniPoly r;
    UniPoly xa = UniPoly::variable() + UniPoly(a);
    for (size_t i = c_.size(); i-- > 0;) r = r * xa + UniPoly(c_[i]);
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> v(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::negate_arg() const {
    UniPoly r(*this);
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

UniPoly UniPoly::divided_by_x() const {
    if (is_zero()) return UniPoly();
    if (!c_[0].is_zero()) throw NonExactDivision("UniPoly::divided_by_x: nonzero constant term");
    return UniPoly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("UniPoly::divrem: division by zero");
    UniPoly q, r = a;
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int d = r.degree() - b.degree();
        const Rational c = r.leading() / lb;
        q += UniPoly::monomial(d, c);
        r -= b.mul_xpow(d).scaled(c);
    }
    return {q, r};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.leading().inverse());
    return a;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
        }
        const bool unit = mag.is_one();
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) out += mag.str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace umbral
