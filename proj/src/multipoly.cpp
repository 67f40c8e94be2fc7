#include "umbral/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/errors.hpp"

namespace umbral {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.t_.emplace(ExpVec(static_cast<size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    ExpVec e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(var)] = 1;
    p.t_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("MultiPoly::from_unipoly: index out of range");
    MultiPoly r(nvars);
    for (int d = 0; d <= p.degree(); ++d) {
        const Rational c = p.coeff(d);
        if (c.is_zero()) continue;
        ExpVec e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(var)] = d;
        r.t_.emplace(std::move(e), c);
    }
    return r;
}

Rational MultiPoly::coeff(const ExpVec& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational(0) : it->second;
}

long MultiPoly::total_degree() const {
    if (t_.empty()) return -1;
    long deg = 0;
    const ExpVec& e = t_.rbegin()->first;  // grevlex max has max total degree
    for (int x : e) deg += x;
    return deg;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nv_ != b.nv_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r(a);
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.nv_ != b.nv_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r(a);
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nv_ != b.nv_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly r(a.nv_);
    ExpVec e(static_cast<size_t>(a.nv_), 0);
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    if (s.is_zero()) return MultiPoly(nv_);
    MultiPoly r(*this);
    for (auto& [e, c] : r.t_) c *= s;
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& pts) const {
    if (static_cast<int>(pts.size()) != nv_)
        throw std::invalid_argument("MultiPoly::eval: wrong number of points");
    Rational total(0);
    for (const auto& [e, c] : t_) {
        Rational m = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) m *= pts[i].pow(e[i]);
        total += m;
    }
    return total;
}

UniPoly MultiPoly::eval_except(int var, const std::vector<Rational>& pts) const {
    if (static_cast<int>(pts.size()) != nv_)
        throw std::invalid_argument("MultiPoly::eval_except: wrong number of points");
    std::vector<Rational> acc(static_cast<size_t>(degree_in(var)) + 1, Rational(0));
    for (const auto& [e, c] : t_) {
        Rational m = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0) m *= pts[i].pow(e[i]);
        acc[static_cast<size_t>(e[static_cast<size_t>(var)])] += m;
    }
    return UniPoly(std::move(acc));
}

MultiPoly MultiPoly::subst_value(int var, const Rational& value) const {
    MultiPoly r(nv_ - 1);
    for (const auto& [e, c] : t_) {
        ExpVec ne;
        ne.reserve(e.size() - 1);
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var) ne.push_back(e[i]);
        const int k = e[static_cast<size_t>(var)];
        r.add_term(ne, k == 0 ? c : c * value.pow(k));
    }
    return r;
}

MultiPoly MultiPoly::extended(int new_nvars) const {
    if (new_nvars < nv_) throw std::invalid_argument("MultiPoly::extended: shrinking ring");
    MultiPoly r(new_nvars);
    for (const auto& [e, c] : t_) {
        ExpVec ne(e);
        ne.resize(static_cast<size_t>(new_nvars), 0);
        r.t_.emplace(std::move(ne), c);
    }
    return r;
}

MultiPoly MultiPoly::embedded(int new_nvars, int offset) const {
    if (offset < 0 || offset + nv_ > new_nvars)
        throw std::invalid_argument("MultiPoly::embedded: slot out of range");
    MultiPoly r(new_nvars);
    for (const auto& [e, c] : t_) {
        ExpVec ne(static_cast<size_t>(new_nvars), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[static_cast<size_t>(offset) + i] = e[i];
        r.t_.emplace(std::move(ne), c);
    }
    return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    MultiPoly r(nv_);
    for (const auto& [e, c] : t_) {
        ExpVec ne(static_cast<size_t>(nv_), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[static_cast<size_t>(perm[i])] = e[i];
        r.t_.emplace(std::move(ne), c);
    }
    return r;
}

MultiPoly MultiPoly::swapped(int i, int j) const {
    std::vector<int> perm(static_cast<size_t>(nv_));
    for (int k = 0; k < nv_; ++k) perm[static_cast<size_t>(k)] = k;
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    return permuted(perm);
}

MultiPoly MultiPoly::shifted_var(int var, const Rational& a) const {
    if (a.is_zero()) return *this;
    MultiPoly r(nv_);
    for (const auto& [e, c] : t_) {
        const int d = e[static_cast<size_t>(var)];
        ExpVec ne(e);
        for (int k = 0; k <= d; ++k) {
            ne[static_cast<size_t>(var)] = d - k;
            r.add_term(ne, c * binomial(d, k) * a.pow(k));
        }
    }
    return r;
}

MultiPoly MultiPoly::shift_all_vars(int sign) const {
    const Rational s(sign);
    MultiPoly r(nv_ + 1);
    ExpVec ne(static_cast<size_t>(nv_) + 1, 0);
    for (const auto& [e, c] : t_) {
        // expand prod_i (x_i + s*u)^{e_i} one variable at a time
        std::map<ExpVec, Rational, GrevlexLess> acc;
        ExpVec base(static_cast<size_t>(nv_) + 1, 0);
        acc.emplace(base, c);
        for (int i = 0; i < nv_; ++i) {
            const int d = e[static_cast<size_t>(i)];
            if (d == 0) continue;
            std::map<ExpVec, Rational, GrevlexLess> next;
            for (const auto& [pe, pc] : acc) {
                for (int k = 0; k <= d; ++k) {
                    ExpVec q(pe);
                    q[static_cast<size_t>(i)] += d - k;
                    q[static_cast<size_t>(nv_)] += k;
                    const Rational add = pc * binomial(d, k) * s.pow(k);
                    auto [it, ins] = next.emplace(std::move(q), add);
                    if (!ins) it->second += add;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [pe, pc] : acc) r.add_term(pe, pc);
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nv_);
    for (const auto& [e, c] : t_) {
        const int d = e[static_cast<size_t>(var)];
        if (d == 0) continue;
        ExpVec ne(e);
        ne[static_cast<size_t>(var)] = d - 1;
        r.add_term(ne, c * Rational(d));
    }
    return r;
}

MultiPoly MultiPoly::divided_by_linear(int i, int j) const {
    MultiPoly num(*this);
    MultiPoly q(nv_);
    while (!num.t_.empty()) {
        auto it = std::prev(num.t_.end());  // grevlex-largest term
        const Rational c = it->second;
        ExpVec e = it->first;
        if (e[static_cast<size_t>(i)] == 0)
            throw NonExactDivision("MultiPoly::divided_by_linear: remainder");
        e[static_cast<size_t>(i)] -= 1;
        q.add_term(e, c);
        num.t_.erase(it);  // the x_i part of c*x^e*(x_i - x_j) cancels exactly
        ExpVec e2(e);
        e2[static_cast<size_t>(j)] += 1;
        num.add_term(e2, c);
    }
    return q;
}

MultiPoly MultiPoly::divided_by_difference_product() const {
    MultiPoly r(*this);
    for (int i = 0; i < nv_; ++i)
        for (int j = i + 1; j < nv_; ++j) r = r.divided_by_linear(i, j);
    return r;
}

MultiPoly MultiPoly::top_homogeneous() const {
    MultiPoly r(nv_);
    const long deg = total_degree();
    for (const auto& [e, c] : t_) {
        long d = 0;
        for (int x : e) d += x;
        if (d == deg) r.t_.emplace(e, c);
    }
    return r;
}

MultiPoly MultiPoly::compose(const UniPoly& p, const MultiPoly& arg) {
    MultiPoly r(arg.nvars());
    for (int i = p.degree(); i >= 0; --i) {
        r = r * arg;
        r += MultiPoly::constant(arg.nvars(), p.coeff(i));
    }
    return r;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const ExpVec& e = it->first;
        const Rational& c = it->second;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += mono;
        }
    }
    return out;
}

std::string MultiPoly::str() const {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(nv_));
    for (int i = 0; i < nv_; ++i) names.push_back("x" + std::to_string(i + 1));
    return str(names);
}

std::string multipoly_mismatch(const MultiPoly& a, const MultiPoly& b) {
    const MultiPoly diff = a - b;
    if (diff.is_zero()) return "";
    const ExpVec& e = diff.terms().rbegin()->first;
    std::string mono = "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i > 0) mono += ",";
        mono += std::to_string(e[i]);
    }
    mono += "]";
    return "monomial " + mono + ": " + a.coeff(e).str() + " vs " + b.coeff(e).str();
}

MultiPoly difference_product(int nvars) {
    MultiPoly r = MultiPoly::constant(nvars, Rational(1));
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
            r *= MultiPoly::variable(nvars, i) - MultiPoly::variable(nvars, j);
    return r;
}

Rational difference_product_value(const std::vector<Rational>& pts) {
    Rational r(1);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) r *= pts[i] - pts[j];
    return r;
}

}  // namespace umbral
