#include "umbral/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace umbral {

namespace {
int sat_add(int f, int t) { return f == kExactFloor ? kExactFloor : f + t; }
}  // namespace

GridSeries::GridSeries(int nvars)
    : nv_(nvars),
      top_(static_cast<size_t>(nvars), 0),
      floor_(static_cast<size_t>(nvars), kExactFloor) {}

GridSeries GridSeries::constant(int nvars, const Rational& c) {
    GridSeries g(nvars);
    if (!c.is_zero()) g.t_.emplace(ExpVec(static_cast<size_t>(nvars), 0), c);
    return g;
}

GridSeries GridSeries::from_tail(const LaurentTail& t, int nvars, int var) {
    GridSeries g(nvars);
    if (t.known_zero()) return g;
    g.top_[static_cast<size_t>(var)] = t.top();
    g.floor_[static_cast<size_t>(var)] = t.unknown_floor();
    for (int e = t.top(); e > t.top() - t.width(); --e) {
        const Rational c = t.coeff_or_zero(e);
        if (c.is_zero()) continue;
        ExpVec ev(static_cast<size_t>(nvars), 0);
        ev[static_cast<size_t>(var)] = e;
        g.t_.emplace(std::move(ev), c);
    }
    return g;
}

GridSeries GridSeries::from_multipoly(const MultiPoly& p) {
    GridSeries g(p.nvars());
    for (int v = 0; v < p.nvars(); ++v)
        g.top_[static_cast<size_t>(v)] = std::max(0, p.degree_in(v));
    for (const auto& [e, c] : p.terms()) g.t_.emplace(e, c);
    return g;
}

GridSeries GridSeries::from_unipoly(const UniPoly& p, int nvars, int var) {
    return from_tail(LaurentTail::of_poly(p), nvars, var);
}

bool GridSeries::is_exact() const {
    for (int f : floor_)
        if (f != kExactFloor) return false;
    return true;
}

long GridSeries::max_total_degree() const {
    long s = 0;
    for (int t : top_) s += t;
    return s;
}

GridSeries GridSeries::operator-() const {
    GridSeries r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

void GridSeries::drop_out_of_window() {
    for (auto it = t_.begin(); it != t_.end();) {
        bool out = false;
        for (int j = 0; j < nv_ && !out; ++j) {
            out = it->first[static_cast<size_t>(j)] <= floor_[static_cast<size_t>(j)] ||
                  it->first[static_cast<size_t>(j)] > top_[static_cast<size_t>(j)];
        }
        it = out ? t_.erase(it) : std::next(it);
    }
}

GridSeries operator+(const GridSeries& a, const GridSeries& b) {
    if (a.nv_ != b.nv_) throw std::invalid_argument("GridSeries: variable count mismatch");
    GridSeries r(a.nv_);
    for (int j = 0; j < a.nv_; ++j) {
        r.top_[static_cast<size_t>(j)] = std::max(a.top_[static_cast<size_t>(j)], b.top_[static_cast<size_t>(j)]);
        r.floor_[static_cast<size_t>(j)] =
            std::max(a.floor_[static_cast<size_t>(j)], b.floor_[static_cast<size_t>(j)]);
    }
    r.t_ = a.t_;
    for (const auto& [e, c] : b.t_) {
        auto [it, ins] = r.t_.emplace(e, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    r.drop_out_of_window();
    return r;
}

GridSeries operator-(const GridSeries& a, const GridSeries& b) { return a + (-b); }

GridSeries operator*(const GridSeries& a, const GridSeries& b) {
    if (a.nv_ != b.nv_) throw std::invalid_argument("GridSeries: variable count mismatch");
    // exactly-zero operands annihilate regardless of windows
    if (a.t_.empty() && a.is_exact()) return GridSeries(a.nv_);
    if (b.t_.empty() && b.is_exact()) return GridSeries(a.nv_);
    GridSeries r(a.nv_);
    for (int j = 0; j < a.nv_; ++j) {
        r.top_[static_cast<size_t>(j)] = a.top_[static_cast<size_t>(j)] + b.top_[static_cast<size_t>(j)];
        r.floor_[static_cast<size_t>(j)] =
            std::max(sat_add(a.floor_[static_cast<size_t>(j)], b.top_[static_cast<size_t>(j)]),
                     sat_add(b.floor_[static_cast<size_t>(j)], a.top_[static_cast<size_t>(j)]));
    }
    ExpVec e(static_cast<size_t>(a.nv_), 0);
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            bool out = false;
            for (size_t k = 0; k < e.size(); ++k) {
                e[k] = ea[k] + eb[k];
                if (e[k] <= r.floor_[k]) out = true;
            }
            if (out) continue;
            auto [it, ins] = r.t_.emplace(e, ca * cb);
            if (!ins) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

GridSeries GridSeries::scaled(const Rational& s) const {
    if (s.is_zero()) {
        GridSeries r(nv_);
        r.top_ = top_;
        r.floor_ = floor_;  // the unknown part scales to an unknown zero region
        return r;
    }
    GridSeries r(*this);
    for (auto& [e, c] : r.t_) c *= s;
    return r;
}

void GridSeries::prune_to(const std::vector<int>& floors) {
    for (int j = 0; j < nv_; ++j)
        floor_[static_cast<size_t>(j)] = std::max(floor_[static_cast<size_t>(j)], floors[static_cast<size_t>(j)]);
    drop_out_of_window();
}

std::string GridSeries::mismatch_witness(const GridSeries& a, const GridSeries& b,
                                         const std::vector<int>& floors) {
    std::vector<int> f(floors);
    for (int j = 0; j < a.nv_; ++j)
        f[static_cast<size_t>(j)] = std::max({f[static_cast<size_t>(j)], a.floor_[static_cast<size_t>(j)],
                                              b.floor_[static_cast<size_t>(j)]});
    auto in_window = [&](const ExpVec& e) {
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] <= f[j]) return false;
        return true;
    };
    std::map<ExpVec, Rational, GrevlexLess> diff;
    for (const auto& [e, c] : a.t_)
        if (in_window(e)) diff[e] = c;
    for (const auto& [e, c] : b.t_) {
        if (!in_window(e)) continue;
        auto [it, ins] = diff.emplace(e, -c);
        if (!ins) {
            it->second -= c;
            if (it->second.is_zero()) diff.erase(it);
        }
    }
    if (diff.empty()) return "";
    const ExpVec& e = diff.rbegin()->first;
    std::string mono = "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i > 0) mono += ",";
        mono += std::to_string(e[i]);
    }
    mono += "]";
    auto coeff_of = [&](const GridSeries& g) {
        auto it = g.t_.find(e);
        return it == g.t_.end() ? Rational(0) : it->second;
    };
    return "monomial " + mono + ": " + coeff_of(a).str() + " vs " + coeff_of(b).str();
}

UGridPoly::UGridPoly(int nvars, int ucap) : nv_(nvars), ucap_(ucap) {}

UGridPoly UGridPoly::from_grid(const GridSeries& g, int ucap) {
    UGridPoly r(g.nvars(), ucap);
    r.c_.push_back(g);
    return r;
}

GridSeries UGridPoly::slice(int m) const {
    if (m >= 0 && m < static_cast<int>(c_.size())) return c_[static_cast<size_t>(m)];
    return GridSeries(nv_);
}

void UGridPoly::set_slice(int m, GridSeries g) {
    if (m > ucap_) return;
    if (static_cast<int>(c_.size()) <= m) c_.resize(static_cast<size_t>(m) + 1, GridSeries(nv_));
    c_[static_cast<size_t>(m)] = std::move(g);
}

UGridPoly operator+(const UGridPoly& a, const UGridPoly& b) {
    UGridPoly r(a.nv_, std::min(a.ucap_, b.ucap_));
    const size_t n = std::max(a.c_.size(), b.c_.size());
    for (size_t m = 0; m < n && static_cast<int>(m) <= r.ucap_; ++m) {
        GridSeries s(a.nv_);
        if (m < a.c_.size()) s += a.c_[m];
        if (m < b.c_.size()) s += b.c_[m];
        r.c_.push_back(std::move(s));
    }
    return r;
}

UGridPoly operator-(const UGridPoly& a, const UGridPoly& b) { return a + (-b); }

UGridPoly UGridPoly::operator-() const {
    UGridPoly r(*this);
    for (auto& g : r.c_) g = -g;
    return r;
}

UGridPoly operator*(const UGridPoly& a, const UGridPoly& b) {
    UGridPoly r(a.nv_, std::min(a.ucap_, b.ucap_));
    if (a.c_.empty() || b.c_.empty()) return r;
    const int top = std::min<int>(r.ucap_, static_cast<int>(a.c_.size() + b.c_.size()) - 2);
    r.c_.assign(static_cast<size_t>(top) + 1, GridSeries(a.nv_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i].has_terms() && a.c_[i].is_exact()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (static_cast<int>(i + j) > top) break;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

UGridPoly UGridPoly::scaled(const Rational& s) const {
    UGridPoly r(*this);
    for (auto& g : r.c_) g = g.scaled(s);
    return r;
}

UGridPoly UGridPoly::mul_upoly(const UniPoly& p) const {
    UGridPoly r(nv_, ucap_);
    const int top = std::min(ucap_, static_cast<int>(c_.size()) - 1 + p.degree());
    if (c_.empty() || p.is_zero() || top < 0) return r;
    r.c_.assign(static_cast<size_t>(top) + 1, GridSeries(nv_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (int d = 0; d <= p.degree(); ++d) {
            if (static_cast<int>(i) + d > top) break;
            const Rational coef = p.coeff(d);
            if (coef.is_zero()) continue;
            r.c_[i + static_cast<size_t>(d)] += c_[i].scaled(coef);
        }
    return r;
}

std::string UGridPoly::mismatch_witness(const UGridPoly& a, const UGridPoly& b,
                                        const std::vector<int>& floors) {
    const int cap = std::min(a.ucap_, b.ucap_);
    const int n = std::min<int>(cap, static_cast<int>(std::max(a.c_.size(), b.c_.size())) - 1);
    for (int m = 0; m <= n; ++m) {
        const std::string w = GridSeries::mismatch_witness(a.slice(m), b.slice(m), floors);
        if (!w.empty()) return "u^" + std::to_string(m) + " slice: " + w;
    }
    return "";
}

}  // namespace umbral
