#include "umbral/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "umbral/errors.hpp"

namespace umbral {

Partition::Partition(std::vector<long> parts) : p_(std::move(parts)) {
    for (size_t i = 1; i < p_.size(); ++i)
        if (p_[i] > p_[i - 1]) throw std::invalid_argument("Partition: parts not weakly decreasing");
    if (!p_.empty() && p_.back() < 0) throw std::invalid_argument("Partition: negative part");
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

Partition Partition::parse(const std::string& s) {
    std::vector<long> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(std::stol(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) parts.push_back(std::stol(cur));
    return Partition(std::move(parts));
}

long Partition::weight() const {
    long w = 0;
    for (long x : p_) w += x;
    return w;
}

std::vector<long> Partition::padded(int len) const {
    if (depth() > len) throw OutOfBox("Partition: depth exceeds requested length");
    std::vector<long> v(p_);
    v.resize(static_cast<size_t>(len), 0);
    return v;
}

Partition Partition::conjugate() const {
    if (p_.empty()) return Partition();
    std::vector<long> c(static_cast<size_t>(p_[0]), 0);
    for (long x : p_)
        for (long j = 0; j < x; ++j) c[static_cast<size_t>(j)] += 1;
    return Partition(std::move(c));
}

Partition Partition::dagger(int M, int N) const {
    if (!fits_in_box(M, N)) throw OutOfBox("Partition::dagger: partition outside box");
    const std::vector<long> l = padded(M);
    std::vector<long> comp(static_cast<size_t>(M));
    for (int i = 0; i < M; ++i) comp[static_cast<size_t>(i)] = N - l[static_cast<size_t>(M - 1 - i)];
    return Partition(std::move(comp)).conjugate();
}

std::vector<long> Partition::ddagger(int M, int N) const {
    if (depth() > std::min(M, N)) throw OutOfBox("Partition::ddagger: depth exceeds min(M,N)");
    const std::vector<long> l = padded(N);
    std::vector<long> r(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) r[static_cast<size_t>(i)] = -M - l[static_cast<size_t>(N - 1 - i)];
    return r;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return std::lexicographical_compare(b.p_.begin(), b.p_.end(), a.p_.begin(), a.p_.end());
}

std::string Partition::str() const {
    if (p_.empty()) return "∅";
    std::string s = "(";
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(p_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_in_box(int M, int N) {
    std::vector<Partition> out;
    std::vector<long> cur;
    // depth-first over weakly decreasing parts bounded by N, depth <= M
    auto rec = [&](auto&& self, long maxpart) -> void {
        out.emplace_back(Partition(cur));
        if (static_cast<int>(cur.size()) == M) return;
        for (long p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    if (M >= 0 && N >= 0) rec(rec, N);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace umbral
