#pragma once

#include <string>
#include <vector>

namespace umbral {

// Integer partition: weakly decreasing parts >= 0, trailing zeros stripped.
// General signatures (weakly decreasing integer vectors, possibly negative)
// are passed around as plain std::vector<long>.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);
    static Partition parse(const std::string& s);  // "2,1" or "0"/"" for empty

    const std::vector<long>& parts() const { return p_; }
    long part(size_t i) const { return i < p_.size() ? p_[i] : 0; }  // 0-based
    int depth() const { return static_cast<int>(p_.size()); }
    long weight() const;
    bool empty() const { return p_.empty(); }

    std::vector<long> padded(int len) const;  // zero-padded to len

    Partition conjugate() const;

    // Complement-conjugate in the M x N box: (N-l_M, ..., N-l_1)'.
    Partition dagger(int M, int N) const;

    // Negative mirror index of length N: (-M-l_N, ..., -M-l_1).
    std::vector<long> ddagger(int M, int N) const;

    bool fits_in_box(int M, int N) const { return depth() <= M && part(0) <= N; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator<(const Partition& a, const Partition& b);  // enumeration order

    std::string str() const;

private:
    std::vector<long> p_;
};

// All partitions in the M x N box, each exactly once, in the documented
// deterministic order: ascending weight, then lexicographically descending
// part vectors.
std::vector<Partition> partitions_in_box(int M, int N);

}  // namespace umbral
