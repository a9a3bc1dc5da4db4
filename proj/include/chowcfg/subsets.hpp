#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chowcfg {

// Subsets of {1,...,m} are bitmasks with bit i-1 standing for index i.
// m is capped at 24 throughout: every subset family here is produced by
// explicit enumeration of up to 2^m sums.
inline constexpr int kMaxArity = 24;

using Mask = std::uint32_t;

inline int subset_size(Mask a) { return std::popcount(a); }

// Order on subsets as increasing index sequences: compare elementwise,
// shorter prefix first. Agrees with plain mask order only for nested sets.
inline bool subset_lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

inline std::vector<int> mask_members(Mask a) {
    std::vector<int> out;
    while (a != 0) {
        out.push_back(std::countr_zero(a) + 1);
        a &= a - 1;
    }
    return out;
}

// A sorted, duplicate-free subset of {1,...,m}.
class SubsetIndex {
public:
    SubsetIndex() : m_(0), mask_(0) {}
    SubsetIndex(int m, Mask mask) : m_(m), mask_(mask) { validate(); }
    SubsetIndex(int m, const std::vector<int>& members) : m_(m), mask_(0) {
        for (int i : members) {
            if (i < 1 || i > m) throw std::invalid_argument("subset member out of range");
            Mask bit = Mask{1} << (i - 1);
            if (mask_ & bit) throw std::invalid_argument("duplicate subset member");
            mask_ |= bit;
        }
        validate();
    }

    int m() const { return m_; }
    Mask mask() const { return mask_; }
    int size() const { return subset_size(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
    std::vector<int> members() const { return mask_members(mask_); }

    bool operator==(const SubsetIndex& o) const = default;

private:
    void validate() const {
        if (m_ < 0 || m_ > kMaxArity) throw std::invalid_argument("subset universe out of range");
        if (m_ < 32 && (mask_ >> m_) != 0) throw std::invalid_argument("subset member out of range");
    }

    int m_;
    Mask mask_;
};

// All size-s subsets of the index set underlying `pool`, emitted in the
// subset_lex order above.
template <class Fn>
void for_each_subset_of_size(const std::vector<int>& pool, int s, Fn&& fn) {
    if (s < 0 || s > static_cast<int>(pool.size())) return;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        Mask mask = 0;
        for (int i : idx) mask |= Mask{1} << (pool[i] - 1);
        fn(mask);
        int i = s - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace chowcfg
