#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgestar {

// A basis blade is a set of frame indices with strictly ascending order; the
// canonical representation is a bitmask over axis positions 0..n-1. All signs
// produced by reordering live in coefficients, never in the blade itself.
struct Blade {
    std::uint32_t bits = 0;

    int grade() const { return std::popcount(bits); }

    // Positions 0..n-1, ascending.
    std::vector<int> axes() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    // Frame labels 1..n, ascending (the e1..en naming).
    std::vector<int> indices() const {
        std::vector<int> out = axes();
        for (int& i : out) ++i;
        return out;
    }

    static Blade from_axes(const std::vector<int>& axes, int n) {
        Blade b;
        for (int a : axes) {
            if (a < 0 || a >= n) throw std::invalid_argument("blade axis out of range");
            std::uint32_t bit = std::uint32_t{1} << a;
            if (b.bits & bit) throw std::invalid_argument("repeated index in blade");
            b.bits |= bit;
        }
        return b;
    }

    friend bool operator==(const Blade&, const Blade&) = default;
};

inline std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

// Parity (+1/-1) of merging two disjoint ascending index sets into one
// ascending sequence, i.e. the sign of the permutation (a..., b...).
inline int merge_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
        int i = std::countr_zero(rest);
        inversions += std::popcount(a >> (i + 1));
    }
    return (inversions & 1) ? -1 : +1;
}

// Sign of the permutation (I, complement of I) of (1..n): the sg() factor of
// the complement map.
inline int complement_sign(std::uint32_t bits, int n) {
    return merge_sign(bits, full_mask(n) & ~bits);
}

// Ordering used for all blade-keyed containers: by grade, then by the
// lexicographic order of the ascending index tuples. This is also the
// printing order, so reports are deterministic.
struct BladeOrder {
    bool operator()(std::uint32_t a, std::uint32_t b) const {
        int ga = std::popcount(a), gb = std::popcount(b);
        if (ga != gb) return ga < gb;
        while (a != 0 && b != 0) {
            int ia = std::countr_zero(a), ib = std::countr_zero(b);
            if (ia != ib) return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return false;
    }
};

}  // namespace hodgestar
