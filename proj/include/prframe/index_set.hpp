#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace prframe {

/// Subset of {0, ..., N-1} stored as a bitmask (N <= 64). Indices are
/// zero-based in the C++ API; reports written by the CLI are one-based.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

    static IndexSet full(std::size_t n) {
        if (n > 64) throw std::out_of_range("IndexSet holds at most 64 indices");
        return IndexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static IndexSet of(std::initializer_list<std::size_t> indices) {
        IndexSet s;
        for (auto i : indices) s = s.with(i);
        return s;
    }
    static IndexSet of(const std::vector<std::size_t>& indices) {
        IndexSet s;
        for (auto i : indices) s = s.with(i);
        return s;
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool contains(std::size_t i) const noexcept { return i < 64 && ((bits_ >> i) & 1U) != 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

    IndexSet with(std::size_t i) const {
        if (i >= 64) throw std::out_of_range("index out of range");
        return IndexSet(bits_ | (std::uint64_t{1} << i));
    }
    IndexSet without(std::size_t i) const {
        if (i >= 64) throw std::out_of_range("index out of range");
        return IndexSet(bits_ & ~(std::uint64_t{1} << i));
    }
    IndexSet complement(std::size_t n) const { return IndexSet(full(n).bits_ & ~bits_); }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        return out;
    }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }

private:
    std::uint64_t bits_ = 0;
};

/// Calls fn(mask) for every subset of {0..n-1} of the given size, in
/// increasing mask order, until fn returns true. Returns whether it did.
/// Requires n < 64.
template <class Fn>
bool any_subset_of_size(std::size_t n, std::size_t size, Fn&& fn) {
    if (n >= 64) throw std::out_of_range("subset enumeration needs n < 64");
    if (size > n) return false;
    if (size == 0) return fn(std::uint64_t{0});
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t m = (std::uint64_t{1} << size) - 1; m < end;) {
        if (fn(m)) return true;
        const std::uint64_t low = m & (~m + 1);
        const std::uint64_t ripple = m + low;
        m = (((ripple ^ m) >> 2) / low) | ripple;
    }
    return false;
}

}  // namespace prframe
