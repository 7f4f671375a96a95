#pragma once

#include "prframe/ratlin.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace prframe {

namespace modp {

inline constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(t & P) + static_cast<std::uint64_t>(t >> 61);
    return r >= P ? r - P : r;
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t r = a + b;
    return r >= P ? r - P : r;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }

std::uint64_t reduce(const Integer& z);

}  // namespace modp

/// Span of a growing list of vectors over Z/p. Elimination avoids inverses:
/// every stored vector is zero at the pivots of the vectors stored before it,
/// so reducing against them in order clears each pivot for good.
class ModBasis {
public:
    explicit ModBasis(std::size_t dim) : dim_(dim) { rows_.reserve(dim * dim); pivots_.reserve(dim); }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool full() const noexcept { return pivots_.size() == dim_; }

    /// Adds `v` (length dim); returns true if the rank grew.
    bool insert(const std::uint64_t* v);
    bool contains(const std::uint64_t* v) const;

private:
    void reduce(std::uint64_t* w) const;

    std::size_t dim_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::size_t> pivots_;
};

/// The columns of a rational matrix, each rescaled to a primitive integer
/// vector, with cached residues mod p. Rank predicates ignore column scaling,
/// so every rank query below is a rank query about the original columns.
///
/// Subsets are 64-bit masks over the columns. Rank mod p never exceeds the
/// rank over Q, so a full mod-p rank is a proof of spanning; anything short of
/// that is settled by exact Bareiss elimination.
class ColumnSystem {
public:
    explicit ColumnSystem(const RatMatrix& columns);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t count() const noexcept { return count_; }

    const std::vector<Integer>& integer_column(std::size_t i) const { return ints_[i]; }
    const std::uint64_t* residues(std::size_t i) const { return res_.data() + i * dim_; }

    std::size_t rank_mod_p(std::uint64_t mask) const;
    std::size_t exact_rank(std::uint64_t mask) const;
    std::size_t rank(std::uint64_t mask) const;
    bool spans(std::uint64_t mask) const { return rank(mask) == dim_; }

    /// Exact: is column i in the span of the columns in mask?
    bool in_span(std::size_t i, std::uint64_t mask) const;

private:
    std::size_t dim_;
    std::size_t count_;
    std::vector<std::vector<Integer>> ints_;
    std::vector<std::uint64_t> res_;
};

}  // namespace prframe
