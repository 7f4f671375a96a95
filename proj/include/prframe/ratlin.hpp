#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace prframe {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optionally signed). Throws Error(ParseError) on bad
/// input or a zero denominator. The result is in lowest terms.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

/// Dense row-major matrix of exact rationals.
///
/// Entries are always kept in lowest terms with a positive denominator: the
/// only mutating accessor is `set`, which canonicalizes.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Rational value);

    RatVector column(std::size_t c) const;
    RatVector row(std::size_t r) const;
    RatMatrix select_columns(std::span<const std::size_t> indices) const;
    RatMatrix select_rows(std::span<const std::size_t> indices) const;
    RatMatrix transpose() const;
    bool is_zero() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

RatVector operator*(const RatMatrix& a, const RatVector& x);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);

/// Exact rank over Q. Rows are cleared of denominators and reduced by
/// fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Rank of an integer matrix stored row-major in `entries` (destroyed).
std::size_t integer_rank(std::vector<Integer>& entries, std::size_t rows, std::size_t cols);

/// Basis of {x : M x = 0} as columns, each scaled to a primitive integer
/// vector. The result has M.cols() rows and M.cols() - rank(M) columns.
RatMatrix nullspace(const RatMatrix& m);

/// Inverse of a square matrix; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

/// Multiplies by the least common denominator, then divides by the content.
/// The result spans the same line as `v` (zero stays zero).
std::vector<Integer> primitive_integer_vector(const RatVector& v);
RatVector to_rational(const std::vector<Integer>& v);

struct Seed {
    std::uint64_t value = 0;
    friend bool operator==(Seed, Seed) = default;
};

/// Deterministically mixes a base seed with a stream index (splitmix64).
Seed derive_seed(Seed base, std::uint64_t stream);

/// Seeded integer source. Bounded draws use rejection sampling so the
/// stream is identical across standard library implementations.
class Rng {
public:
    explicit Rng(Seed seed) : engine_(seed.value) {}
    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

enum class Cell : std::uint8_t { Zero, One, Free };

/// Zero / fixed-one / free layout of a matrix to be sampled.
class ZeroNonzeroMask {
public:
    ZeroNonzeroMask(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, Cell::Zero) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Cell at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Cell cell) { cells_[r * cols_ + c] = cell; }
    bool nonzero(std::size_t r, std::size_t c) const { return at(r, c) != Cell::Zero; }

    friend bool operator==(const ZeroNonzeroMask&, const ZeroNonzeroMask&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Cell> cells_;
};

/// Zero cells stay 0, One cells become 1, Free cells get uniform integers in
/// [1, range_max] drawn in row-major order. Requires range_max >= 2.
RatMatrix sample_pattern(const ZeroNonzeroMask& pattern, std::uint64_t range_max, Seed seed);

}  // namespace prframe
