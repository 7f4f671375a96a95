#pragma once

#include "prframe/index_set.hpp"
#include "prframe/modular.hpp"
#include "prframe/ratlin.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace prframe {

/// A spanning sequence f_0, ..., f_{N-1} in Q^n, stored as the columns of an
/// n x N matrix. Construction fails with NotAFrame if the columns do not
/// span; N is limited to 64 so that subsets fit in a machine word.
class Frame {
public:
    explicit Frame(RatMatrix vectors);
    static Frame from_columns(const std::vector<RatVector>& vectors, std::size_t dim);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    std::size_t size() const noexcept { return matrix_.cols(); }
    const RatMatrix& matrix() const noexcept { return matrix_; }
    RatVector vector(std::size_t i) const { return matrix_.column(i); }
    const ColumnSystem& columns() const noexcept { return *columns_; }

    /// The vectors indexed by `subset`, in order. Throws NotAFrame if they
    /// do not span.
    Frame subframe(IndexSet subset) const;

    friend bool operator==(const Frame& a, const Frame& b) { return a.matrix_ == b.matrix_; }

private:
    RatMatrix matrix_;
    std::shared_ptr<const ColumnSystem> columns_;
};

std::size_t span_dim(const Frame& frame, IndexSet subset);

struct ComplementResult {
    bool holds = false;
    /// Set when `holds` is false: a subset such that neither it nor its
    /// complement spans.
    std::optional<IndexSet> failing;
};

/// Decides whether every subset or its complement spans. Only subsets that
/// contain the first vector are considered (the condition is symmetric).
/// The enumeration is a depth-first walk over these subsets that skips a
/// whole branch once either side already spans, since adding vectors cannot
/// undo that.
ComplementResult has_complement_property(const Frame& frame);

/// Over the reals this coincides with the complement property.
bool is_phase_retrievable(const Frame& frame);

/// Size of the smallest linearly dependent subset; N + 1 if there is none.
std::size_t spark(const Frame& frame);

struct ExactnessReport {
    bool exact = false;
    bool phase_retrievable = false;
    std::optional<IndexSet> failing;       ///< when not phase retrievable
    std::vector<std::size_t> removable;    ///< indices whose removal keeps PR
};

/// Phase retrievable, and removing any single vector destroys that. Single
/// removals suffice: a subset of a non-PR frame is never PR.
ExactnessReport is_exact_pr_frame(const Frame& frame);

// Engines over an arbitrary column system (the columns need not span). These
// back the frame-level calls above and the subspace module, whose projected
// frames are plain vector lists.

/// Complement property in Q^dim for the columns selected by `active`.
ComplementResult complement_property(const ColumnSystem& columns, std::uint64_t active);

/// min over subsets L of `active` of max(rank L, rank(active \ L)).
std::size_t partition_width(const ColumnSystem& columns, std::uint64_t active);

}  // namespace prframe
