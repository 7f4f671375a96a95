#pragma once

#include "prframe/frames.hpp"
#include "prframe/subspaces.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prframe {

/// Zero / one / free layout of an n x N construction matrix.
///
/// Structural conditions (rows and columns are zero-based here):
///   P1  the n x n identity appears among the columns;
///   P2  every other column has a zero and at least two nonzero cells;
///   P3  every row has exactly n nonzero cells;
///   P4  for every row i there are distinct columns j_0..j_{n-1} with cells
///       (i, j_l) and (l, j_l) nonzero (a perfect bipartite matching).
class PatternMatrix {
public:
    explicit PatternMatrix(ZeroNonzeroMask mask) : mask_(std::move(mask)) {}

    const ZeroNonzeroMask& mask() const noexcept { return mask_; }
    std::size_t rows() const noexcept { return mask_.rows(); }
    std::size_t cols() const noexcept { return mask_.cols(); }

    /// For each row l, the first column equal to e_l with a One cell.
    std::vector<std::optional<std::size_t>> identity_columns() const;

    bool p1() const;
    bool p2() const;
    bool p3() const;
    bool p4() const;

    /// The matching of P4 for one row: entry l is the column j_l.
    std::optional<std::vector<std::size_t>> representatives(std::size_t row) const;

    /// Throws PatternViolation naming the first failed condition.
    void validate() const;

    /// Reorders columns: column k of the result is column order[k] here.
    PatternMatrix permuted(std::span<const std::size_t> order) const;

    friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;

private:
    ZeroNonzeroMask mask_;
};

/// The 3 x 6 starting pattern: identity in columns 0-2, zeros at
/// (0,5), (1,4), (2,3), free cells elsewhere in columns 3-5.
PatternMatrix base_pattern_36();

struct StepResult {
    PatternMatrix pattern;
    /// Column order applied to the input before it was extended.
    std::vector<std::size_t> column_order;
};

/// (n, N) -> (n+1, N+n+1). Appends n columns with free cells in rows i and
/// n, then e_n.
StepResult step_I(const PatternMatrix& a);

/// (n, N) -> (n+1, N+n). Moves a non-identity column with a zero in row 0
/// and a nonzero in row 1 to the end, gives it a free cell in the new row,
/// and chains n-1 new columns through rows {0,1}, {2}, ..., {n-1}, each also
/// free in the new row, followed by e_n.
StepResult step_II(const PatternMatrix& a);

/// (n, N) -> (n+1, N+2). Arranges the identity first, a last column with a
/// zero in row n-1, and before it distinct columns N-1-i nonzero in rows i
/// and n-1 (i = 0..n-2). The new row is free under the last n columns; one
/// new column is free in rows 0..n-1, and e_n closes the matrix.
StepResult step_III(const PatternMatrix& a);

enum class StepKind { Base36, StepI, StepII, StepIII };
std::string step_name(StepKind kind);

struct ConstructionPlan {
    std::size_t n = 0;
    std::size_t length = 0;
    std::vector<StepKind> steps;
};

/// Backward search from (n, N) to (3, 6). Each predecessor (n-1, M) must
/// satisfy 2(n-1) <= M <= (n-1)n/2. Ties prefer Step III, then II, then I.
/// Throws OutOfRange unless n >= 3 and 2n <= N <= n(n+1)/2.
ConstructionPlan plan(std::size_t n, std::size_t length);

struct PlannedPattern {
    PatternMatrix pattern;
    std::vector<std::vector<std::size_t>> column_orders;  ///< one per step
};

PlannedPattern realize(const ConstructionPlan& plan);

struct Certificate {
    bool exact_pr = false;
    bool exact_pr_redundancy = false;
    std::size_t d = 0;
    std::vector<std::string> plan;
    Seed seed;
    std::size_t retries = 0;
};

struct GeneratedFrame {
    Frame frame;
    Certificate certificate;
};

inline constexpr std::uint64_t default_range_max = std::uint64_t{1} << 16;

/// An exact PR frame in Q^n of length N, 2n-1 <= N <= n(n+1)/2.
/// Length 2n-1 is drawn as a dense random matrix until it has full spark;
/// longer frames instantiate the planned pattern. Every candidate is checked
/// with is_exact_pr_frame and redrawn from derive_seed(seed, attempt) on
/// failure. Throws OutOfRange or RetriesExhausted.
GeneratedFrame generate_exact_pr(std::size_t n, std::size_t length, Seed seed, std::size_t max_retries = 5,
                                 std::uint64_t range_max = default_range_max);

/// Block-diagonal union: the first frame in the leading coordinates, the
/// second in the trailing ones.
Frame compose_direct_sum(const Frame& first, const Frame& second);
Frame compose_direct_sum(std::span<const Frame> blocks);

/// A frame in Q^n of length N with exact PR-redundancy and d(F) = k.
///
/// Requires [(n+1)/2] <= k <= n, 2k-1 <= N <= k(k+1)/2 + (n-k)(n-k+1)/2 and
/// N >= n. When 2k-1 <= N <= k(k+1)/2 an exact PR frame G for Q^k with
/// g_0..g_{k-1} = e_0..e_{k-1} is spread as {e_0..e_{k-1}, g_k+e_k, ...,
/// g_{n-1}+e_{n-1}, g_n, ..., g_{N-1}}. Otherwise the frame is a direct sum
/// of exact PR blocks whose dimensions split into two groups of largest
/// total k; the two-block split {k, n-k} is tried first. The result is
/// certified (d computed exactly, redundancy checked) before it is returned.
GeneratedFrame generate_with_dmax(std::size_t n, std::size_t k, std::size_t length, Seed seed,
                                  std::size_t max_retries = 5);

struct BasisWithSubspace {
    Frame basis;
    Subspace subspace;  ///< M = span{e_0..e_{k-1}}
};

/// A basis u_0..u_{n-1} of Q^n for which M = span{e_0..e_{k-1}} is a maximal
/// PR subspace: u_i = e_i except u_i = e_i + phi_i for k <= i <= 2k-2, where
/// {e_0..e_{k-1}, phi_k..phi_{2k-2}} is a full-spark frame for M.
/// Throws OutOfRange unless 1 <= k <= [(n+1)/2].
BasisWithSubspace basis_with_maximal_subspace(std::size_t n, std::size_t k, Seed seed, std::size_t max_retries = 5);

}  // namespace prframe
