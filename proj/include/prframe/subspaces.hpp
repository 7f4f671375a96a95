#pragma once

#include "prframe/frames.hpp"

#include <optional>
#include <string>

namespace prframe {

/// A subspace M of Q^n given by an n x k basis matrix of full column rank.
/// Bases produced here are orthogonal but not normalized; every test below
/// depends on M only through ranks, which ignore that choice.
class Subspace {
public:
    explicit Subspace(RatMatrix basis);

    std::size_t ambient_dim() const noexcept { return basis_.rows(); }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const RatMatrix& basis() const noexcept { return basis_; }

    bool contains(const RatVector& x) const;
    /// True iff every basis vector of `other` lies in this subspace.
    bool contains(const Subspace& other) const;

private:
    RatMatrix basis_;
};

/// Coordinates B^T f_i of the frame vectors (k x N). For any subset, their
/// rank equals that of the orthogonal projections P_M f_i, since the two
/// coordinate systems differ by the invertible Gram matrix B^T B.
RatMatrix project_frame(const Frame& frame, const Subspace& m);

/// The projected vectors span M and have the complement property in M.
bool is_pr_subspace(const Frame& frame, const Subspace& m);

/// d(F) = min over subsets L of max(dim span F_L, dim span F_{L^c}).
/// Throws CapExceeded when N > cap.
std::size_t d_max(const Frame& frame, std::size_t cap = 24);

/// A random PR subspace of dimension `dim` (integer basis entries in
/// [-range, range]), verified exactly and redrawn up to max_retries times.
/// Throws OutOfRange if dim is 0 or exceeds d(F), RetriesExhausted otherwise.
Subspace random_pr_subspace(const Frame& frame, std::size_t dim, Seed seed, std::size_t max_retries = 5,
                            std::int64_t range = std::int64_t{1} << 16);

/// {i : <x, b_i> != 0}: the support of x in the dual basis of B.
/// Throws NotABasis unless B has exactly n vectors.
IndexSet support(const RatVector& x, const Frame& basis);

/// min |support(x, B)| over nonzero x in M. A nonzero x supported inside S
/// exists iff the coordinate rows B^T M outside S have rank below dim M, so
/// candidate sets S are scanned by increasing size until one qualifies.
std::size_t min_support(const Subspace& m, const Frame& basis);

enum class MaximalityStatus { Maximal, NotMaximal, Unknown };
std::string status_name(MaximalityStatus status);

struct ProbeReport {
    std::size_t attempts = 0;
    std::size_t successes = 0;
};

struct MaximalityVerdict {
    MaximalityStatus status = MaximalityStatus::Unknown;
    std::string reason;
    std::optional<Subspace> witness;  ///< larger certified PR subspace when NotMaximal
    ProbeReport probes;
};

/// Decision ladder for a PR subspace M of dimension k:
///  1. k = d(F): nothing larger can be PR, so M is maximal.
///  2. F a basis: s = min_support(M, F). s = k gives maximal; s > k with
///     k < [(n+1)/2] gives not maximal, and a (k+1)-dimensional PR
///     superspace is sampled and certified.
///  3. Otherwise up to `probe_budget` random one-dimensional extensions are
///     tried. A certified extension proves non-maximality; if none is found
///     the answer is Unknown.
/// Throws NotPRSubspace if M is not a PR subspace.
MaximalityVerdict is_maximal_pr_subspace(const Frame& frame, const Subspace& m, std::size_t probe_budget = 32,
                                         Seed seed = Seed{0});

/// A maximal PR subspace (w.r.t. the basis B) containing x, of dimension
/// k = |support(x, B)|. Works in the coordinates y = B^T x: orthogonal
/// integer vectors u_2, ..., u_k are added one at a time, each accepted
/// once every (m+1)-row square submatrix of [u_1 .. u_{m+1}] whose rows
/// meet supp(y) is invertible; the result is mapped back by (B^T)^{-1} and
/// certified. Throws SupportTooLarge if k > [(n+1)/2], RetriesExhausted if
/// sampling keeps failing.
Subspace extend_to_maximal(const Frame& basis, const RatVector& x, Seed seed = Seed{0}, std::size_t max_retries = 5);

}  // namespace prframe
