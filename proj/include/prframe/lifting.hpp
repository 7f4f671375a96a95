#pragma once

#include "prframe/frames.hpp"

#include <optional>

namespace prframe {

/// The rank-one lifting of a frame: row i is f_i (x) f_i written against the
/// upper triangle of a symmetric matrix, in the order (0,0), (0,1), ...,
/// (0,n-1), (1,1), ... . Off-diagonal entries are doubled so that
/// row_i . vech(A) = f_i^T A f_i.
struct LiftedSystem {
    Frame frame;
    RatMatrix matrix;
};

LiftedSystem lifted_operator(const Frame& frame);

/// Upper-triangle vectorization matching the column order of the lifting.
RatVector vech(const RatMatrix& symmetric);

/// True iff the lifted vectors f_i (x) f_i are linearly independent.
bool lifted_independent(const Frame& frame);

/// A = x (x) x - y (x) y, with y possibly zero.
struct S2Witness {
    RatVector x;
    RatVector y;
    std::optional<std::size_t> differing_index;
};

/// Checks that |<x,f_j>| = |<y,f_j>| on `subset`, that A is nonzero, and, if
/// an index is recorded, that it lies outside `subset` and the magnitudes
/// differ there.
bool validate_witness(const Frame& frame, IndexSet subset, const S2Witness& witness);

/// A nonzero rank <= 2 symmetric A with f_j^T A f_j = 0 for all j in
/// `subset`, or nothing if none exists.
///
/// If the subset does not span, a vector u orthogonal to it gives the
/// rank-one answer (u, 0). Otherwise every such A is x(x)x - y(x)y with
/// <x,f_j> = e_j <y,f_j> for some signs e_j, and the search walks the sign
/// patterns (first sign fixed) while maintaining the solution space V of the
/// linear constraints in (x, y). A branch is dropped as soon as V lies inside
/// {x = y} or {x = -y}, because then every point of V gives A = 0.
std::optional<S2Witness> find_s2_element(const Frame& frame, IndexSet subset);

/// An element of the kernel for `subset` that is not in the kernel for the
/// whole frame, together with an index outside `subset` that detects it, or
/// nothing if both kernels meet S2 in the same set.
///
/// Same walk as above. For an outside index i, the form
/// <x,f_i>^2 - <y,f_i>^2 restricted to V has coefficient matrix
/// a a^T - c c^T with a_b = <x_b,f_i>, c_b = <y_b,f_i> over a basis of V,
/// and it vanishes identically iff a = +-c. Branches where every outside
/// form vanishes are dropped.
std::optional<S2Witness> find_s2_witness(const Frame& frame, IndexSet subset);

/// Every co-singleton subset admits a witness. For phase-retrievable frames
/// this is decided by the exactness test, which is equivalent.
bool has_exact_pr_redundancy(const Frame& frame);

/// N / k where k is the smallest size of a subset without a witness.
/// Throws CapExceeded when N > cap.
Rational pr_redundancy(const Frame& frame, std::size_t cap = 16);

}  // namespace prframe
