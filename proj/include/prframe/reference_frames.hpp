#pragma once

#include "prframe/frames.hpp"
#include "prframe/subspaces.hpp"

#include <string>
#include <vector>

namespace prframe {

/// The published 5 x N integer matrices (N = 10..15) whose columns form
/// exact PR frames for Q^5.
std::vector<std::size_t> reference_lengths();
Frame reference_matrix(std::size_t length);

/// {e_0, e_1, e_2, e_0+e_1, e_0+e_1+e_2} in Q^3: d = 2, exact PR-redundancy.
Frame example_r3_frame();

/// Witness pairs printed with the R^3 example for removing vectors 2, 3
/// and 4, exactly as published. The one for vector 3 does not satisfy the
/// witness predicate (magnitudes 3 and 1 on e_0+e_1+e_2).
struct PublishedWitness {
    std::size_t removed;
    RatVector x;
    RatVector y;
};
std::vector<PublishedWitness> example_r3_witnesses();

/// M = span{e_0+e_1+e_2, e_0-e_1+e_3} in Q^4: PR for the standard basis,
/// every nonzero vector has support 3, and M is maximal.
Subspace example_r4_subspace();

}  // namespace prframe
