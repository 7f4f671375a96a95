#include "prframe/reference_frames.hpp"

#include "prframe/error.hpp"

namespace prframe {

std::vector<std::size_t> reference_lengths() { return {10, 11, 12, 13, 14, 15}; }

Frame reference_matrix(std::size_t length) {
    switch (length) {
    case 10:
        return Frame(RatMatrix::from_rows({{1, 0, 0, 0, 0, 6, 4, 2, 11, 0},
                                           {0, 1, 0, 0, 0, 13, 10, 8, 0, 3},
                                           {0, 0, 1, 0, 0, 7, 7, 0, 9, 8},
                                           {0, 0, 0, 1, 0, 16, 0, 8, 30, 13},
                                           {0, 0, 0, 0, 1, 0, 4, 12, 14, 18}}));
    case 11:
        return Frame(RatMatrix::from_rows({{1, 0, 0, 0, 0, 5, 0, 3, 35, 7, 0},
                                           {0, 1, 0, 0, 0, 18, 0, 14, 27, 0, 2},
                                           {0, 0, 1, 0, 0, 0, 23, 5, 0, 1, 14},
                                           {0, 0, 0, 1, 0, 0, 8, 0, 14, 7, 14},
                                           {0, 0, 0, 0, 1, 0, 0, 3, 30, 3, 14}}));
    case 12:
        return Frame(RatMatrix::from_rows({{1, 0, 0, 0, 0, 7, 0, 10, 10, 11, 0, 0},
                                           {0, 1, 0, 0, 0, 4, 0, 7, 16, 0, 15, 0},
                                           {0, 0, 1, 0, 0, 0, 16, 2, 0, 2, 3, 0},
                                           {0, 0, 0, 1, 0, 0, 1, 0, 23, 3, 0, 9},
                                           {0, 0, 0, 0, 1, 0, 0, 12, 2, 11, 0, 2}}));
    case 13:
        return Frame(RatMatrix::from_rows({{1, 0, 0, 0, 0, 6, 0, 4, 12, 16, 0, 0, 0},
                                           {0, 1, 0, 0, 0, 6, 0, 8, 5, 0, 0, 15, 0},
                                           {0, 0, 1, 0, 0, 0, 9, 5, 0, 0, 11, 12, 0},
                                           {0, 0, 0, 1, 0, 0, 16, 0, 6, 1, 0, 0, 8},
                                           {0, 0, 0, 0, 1, 0, 0, 7, 6, 0, 10, 0, 9}}));
    case 14:
        return Frame(RatMatrix::from_rows({{1, 0, 0, 0, 0, 11, 0, 20, 0, 16, 4, 0, 0, 0},
                                           {0, 1, 0, 0, 0, 5, 0, 0, 1, 16, 0, 0, 4, 0},
                                           {0, 0, 1, 0, 0, 0, 3, 6, 0, 0, 0, 13, 8, 0},
                                           {0, 0, 0, 1, 0, 0, 17, 0, 0, 8, 8, 0, 0, 4},
                                           {0, 0, 0, 0, 1, 0, 0, 0, 1, 2, 0, 1, 0, 3}}));
    case 15:
        return Frame(RatMatrix::from_rows({{1, 0, 0, 0, 0, 12, 0, 4, 0, 7, 0, 13, 0, 0, 0},
                                           {0, 1, 0, 0, 0, 17, 0, 0, 3, 0, 10, 0, 0, 2, 0},
                                           {0, 0, 1, 0, 0, 0, 1, 8, 0, 0, 0, 0, 12, 17, 0},
                                           {0, 0, 0, 1, 0, 0, 3, 0, 0, 0, 1, 15, 0, 0, 2},
                                           {0, 0, 0, 0, 1, 0, 0, 0, 3, 1, 0, 0, 13, 0, 18}}));
    default:
        throw Error(ErrorKind::OutOfRange, "no reference matrix of length " + std::to_string(length));
    }
}

Frame example_r3_frame() {
    return Frame(RatMatrix::from_rows({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}}));
}

std::vector<PublishedWitness> example_r3_witnesses() {
    auto v = [](long a, long b, long c) { return RatVector{Rational(a), Rational(b), Rational(c)}; };
    return {
        {2, v(1, 0, 1), v(1, 0, -3)},
        {3, v(1, 1, 1), v(1, -1, -1)},
        {4, v(1, 0, 1), v(1, 0, -1)},
    };
}

Subspace example_r4_subspace() {
    return Subspace(RatMatrix::from_rows({{1, 1}, {1, -1}, {1, 0}, {0, 1}}));
}

}  // namespace prframe
