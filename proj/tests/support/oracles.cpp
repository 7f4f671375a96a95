#include "oracles.hpp"

#include <algorithm>

namespace oracle {

Columns columns_of(const prframe::RatMatrix& m) {
    Columns out(m.cols(), Column(m.rows()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) out[c][r] = m(r, c);
    return out;
}

std::size_t rank(const Columns& cols, std::size_t dim, std::uint64_t mask) {
    std::vector<Column> rows;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if ((mask >> c) & 1U) rows.push_back(cols[c]);
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const mpq_class f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < dim; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const Columns& cols, std::size_t dim) {
    return rank(cols, dim, cols.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols.size()) - 1);
}

bool complement_property(const Columns& cols, std::size_t dim) {
    const std::size_t n = cols.size();
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s <= all; ++s)
        if (rank(cols, dim, s) < dim && rank(cols, dim, all & ~s) < dim) return false;
    return true;
}

bool complement_property(const prframe::RatMatrix& m) { return complement_property(columns_of(m), m.rows()); }

bool exact_pr(const prframe::RatMatrix& m) {
    const Columns cols = columns_of(m);
    if (!complement_property(cols, m.rows())) return false;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        Columns rest = cols;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (complement_property(rest, m.rows())) return false;
    }
    return true;
}

std::size_t spark(const prframe::RatMatrix& m) {
    const Columns cols = columns_of(m);
    const std::size_t n = cols.size();
    std::size_t best = n + 1;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
        if (size < best && rank(cols, m.rows(), s) < size) best = size;
    }
    return best;
}

std::size_t partition_width(const prframe::RatMatrix& m) {
    const Columns cols = columns_of(m);
    const std::uint64_t all = (std::uint64_t{1} << cols.size()) - 1;
    std::size_t best = m.rows();
    for (std::uint64_t s = 0; s <= all; ++s)
        best = std::min(best, std::max(rank(cols, m.rows(), s), rank(cols, m.rows(), all & ~s)));
    return best;
}

bool s2_element_exists(const prframe::RatMatrix& m, std::uint64_t subset) {
    const Columns cols = columns_of(m);
    Columns sub;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if ((subset >> c) & 1U) sub.push_back(cols[c]);
    return !complement_property(sub, m.rows());
}

bool witness_exists(const prframe::RatMatrix& m, std::uint64_t subset) {
    const Columns cols = columns_of(m);
    const std::size_t dim = m.rows();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if ((subset >> i) & 1U) continue;
        const std::uint64_t with_i = std::uint64_t{1} << i;
        // enumerate sub-subsets s1 of subset
        for (std::uint64_t s1 = subset;; s1 = (s1 - 1) & subset) {
            const std::uint64_t s2 = subset & ~s1;
            if (rank(cols, dim, s1 | with_i) > rank(cols, dim, s1) &&
                rank(cols, dim, s2 | with_i) > rank(cols, dim, s2))
                return true;
            if (s1 == 0) break;
        }
    }
    return false;
}

std::pair<std::size_t, std::size_t> pr_redundancy(const prframe::RatMatrix& m) {
    const std::size_t n = m.cols();
    std::size_t best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
        if (size < best && !witness_exists(m, s)) best = size;
    }
    return {n, best};
}

namespace {

// Coordinates basis^T v for every column of `m`.
Columns coordinates(const prframe::RatMatrix& m, const prframe::RatMatrix& basis) {
    Columns out(m.cols(), Column(basis.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            for (std::size_t r = 0; r < m.rows(); ++r) out[c][j] += basis(r, j) * m(r, c);
    return out;
}

}  // namespace

bool pr_subspace(const prframe::RatMatrix& frame, const prframe::RatMatrix& basis) {
    const Columns coords = coordinates(frame, basis);
    return rank(coords, basis.cols()) == basis.cols() && complement_property(coords, basis.cols());
}

std::size_t min_support(const prframe::RatMatrix& basis_of_m, const prframe::RatMatrix& frame_basis) {
    // Row i of B^T M holds <b_i, m_j>. A nonzero x in M vanishing on the set
    // Z of basis vectors exists iff the rows in Z have rank below k.
    const Columns rows = coordinates(basis_of_m, frame_basis);  // k columns of length n
    const std::size_t n = frame_basis.cols();
    const std::size_t k = basis_of_m.cols();
    Columns by_row(n, Column(k));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) by_row[i][j] = rows[j][i];
    std::size_t best = n;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z)
        if (rank(by_row, k, z) < k)
            best = std::min(best, n - static_cast<std::size_t>(__builtin_popcountll(z)));
    return best;
}

std::uint64_t Gen::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Gen::between(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

prframe::RatMatrix Gen::matrix(std::size_t rows, std::size_t cols, long range, int zeros) {
    prframe::RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (between(0, 99) >= zeros) m.set(r, c, mpq_class(between(-range, range)));
    return m;
}

prframe::RatMatrix Gen::frame(std::size_t n, std::size_t len, long range, int zeros) {
    for (;;) {
        prframe::RatMatrix m = matrix(n, len, range, zeros);
        if (rank(columns_of(m), n) == n) return m;
    }
}

}  // namespace oracle
