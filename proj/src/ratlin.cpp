#include "prframe/ratlin.hpp"

#include "prframe/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace prframe {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string_view s(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const bool ok = slash == std::string_view::npos
                        ? all_digits(body)
                        : all_digits(body.substr(0, slash)) && all_digits(body.substr(slash + 1));
    if (!ok) throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");

    std::string normalized(s.front() == '+' ? s.substr(1) : s);
    Rational q;
    if (q.set_str(normalized, 10) != 0) throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    return q.get_str(10);
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0) throw std::invalid_argument("RatMatrix needs at least one row");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged rows");
        std::size_t j = 0;
        for (long v : row) m.data_[i * c + j++] = v;
        ++i;
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
    }
    return m;
}

void RatMatrix::set(std::size_t r, std::size_t c, Rational value) {
    value.canonicalize();
    data_[r * cols_ + c] = std::move(value);
}

RatVector RatMatrix::column(std::size_t c) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

RatVector RatMatrix::row(std::size_t r) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> indices) const {
    RatMatrix m(rows_, indices.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < indices.size(); ++k) m.data_[i * indices.size() + k] = (*this)(i, indices[k]);
    return m;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> indices) const {
    RatMatrix m(indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) m.data_[k * cols_ + j] = (*this)(indices[k], j);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    if (cols_ == 0) throw std::invalid_argument("cannot transpose a matrix without columns");
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    RatMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p.data_[i * p.cols_ + j] += aik * b(k, j);
        }
    return p;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("dimension mismatch in product");
    RatVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// ---------------------------------------------------------------------------
// Elimination

std::size_t integer_rank(std::vector<Integer>& a, std::size_t rows, std::size_t cols) {
    // Bareiss: after step k every active entry is a (k+1)-minor, so the
    // division by the previous pivot is exact. Skipped columns do not break
    // this since they contribute no pivot.
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(at(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) swap(at(p, j), at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                tmp = at(r, c) * at(i, j);
                tmp -= at(i, c) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

std::vector<Integer> primitive_integer_vector(const RatVector& v) {
    Integer lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (lcm / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

RatVector to_rational(const std::vector<Integer>& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

std::size_t rank(const RatMatrix& m) {
    if (m.cols() == 0) return 0;
    std::vector<Integer> a;
    a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = primitive_integer_vector(m.row(i));
        for (auto& x : row) a.push_back(std::move(x));
    }
    return integer_rank(a, m.rows(), m.cols());
}

namespace {

struct Rref {
    std::vector<Rational> a;
    std::size_t rows;
    std::size_t cols;
    std::vector<std::size_t> pivots;  // pivot column of each leading row
};

Rref reduced_row_echelon(const RatMatrix& m) {
    Rref out{{}, m.rows(), m.cols(), {}};
    out.a.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.a.push_back(m(i, j));
    auto at = [&](std::size_t r, std::size_t c) -> Rational& { return out.a[r * out.cols + c]; };

    std::size_t r = 0;
    for (std::size_t c = 0; c < out.cols && r < out.rows; ++c) {
        std::size_t p = r;
        while (p < out.rows && sgn(at(p, c)) == 0) ++p;
        if (p == out.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < out.cols; ++j) swap(at(p, j), at(r, j));
        const Rational inv = 1 / at(r, c);
        for (std::size_t j = c; j < out.cols; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < out.rows; ++i) {
            if (i == r || sgn(at(i, c)) == 0) continue;
            const Rational f = at(i, c);
            for (std::size_t j = c; j < out.cols; ++j) at(i, j) -= f * at(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

}  // namespace

RatMatrix nullspace(const RatMatrix& m) {
    const std::size_t n = m.cols();
    if (n == 0) throw std::invalid_argument("nullspace of a matrix without columns");
    const Rref rref = reduced_row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : rref.pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < rref.pivots.size(); ++i) v[rref.pivots[i]] = -rref.a[i * n + f];
        basis.push_back(to_rational(primitive_integer_vector(v)));
    }
    return RatMatrix::from_columns(basis, n);
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
        aug.set(i, n + i, 1);
    }
    const Rref rref = reduced_row_echelon(aug);
    if (rref.pivots.size() < n || rref.pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rref.a[i * 2 * n + n + j]);
    return inv;
}

// ---------------------------------------------------------------------------
// Sampling

Seed derive_seed(Seed base, std::uint64_t stream) {
    std::uint64_t z = base.value + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Seed{z ^ (z >> 31)};
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % range);
}

RatMatrix sample_pattern(const ZeroNonzeroMask& pattern, std::uint64_t range_max, Seed seed) {
    if (range_max < 2) throw std::invalid_argument("range_max must be at least 2");
    if (range_max > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw std::invalid_argument("range_max too large");
    Rng rng(seed);
    RatMatrix m(pattern.rows(), pattern.cols());
    for (std::size_t i = 0; i < pattern.rows(); ++i)
        for (std::size_t j = 0; j < pattern.cols(); ++j) {
            switch (pattern.at(i, j)) {
            case Cell::Zero: break;
            case Cell::One: m.set(i, j, 1); break;
            case Cell::Free: m.set(i, j, Rational(rng.uniform(1, static_cast<std::int64_t>(range_max)))); break;
            }
        }
    return m;
}

}  // namespace prframe
