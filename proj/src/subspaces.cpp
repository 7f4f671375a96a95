#include "prframe/subspaces.hpp"

#include "prframe/error.hpp"

#include <stdexcept>

namespace prframe {

namespace {

// Component of w orthogonal to the columns of q (q of full column rank).
RatVector orthogonal_part(const RatVector& w, const RatMatrix& q) {
    if (q.cols() == 0) return w;
    const RatMatrix qt = q.transpose();
    const RatVector coeffs = inverse(qt * q) * (qt * w);
    const RatVector along = q * coeffs;
    RatVector u(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) u[i] = w[i] - along[i];
    return u;
}

RatVector random_vector(Rng& rng, std::size_t n, std::int64_t range) {
    RatVector v(n);
    for (auto& x : v) x = Rational(rng.uniform(-range, range));
    return v;
}

RatMatrix append_column(const RatMatrix& m, const RatVector& v) {
    RatMatrix out(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m(i, j));
        out.set(i, m.cols(), v[i]);
    }
    return out;
}

// M plus one random direction orthogonal to it, scaled to integers.
std::optional<Subspace> random_extension(const Subspace& m, Rng& rng) {
    const RatVector u = orthogonal_part(random_vector(rng, m.ambient_dim(), 1 << 16), m.basis());
    if (is_zero(u)) return std::nullopt;
    return Subspace(append_column(m.basis(), to_rational(primitive_integer_vector(u))));
}

bool complement_in_rows(const RatMatrix& coords) {
    const ColumnSystem cs(coords.transpose());
    const std::uint64_t all = IndexSet::full(coords.rows()).bits();
    return cs.spans(all) && complement_property(cs, all).holds;
}

void require_basis(const Frame& basis) {
    if (basis.size() != basis.dim())
        throw Error(ErrorKind::NotABasis, std::to_string(basis.size()) + " vectors in dimension " +
                                              std::to_string(basis.dim()));
}

std::size_t half_up(std::size_t n) { return (n + 1) / 2; }

}  // namespace

Subspace::Subspace(RatMatrix basis) : basis_(std::move(basis)) {
    if (basis_.cols() == 0) throw std::invalid_argument("a subspace needs at least one basis vector");
    if (rank(basis_) != basis_.cols()) throw std::invalid_argument("subspace basis is not linearly independent");
}

bool Subspace::contains(const RatVector& x) const {
    if (x.size() != ambient_dim()) throw std::invalid_argument("dimension mismatch");
    return rank(append_column(basis_, x)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis().column(j))) return false;
    return true;
}

RatMatrix project_frame(const Frame& frame, const Subspace& m) {
    if (m.ambient_dim() != frame.dim()) throw std::invalid_argument("dimension mismatch");
    return m.basis().transpose() * frame.matrix();
}

bool is_pr_subspace(const Frame& frame, const Subspace& m) {
    const RatMatrix coords = project_frame(frame, m);
    const ColumnSystem cs(coords);
    const std::uint64_t all = IndexSet::full(frame.size()).bits();
    return cs.spans(all) && complement_property(cs, all).holds;
}

std::size_t d_max(const Frame& frame, std::size_t cap) {
    if (frame.size() > cap)
        throw Error(ErrorKind::CapExceeded, "d(F) enumeration limited to " + std::to_string(cap) + " vectors, got " +
                                                std::to_string(frame.size()));
    return partition_width(frame.columns(), IndexSet::full(frame.size()).bits());
}

Subspace random_pr_subspace(const Frame& frame, std::size_t dim, Seed seed, std::size_t max_retries,
                            std::int64_t range) {
    const std::size_t d = d_max(frame);
    if (dim == 0 || dim > d)
        throw Error(ErrorKind::OutOfRange,
                    "subspace dimension " + std::to_string(dim) + " outside [1, d(F)] = [1, " + std::to_string(d) + "]");
    for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        std::vector<RatVector> cols;
        for (std::size_t j = 0; j < dim; ++j) cols.push_back(random_vector(rng, frame.dim(), range));
        RatMatrix basis = RatMatrix::from_columns(cols, frame.dim());
        if (rank(basis) != dim) continue;
        Subspace m(std::move(basis));
        if (is_pr_subspace(frame, m)) return m;
    }
    throw Error(ErrorKind::RetriesExhausted, "no PR subspace of dimension " + std::to_string(dim) + " found in " +
                                                 std::to_string(max_retries + 1) + " draws");
}

IndexSet support(const RatVector& x, const Frame& basis) {
    require_basis(basis);
    if (x.size() != basis.dim()) throw std::invalid_argument("dimension mismatch");
    IndexSet s;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn(dot(x, basis.vector(i))) != 0) s = s.with(i);
    return s;
}

std::size_t min_support(const Subspace& m, const Frame& basis) {
    require_basis(basis);
    if (m.ambient_dim() != basis.dim()) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = basis.dim();
    const std::size_t k = m.dim();
    // Rows of B^T M, one per basis vector, as columns of a k x n system.
    const ColumnSystem rows(m.basis().transpose() * basis.matrix());
    const std::uint64_t all = IndexSet::full(n).bits();
    for (std::size_t s = 1; s <= n; ++s) {
        const bool hit =
            any_subset_of_size(n, s, [&](std::uint64_t inside) { return rows.rank(all & ~inside) < k; });
        if (hit) return s;
    }
    return n;  // unreachable: with S = everything the outside rows are empty
}

std::string status_name(MaximalityStatus status) {
    switch (status) {
    case MaximalityStatus::Maximal: return "Maximal";
    case MaximalityStatus::NotMaximal: return "NotMaximal";
    case MaximalityStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

MaximalityVerdict is_maximal_pr_subspace(const Frame& frame, const Subspace& m, std::size_t probe_budget,
                                         Seed seed) {
    if (!is_pr_subspace(frame, m)) throw Error(ErrorKind::NotPRSubspace, "M is not a PR subspace for this frame");
    const std::size_t n = frame.dim();
    const std::size_t k = m.dim();
    MaximalityVerdict verdict;

    if (frame.size() <= 24) {
        const std::size_t d = d_max(frame);
        if (k == d) {
            verdict.status = MaximalityStatus::Maximal;
            verdict.reason = "dim M = d(F) = " + std::to_string(d);
            return verdict;
        }
    }

    const bool basis = frame.size() == n;
    if (basis) {
        const std::size_t s = min_support(m, frame);
        if (s == k) {
            verdict.status = MaximalityStatus::Maximal;
            verdict.reason = "some nonzero x in M has dual support of size dim M = " + std::to_string(k);
            return verdict;
        }
    }

    // Random one-dimensional extensions; for a basis with s > k and
    // k < [(n+1)/2] such an extension is known to exist, so the draws are
    // only there to exhibit it.
    const bool decided = basis && k < half_up(n);
    const std::size_t budget = decided ? std::max<std::size_t>(probe_budget, 16) : probe_budget;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        ++verdict.probes.attempts;
        auto bigger = random_extension(m, rng);
        if (!bigger || !is_pr_subspace(frame, *bigger)) continue;
        ++verdict.probes.successes;
        verdict.status = MaximalityStatus::NotMaximal;
        verdict.reason = decided ? "every nonzero x in M has dual support larger than dim M < [(n+1)/2]"
                                 : "a PR subspace of dimension " + std::to_string(k + 1) + " contains M";
        verdict.witness = std::move(bigger);
        return verdict;
    }
    if (decided)
        throw Error(ErrorKind::RetriesExhausted,
                    "no certified PR extension found in " + std::to_string(budget) + " draws");
    verdict.status = MaximalityStatus::Unknown;
    verdict.reason = "no criterion applies and no PR extension was found by probing";
    return verdict;
}

Subspace extend_to_maximal(const Frame& basis, const RatVector& x, Seed seed, std::size_t max_retries) {
    require_basis(basis);
    const std::size_t n = basis.dim();
    if (x.size() != n) throw std::invalid_argument("dimension mismatch");
    if (is_zero(x)) throw Error(ErrorKind::OutOfRange, "x must be nonzero");

    const RatMatrix bt = basis.matrix().transpose();
    const RatVector y = bt * x;
    const IndexSet supp = support(x, basis);
    const std::size_t k = supp.size();
    if (k > half_up(n))
        throw Error(ErrorKind::SupportTooLarge,
                    "|supp(x)| = " + std::to_string(k) + " exceeds [(n+1)/2] = " + std::to_string(half_up(n)));

    RatMatrix coords = RatMatrix::from_columns({to_rational(primitive_integer_vector(y))}, n);
    for (std::size_t m = 1; m < k; ++m) {
        bool accepted = false;
        for (std::size_t attempt = 0; attempt <= max_retries && !accepted; ++attempt) {
            Rng rng(derive_seed(seed, m * (max_retries + 1) + attempt));
            const RatVector u = orthogonal_part(random_vector(rng, n, 1 << 16), coords);
            if (is_zero(u)) continue;
            RatMatrix next = append_column(coords, to_rational(primitive_integer_vector(u)));
            const ColumnSystem rows(next.transpose());
            const bool singular = any_subset_of_size(n, m + 1, [&](std::uint64_t lam) {
                return (lam & supp.bits()) != 0 && rows.rank(lam) < m + 1;
            });
            if (singular) continue;
            coords = std::move(next);
            accepted = true;
        }
        if (!accepted)
            throw Error(ErrorKind::RetriesExhausted, "extension stage " + std::to_string(m) + " failed " +
                                                         std::to_string(max_retries + 1) + " draws");
    }
    if (!complement_in_rows(coords)) throw Error(ErrorKind::RetriesExhausted, "extension lost the complement property");

    Subspace result(inverse(bt) * coords);
    if (!is_pr_subspace(basis, result) || min_support(result, basis) != k || !result.contains(x))
        throw Error(ErrorKind::RetriesExhausted, "extended subspace failed certification");
    return result;
}

}  // namespace prframe
