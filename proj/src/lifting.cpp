#include "prframe/lifting.hpp"

#include "prframe/error.hpp"

#include <stdexcept>

namespace prframe {

namespace {

using IntVec = std::vector<Integer>;

void make_primitive(IntVec& v) {
    Integer g = 0;
    for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g > 1)
        for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

Integer dot_half(const IntVec& z, std::size_t offset, const IntVec& f) {
    Integer s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s += z[offset + k] * f[k];
    return s;
}

// Basis of the solution space V of the linear constraints collected so far,
// as vectors (x, y) in Z^{2n}.
using Space = std::vector<IntVec>;

Space full_space(std::size_t n) {
    Space v(2 * n, IntVec(2 * n, 0));
    for (std::size_t i = 0; i < 2 * n; ++i) v[i][i] = 1;
    return v;
}

// Intersects V with <x,f> = sign <y,f>.
Space constrain(const Space& v, const IntVec& f, int sign) {
    const std::size_t n = f.size();
    std::vector<Integer> w(v.size());
    std::size_t pivot = v.size();
    for (std::size_t b = 0; b < v.size(); ++b) {
        w[b] = dot_half(v[b], 0, f) - sign * dot_half(v[b], n, f);
        if (pivot == v.size() && sgn(w[b]) != 0) pivot = b;
    }
    if (pivot == v.size()) return v;
    Space out;
    out.reserve(v.size() - 1);
    for (std::size_t b = 0; b < v.size(); ++b) {
        if (b == pivot) continue;
        IntVec u(2 * n);
        for (std::size_t k = 0; k < 2 * n; ++k) u[k] = w[pivot] * v[b][k] - w[b] * v[pivot][k];
        make_primitive(u);
        out.push_back(std::move(u));
    }
    return out;
}

// Is every basis vector on the diagonal x = sign * y?
bool inside_diagonal(const Space& v, int sign) {
    for (const auto& b : v) {
        const std::size_t n = b.size() / 2;
        for (std::size_t k = 0; k < n; ++k)
            if (b[k] != sign * b[n + k]) return false;
    }
    return true;
}

bool on_diagonal(const IntVec& b, int sign) { return inside_diagonal(Space{b}, sign); }

S2Witness to_witness(const IntVec& z, std::optional<std::size_t> index) {
    IntVec p = z;
    make_primitive(p);
    const std::size_t n = p.size() / 2;
    S2Witness w;
    w.x.resize(n);
    w.y.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        w.x[k] = Rational(p[k]);
        w.y[k] = Rational(p[n + k]);
    }
    w.differing_index = index;
    return w;
}

IntVec combine(const Space& v, std::size_t p, std::optional<std::size_t> q) {
    IntVec z = v[p];
    if (q)
        for (std::size_t k = 0; k < z.size(); ++k) z[k] += v[*q][k];
    return z;
}

// Rank-one answer when the subset does not span: some u orthogonal to it.
std::optional<RatVector> orthogonal_vector(const Frame& frame, IndexSet subset) {
    if (frame.columns().rank(subset.bits()) == frame.dim()) return std::nullopt;
    const auto idx = subset.indices();
    const RatMatrix rows = frame.matrix().select_columns(idx).transpose();
    return nullspace(rows).column(0);
}

class SignWalk {
public:
    SignWalk(const Frame& frame, IndexSet subset, std::vector<std::size_t> targets)
        : cs_(frame.columns()), n_(frame.dim()), order_(subset.indices()), targets_(std::move(targets)) {}

    std::optional<S2Witness> run() { return step(0, full_space(n_)); }

private:
    std::optional<S2Witness> step(std::size_t t, const Space& v) {
        if (v.empty()) return std::nullopt;
        if (targets_.empty()) {
            if (inside_diagonal(v, 1) || inside_diagonal(v, -1)) return std::nullopt;
            if (t == order_.size()) return element_leaf(v);
        } else {
            const auto live = live_target(v);
            if (!live) return std::nullopt;
            if (t == order_.size()) return witness_leaf(v, *live);
        }
        const IntVec& f = cs_.integer_column(order_[t]);
        for (int sign : {1, -1}) {
            if (t == 0 && sign == -1) break;
            if (auto found = step(t + 1, constrain(v, f, sign))) return found;
        }
        return std::nullopt;
    }

    static std::optional<S2Witness> element_leaf(const Space& v) {
        std::size_t p = 0;
        while (on_diagonal(v[p], 1)) ++p;
        if (!on_diagonal(v[p], -1)) return to_witness(v[p], std::nullopt);
        std::size_t q = 0;
        while (on_diagonal(v[q], -1)) ++q;
        if (!on_diagonal(v[q], 1)) return to_witness(v[q], std::nullopt);
        return to_witness(combine(v, p, q), std::nullopt);
    }

    // First outside index whose restricted form is not identically zero.
    std::optional<std::size_t> live_target(const Space& v) const {
        for (std::size_t i : targets_) {
            const IntVec& f = cs_.integer_column(i);
            bool plus = true;
            bool minus = true;
            for (const auto& b : v) {
                const Integer a = dot_half(b, 0, f);
                const Integer c = dot_half(b, n_, f);
                plus = plus && a == c;
                minus = minus && a == -c;
                if (!plus && !minus) return i;
            }
        }
        return std::nullopt;
    }

    // The restricted form factors as (u.g)(w.g) with u = a - c, w = a + c;
    // a unit vector or a sum of two makes both factors nonzero.
    std::optional<S2Witness> witness_leaf(const Space& v, std::size_t i) const {
        const IntVec& f = cs_.integer_column(i);
        std::vector<Integer> u(v.size());
        std::vector<Integer> w(v.size());
        for (std::size_t b = 0; b < v.size(); ++b) {
            const Integer a = dot_half(v[b], 0, f);
            const Integer c = dot_half(v[b], n_, f);
            u[b] = a - c;
            w[b] = a + c;
        }
        std::size_t p = 0;
        while (sgn(u[p]) == 0) ++p;
        std::size_t q = 0;
        while (sgn(w[q]) == 0) ++q;
        if (sgn(w[p]) != 0) return to_witness(v[p], i);
        if (sgn(u[q]) != 0) return to_witness(v[q], i);
        return to_witness(combine(v, p, q), i);
    }

    const ColumnSystem& cs_;
    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> targets_;
};

void check_subset(const Frame& frame, IndexSet subset) {
    if ((subset.bits() & ~IndexSet::full(frame.size()).bits()) != 0) throw std::out_of_range("index out of range");
    if (subset.empty()) throw std::invalid_argument("subset must be non-empty");
}

}  // namespace

RatVector vech(const RatMatrix& a) {
    const std::size_t n = a.rows();
    RatVector v;
    v.reserve(n * (n + 1) / 2);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) v.push_back(a(r, c));
    return v;
}

LiftedSystem lifted_operator(const Frame& frame) {
    const std::size_t n = frame.dim();
    RatMatrix m(frame.size(), n * (n + 1) / 2);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const RatVector f = frame.vector(i);
        std::size_t col = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r; c < n; ++c) m.set(i, col++, Rational(f[r] * f[c] * (r == c ? 1 : 2)));
    }
    return LiftedSystem{frame, std::move(m)};
}

bool lifted_independent(const Frame& frame) { return rank(lifted_operator(frame).matrix) == frame.size(); }

bool validate_witness(const Frame& frame, IndexSet subset, const S2Witness& w) {
    const std::size_t n = frame.dim();
    if (w.x.size() != n || w.y.size() != n) return false;
    bool plus = true;
    bool minus = true;
    for (std::size_t k = 0; k < n; ++k) {
        plus = plus && w.x[k] == w.y[k];
        minus = minus && w.x[k] == -w.y[k];
    }
    if (plus || minus) return false;
    auto form = [&](std::size_t i) -> Rational {
        const RatVector f = frame.vector(i);
        const Rational a = dot(w.x, f);
        const Rational b = dot(w.y, f);
        return a * a - b * b;
    };
    for (auto j : subset.indices()) {
        if (j >= frame.size() || sgn(form(j)) != 0) return false;
    }
    if (w.differing_index) {
        const std::size_t i = *w.differing_index;
        if (i >= frame.size() || subset.contains(i) || sgn(form(i)) == 0) return false;
    }
    return true;
}

std::optional<S2Witness> find_s2_element(const Frame& frame, IndexSet subset) {
    check_subset(frame, subset);
    if (auto u = orthogonal_vector(frame, subset)) return S2Witness{*u, RatVector(frame.dim()), std::nullopt};
    return SignWalk(frame, subset, {}).run();
}

std::optional<S2Witness> find_s2_witness(const Frame& frame, IndexSet subset) {
    check_subset(frame, subset);
    const IndexSet outside = subset.complement(frame.size());
    if (outside.empty()) throw std::invalid_argument("subset must be proper");
    if (auto u = orthogonal_vector(frame, subset)) {
        for (auto i : outside.indices())
            if (sgn(dot(*u, frame.vector(i))) != 0) return S2Witness{*u, RatVector(frame.dim()), i};
    }
    return SignWalk(frame, subset, outside.indices()).run();
}

bool has_exact_pr_redundancy(const Frame& frame) {
    if (frame.size() == 1) return true;
    const auto report = is_exact_pr_frame(frame);
    if (report.phase_retrievable) return report.exact;
    const IndexSet all = IndexSet::full(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (!find_s2_witness(frame, all.without(i))) return false;
    return true;
}

Rational pr_redundancy(const Frame& frame, std::size_t cap) {
    const std::size_t n = frame.size();
    if (n > cap || n >= 63)
        throw Error(ErrorKind::CapExceeded,
                    "exhaustive redundancy search limited to " + std::to_string(cap) + " vectors, got " + std::to_string(n));
    const bool pr = is_phase_retrievable(frame);
    const ColumnSystem& cs = frame.columns();
    for (std::size_t k = 1; k < n; ++k) {
        // For a PR frame the full kernel meets S2 only in 0, so "no witness"
        // means the subframe is itself PR.
        const bool hit = any_subset_of_size(n, k, [&](std::uint64_t m) {
            return pr ? complement_property(cs, m).holds : !find_s2_witness(frame, IndexSet(m));
        });
        if (hit) {
            Rational ratio(static_cast<long>(n), static_cast<long>(k));
            ratio.canonicalize();
            return ratio;
        }
    }
    return Rational(1);
}

}  // namespace prframe
