#include "prframe/construct.hpp"

#include "prframe/error.hpp"
#include "prframe/lifting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace prframe {

namespace {

std::size_t triangular(std::size_t n) { return n * (n + 1) / 2; }

// Kuhn's augmenting-path matching of `left` vertices into columns.
class Matcher {
public:
    Matcher(std::size_t left, std::size_t right, std::function<bool(std::size_t, std::size_t)> edge)
        : left_(left), edge_(std::move(edge)), owner_(right, npos) {}

    std::optional<std::vector<std::size_t>> perfect() {
        for (std::size_t l = 0; l < left_; ++l) {
            seen_.assign(owner_.size(), false);
            if (!augment(l)) return std::nullopt;
        }
        std::vector<std::size_t> match(left_, npos);
        for (std::size_t c = 0; c < owner_.size(); ++c)
            if (owner_[c] != npos) match[owner_[c]] = c;
        return match;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t l) {
        for (std::size_t c = 0; c < owner_.size(); ++c) {
            if (seen_[c] || !edge_(l, c)) continue;
            seen_[c] = true;
            if (owner_[c] == npos || augment(owner_[c])) {
                owner_[c] = l;
                return true;
            }
        }
        return false;
    }

    std::size_t left_;
    std::function<bool(std::size_t, std::size_t)> edge_;
    std::vector<std::size_t> owner_;
    std::vector<bool> seen_;
};

std::vector<bool> identity_mask(const PatternMatrix& a) {
    std::vector<bool> is_id(a.cols(), false);
    for (const auto& c : a.identity_columns())
        if (c) is_id[*c] = true;
    return is_id;
}

std::size_t nonzeros_in_column(const ZeroNonzeroMask& m, std::size_t c) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) count += m.nonzero(r, c) ? 1 : 0;
    return count;
}

// Copies `a` into the top-left corner of a larger zero mask.
ZeroNonzeroMask embed(const ZeroNonzeroMask& a, std::size_t rows, std::size_t cols) {
    ZeroNonzeroMask b(rows, cols);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) b.set(r, c, a.at(r, c));
    return b;
}

StepResult finish(ZeroNonzeroMask mask, std::vector<std::size_t> order) {
    PatternMatrix out(std::move(mask));
    out.validate();
    return StepResult{std::move(out), std::move(order)};
}

std::vector<std::size_t> iota_order(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// PatternMatrix

std::vector<std::optional<std::size_t>> PatternMatrix::identity_columns() const {
    std::vector<std::optional<std::size_t>> ids(rows());
    for (std::size_t l = 0; l < rows(); ++l)
        for (std::size_t c = 0; c < cols() && !ids[l]; ++c) {
            if (mask_.at(l, c) != Cell::One) continue;
            bool unit = true;
            for (std::size_t r = 0; r < rows() && unit; ++r) unit = r == l || mask_.at(r, c) == Cell::Zero;
            if (unit) ids[l] = c;
        }
    return ids;
}

bool PatternMatrix::p1() const {
    const auto ids = identity_columns();
    return std::all_of(ids.begin(), ids.end(), [](const auto& c) { return c.has_value(); });
}

bool PatternMatrix::p2() const {
    const auto is_id = identity_mask(*this);
    for (std::size_t c = 0; c < cols(); ++c) {
        if (is_id[c]) continue;
        std::size_t zeros = 0;
        std::size_t free = 0;
        for (std::size_t r = 0; r < rows(); ++r) {
            const Cell cell = mask_.at(r, c);
            if (cell == Cell::One) return false;
            (cell == Cell::Zero ? zeros : free) += 1;
        }
        if (zeros < 1 || free < 2) return false;
    }
    return true;
}

bool PatternMatrix::p3() const {
    for (std::size_t r = 0; r < rows(); ++r) {
        std::size_t count = 0;
        for (std::size_t c = 0; c < cols(); ++c) count += mask_.nonzero(r, c) ? 1 : 0;
        if (count != rows()) return false;
    }
    return true;
}

std::optional<std::vector<std::size_t>> PatternMatrix::representatives(std::size_t row) const {
    if (row >= rows()) throw std::out_of_range("row out of range");
    Matcher m(rows(), cols(), [&](std::size_t l, std::size_t c) { return mask_.nonzero(row, c) && mask_.nonzero(l, c); });
    return m.perfect();
}

bool PatternMatrix::p4() const {
    for (std::size_t i = 0; i < rows(); ++i)
        if (!representatives(i)) return false;
    return true;
}

void PatternMatrix::validate() const {
    const std::string shape = std::to_string(rows()) + "x" + std::to_string(cols()) + " pattern";
    if (!p1()) throw Error(ErrorKind::PatternViolation, shape + " lacks an identity block (P1)");
    if (!p2()) throw Error(ErrorKind::PatternViolation, shape + " has a column without a zero and two free cells (P2)");
    if (!p3()) throw Error(ErrorKind::PatternViolation, shape + " has a row without exactly n nonzero cells (P3)");
    if (!p4()) throw Error(ErrorKind::PatternViolation, shape + " has a row without distinct representatives (P4)");
}

PatternMatrix PatternMatrix::permuted(std::span<const std::size_t> order) const {
    if (order.size() != cols()) throw std::invalid_argument("order must list every column");
    ZeroNonzeroMask m(rows(), cols());
    for (std::size_t k = 0; k < cols(); ++k)
        for (std::size_t r = 0; r < rows(); ++r) m.set(r, k, mask_.at(r, order[k]));
    return PatternMatrix(std::move(m));
}

PatternMatrix base_pattern_36() {
    ZeroNonzeroMask m(3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        m.set(i, i, Cell::One);
        for (std::size_t c = 3; c < 6; ++c)
            if (c != 5 - i) m.set(i, c, Cell::Free);
    }
    return PatternMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Steps

StepResult step_I(const PatternMatrix& a) {
    a.validate();
    const std::size_t n = a.rows();
    const std::size_t len = a.cols();
    ZeroNonzeroMask b = embed(a.mask(), n + 1, len + n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        b.set(i, len + i, Cell::Free);
        b.set(n, len + i, Cell::Free);
    }
    b.set(n, len + n, Cell::One);
    return finish(std::move(b), iota_order(len));
}

StepResult step_II(const PatternMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t len = a.cols();
    if (n < 2) throw Error(ErrorKind::RearrangeFailure, "Step II needs at least two rows");
    const auto is_id = identity_mask(a);
    std::optional<std::size_t> pick;
    for (std::size_t c = len; c-- > 0 && !pick;)
        if (!is_id[c] && !a.mask().nonzero(0, c) && a.mask().nonzero(1, c) && nonzeros_in_column(a.mask(), c) >= 2)
            pick = c;
    // The nonzero in row 1 lets that column represent row 1 for the new row.
    if (!pick) throw Error(ErrorKind::RearrangeFailure, "no non-identity column with a zero in row 0 and a nonzero in row 1");
    a.validate();

    auto order = iota_order(len);
    std::swap(order[*pick], order[len - 1]);
    ZeroNonzeroMask b = embed(a.permuted(order).mask(), n + 1, len + n);
    b.set(n, len - 1, Cell::Free);
    b.set(0, len, Cell::Free);
    b.set(1, len, Cell::Free);
    b.set(n, len, Cell::Free);
    for (std::size_t l = 2; l < n; ++l) {
        b.set(l, len + l - 1, Cell::Free);
        b.set(n, len + l - 1, Cell::Free);
    }
    b.set(n, len + n - 1, Cell::One);
    return finish(std::move(b), std::move(order));
}

StepResult step_III(const PatternMatrix& a) {
    a.validate();
    const std::size_t n = a.rows();
    const std::size_t len = a.cols();
    const ZeroNonzeroMask& m = a.mask();
    const auto ids = a.identity_columns();
    const auto is_id = identity_mask(a);
    if (len < 2 * n) throw Error(ErrorKind::RearrangeFailure, "Step III needs at least 2n columns");

    // Last column: zero in row n-1. Before it, column len-2-r must be nonzero
    // in rows r and n-1, for r = 0..n-2; these are matched to rows.
    for (std::size_t last = 0; last < len; ++last) {
        if (is_id[last] || m.nonzero(n - 1, last) || nonzeros_in_column(m, last) < 2) continue;
        Matcher match(n - 1, len, [&](std::size_t r, std::size_t c) {
            return !is_id[c] && c != last && m.nonzero(r, c) && m.nonzero(n - 1, c);
        });
        const auto chosen = match.perfect();
        if (!chosen) continue;

        std::vector<std::size_t> order;
        std::vector<bool> used(len, false);
        for (const auto& c : ids) {
            order.push_back(*c);
            used[*c] = true;
        }
        used[last] = true;
        for (auto c : *chosen) used[c] = true;
        for (std::size_t c = 0; c < len; ++c)
            if (!used[c]) order.push_back(c);
        for (std::size_t r = n - 1; r-- > 0;) order.push_back((*chosen)[r]);
        order.push_back(last);

        ZeroNonzeroMask b = embed(a.permuted(order).mask(), n + 1, len + 2);
        for (std::size_t c = len - n; c < len; ++c) b.set(n, c, Cell::Free);
        for (std::size_t r = 0; r < n; ++r) b.set(r, len, Cell::Free);
        b.set(n, len + 1, Cell::One);
        return finish(std::move(b), std::move(order));
    }
    throw Error(ErrorKind::RearrangeFailure, "no column arrangement meets the Step III conditions");
}

std::string step_name(StepKind kind) {
    switch (kind) {
    case StepKind::Base36: return "Base36";
    case StepKind::StepI: return "StepI";
    case StepKind::StepII: return "StepII";
    case StepKind::StepIII: return "StepIII";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Planning

ConstructionPlan plan(std::size_t n, std::size_t length) {
    if (n < 3 || length < 2 * n || length > triangular(n))
        throw Error(ErrorKind::OutOfRange, "no pattern plan for (n, N) = (" + std::to_string(n) + ", " +
                                               std::to_string(length) + "); need n >= 3 and 2n <= N <= n(n+1)/2");

    std::map<std::pair<std::size_t, std::size_t>, std::optional<std::vector<StepKind>>> memo;
    auto search = [&](auto&& self, std::size_t d, std::size_t len) -> std::optional<std::vector<StepKind>> {
        if (d == 3) return len == 6 ? std::optional(std::vector{StepKind::Base36}) : std::nullopt;
        const auto key = std::make_pair(d, len);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::optional<std::vector<StepKind>> found;
        const std::pair<StepKind, std::size_t> moves[] = {
            {StepKind::StepIII, 2}, {StepKind::StepII, d - 1}, {StepKind::StepI, d}};
        for (const auto& [kind, growth] : moves) {
            if (len < growth) continue;
            const std::size_t prev = len - growth;
            if (prev < 2 * (d - 1) || prev > triangular(d - 1)) continue;
            if (auto path = self(self, d - 1, prev)) {
                path->push_back(kind);
                found = std::move(path);
                break;
            }
        }
        memo[key] = found;
        return found;
    };
    auto steps = search(search, n, length);
    if (!steps) throw Error(ErrorKind::OutOfRange, "no plan reaches (" + std::to_string(n) + ", " + std::to_string(length) + ")");
    return ConstructionPlan{n, length, std::move(*steps)};
}

PlannedPattern realize(const ConstructionPlan& p) {
    PlannedPattern out{base_pattern_36(), {}};
    for (auto kind : p.steps) {
        if (kind == StepKind::Base36) continue;
        StepResult r = kind == StepKind::StepI    ? step_I(out.pattern)
                       : kind == StepKind::StepII ? step_II(out.pattern)
                                                  : step_III(out.pattern);
        out.pattern = std::move(r.pattern);
        out.column_orders.push_back(std::move(r.column_order));
    }
    if (out.pattern.rows() != p.n || out.pattern.cols() != p.length)
        throw Error(ErrorKind::PatternViolation, "plan did not land on its target");
    return out;
}

// ---------------------------------------------------------------------------
// Generators

GeneratedFrame generate_exact_pr(std::size_t n, std::size_t length, Seed seed, std::size_t max_retries,
                                 std::uint64_t range_max) {
    if (n == 0 || length + 1 < 2 * n || length > triangular(n))
        throw Error(ErrorKind::OutOfRange, "no exact PR frame of length " + std::to_string(length) + " in dimension " +
                                               std::to_string(n) + "; need 2n-1 <= N <= n(n+1)/2");

    const bool dense = length + 1 == 2 * n;
    std::vector<std::string> names;
    ZeroNonzeroMask mask(n, length);
    if (dense) {
        names.push_back("FullSpark");
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < length; ++c) mask.set(r, c, Cell::Free);
    } else {
        const ConstructionPlan p = plan(n, length);
        for (auto k : p.steps) names.push_back(step_name(k));
        mask = realize(p).pattern.mask();
    }

    for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
        RatMatrix m = sample_pattern(mask, range_max, derive_seed(seed, attempt));
        if (rank(m) != n) continue;
        Frame f(std::move(m));
        if (dense && spark(f) != n + 1) continue;
        if (!is_exact_pr_frame(f).exact) continue;
        Certificate cert;
        cert.exact_pr = true;
        cert.exact_pr_redundancy = true;
        cert.d = partition_width(f.columns(), IndexSet::full(f.size()).bits());
        cert.plan = names;
        cert.seed = seed;
        cert.retries = attempt;
        return GeneratedFrame{std::move(f), std::move(cert)};
    }
    throw Error(ErrorKind::RetriesExhausted, "no exact PR frame for (" + std::to_string(n) + ", " +
                                                 std::to_string(length) + ") in " + std::to_string(max_retries + 1) +
                                                 " draws");
}

Frame compose_direct_sum(std::span<const Frame> blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct sum of no frames");
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        rows += b.dim();
        cols += b.size();
    }
    RatMatrix m(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < b.size(); ++c) m.set(r0 + r, c0 + c, b.matrix()(r, c));
        r0 += b.dim();
        c0 += b.size();
    }
    return Frame(std::move(m));
}

Frame compose_direct_sum(const Frame& first, const Frame& second) {
    const Frame both[] = {first, second};
    return compose_direct_sum(std::span<const Frame>(both));
}

namespace {

// Rewrites an exact PR frame G for Q^k so that its first k vectors are
// e_0..e_{k-1}, then spreads it into Q^n as described for generate_with_dmax.
Frame spread(const Frame& g, std::size_t n) {
    const std::size_t k = g.dim();
    const std::size_t len = g.size();
    const ColumnSystem& cs = g.columns();
    std::vector<std::size_t> order;
    std::uint64_t chosen = 0;
    for (std::size_t c = 0; c < len && order.size() < k; ++c) {
        const std::uint64_t grown = chosen | (std::uint64_t{1} << c);
        if (cs.rank(grown) > order.size()) {
            order.push_back(c);
            chosen = grown;
        }
    }
    for (std::size_t c = 0; c < len; ++c)
        if (((chosen >> c) & 1U) == 0) order.push_back(c);

    const RatMatrix arranged = g.matrix().select_columns(order);
    const std::vector<std::size_t> head = iota_order(k);
    const RatMatrix h = inverse(arranged.select_columns(head)) * arranged;

    RatMatrix f(n, len);
    for (std::size_t c = 0; c < len; ++c) {
        const RatVector col = c < k ? RatVector{} : to_rational(primitive_integer_vector(h.column(c)));
        if (c < k) {
            f.set(c, c, 1);
            continue;
        }
        for (std::size_t r = 0; r < k; ++r) f.set(r, c, col[r]);
        if (c < n) f.set(c, c, 1);
    }
    return Frame(std::move(f));
}

std::size_t balanced_value(const std::vector<std::size_t>& dims) {
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
    std::vector<bool> reach(total + 1, false);
    reach[0] = true;
    for (auto d : dims)
        for (std::size_t s = total + 1; s-- > d;)
            if (reach[s - d]) reach[s] = true;
    std::size_t best = total;
    for (std::size_t s = 0; s <= total; ++s)
        if (reach[s]) best = std::min(best, std::max(s, total - s));
    return best;
}

struct Block {
    std::size_t dim;
    std::size_t length;
};

// Block dimensions (non-increasing) and lengths with the requested total
// length and balanced split value k. The two-block split {k, n-k} is tried
// before any finer decomposition.
std::optional<std::vector<Block>> choose_blocks(std::size_t n, std::size_t k, std::size_t length) {
    auto fill = [&](const std::vector<std::size_t>& dims) -> std::optional<std::vector<Block>> {
        std::size_t lo = 0;
        std::size_t hi = 0;
        for (auto d : dims) {
            lo += 2 * d - 1;
            hi += triangular(d);
        }
        if (length < lo || length > hi || balanced_value(dims) != k) return std::nullopt;
        std::vector<Block> blocks;
        std::size_t extra = length - lo;
        for (auto d : dims) {
            const std::size_t add = std::min(extra, triangular(d) - (2 * d - 1));
            blocks.push_back({d, 2 * d - 1 + add});
            extra -= add;
        }
        return blocks;
    };
    if (k < n)
        if (auto b = fill({k, n - k})) return b;

    std::optional<std::vector<Block>> found;
    std::vector<std::size_t> parts;
    auto walk = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
        if (found) return;
        if (remaining == 0) {
            found = fill(parts);
            return;
        }
        for (std::size_t p = std::min(max_part, remaining); p >= 1 && !found; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    walk(walk, n, n);
    return found;
}

std::string describe_blocks(const std::vector<Block>& blocks) {
    std::ostringstream s;
    s << "DirectSum[";
    for (std::size_t i = 0; i < blocks.size(); ++i) s << (i ? "," : "") << blocks[i].dim << "x" << blocks[i].length;
    s << "]";
    return s.str();
}

}  // namespace

GeneratedFrame generate_with_dmax(std::size_t n, std::size_t k, std::size_t length, Seed seed,
                                  std::size_t max_retries) {
    if (n == 0 || k < (n + 1) / 2 || k > n)
        throw Error(ErrorKind::OutOfRange, "k = " + std::to_string(k) + " outside [[(n+1)/2], n] for n = " +
                                               std::to_string(n));
    const std::size_t top = triangular(k) + triangular(n - k);
    if (length + 1 < 2 * k || length > top || length < n)
        throw Error(ErrorKind::OutOfRange, "length " + std::to_string(length) + " outside [max(2k-1, n), " +
                                               std::to_string(top) + "] for (n, k) = (" + std::to_string(n) + ", " +
                                               std::to_string(k) + ")");

    const bool single = length <= triangular(k);
    std::optional<std::vector<Block>> blocks;
    if (!single) {
        blocks = choose_blocks(n, k, length);
        if (!blocks)
            throw Error(ErrorKind::OutOfRange, "no block decomposition realizes (n, k, N) = (" + std::to_string(n) +
                                                   ", " + std::to_string(k) + ", " + std::to_string(length) + ")");
    }

    for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
        const Seed s = derive_seed(seed, attempt);
        std::vector<std::string> names;
        std::optional<Frame> f;
        if (single) {
            GeneratedFrame g = generate_exact_pr(k, length, s);
            names.push_back("Spread[" + std::to_string(k) + "x" + std::to_string(length) + "]");
            for (auto& p : g.certificate.plan) names.push_back(p);
            f = spread(g.frame, n);
        } else {
            std::vector<Frame> parts;
            for (std::size_t b = 0; b < blocks->size(); ++b)
                parts.push_back(generate_exact_pr((*blocks)[b].dim, (*blocks)[b].length, derive_seed(s, b)).frame);
            names.push_back(describe_blocks(*blocks));
            f = compose_direct_sum(std::span<const Frame>(parts));
        }
        const std::size_t d = partition_width(f->columns(), IndexSet::full(f->size()).bits());
        if (d != k || !has_exact_pr_redundancy(*f)) continue;
        Certificate cert;
        cert.exact_pr = d == n;
        cert.exact_pr_redundancy = true;
        cert.d = d;
        cert.plan = std::move(names);
        cert.seed = seed;
        cert.retries = attempt;
        return GeneratedFrame{std::move(*f), std::move(cert)};
    }
    throw Error(ErrorKind::RetriesExhausted, "no certified frame for (n, k, N) = (" + std::to_string(n) + ", " +
                                                 std::to_string(k) + ", " + std::to_string(length) + ")");
}

BasisWithSubspace basis_with_maximal_subspace(std::size_t n, std::size_t k, Seed seed, std::size_t max_retries) {
    if (k < 1 || k > (n + 1) / 2)
        throw Error(ErrorKind::OutOfRange, "k = " + std::to_string(k) + " outside [1, [(n+1)/2]] for n = " +
                                               std::to_string(n));
    RatMatrix head(n, k);
    for (std::size_t i = 0; i < k; ++i) head.set(i, i, 1);
    Subspace m(head);

    for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        RatMatrix phi(k, 2 * k - 1);
        for (std::size_t i = 0; i < k; ++i) phi.set(i, i, 1);
        for (std::size_t c = k; c < 2 * k - 1; ++c)
            for (std::size_t r = 0; r < k; ++r) phi.set(r, c, Rational(rng.uniform(1, 1 << 16)));
        if (spark(Frame(phi)) != k + 1) continue;

        RatMatrix u = RatMatrix::identity(n);
        for (std::size_t c = k; c < 2 * k - 1; ++c)
            for (std::size_t r = 0; r < k; ++r) u.set(r, c, phi(r, c));
        Frame basis(std::move(u));
        if (!is_pr_subspace(basis, m)) continue;
        if (is_maximal_pr_subspace(basis, m, 0, seed).status != MaximalityStatus::Maximal) continue;
        return BasisWithSubspace{std::move(basis), m};
    }
    throw Error(ErrorKind::RetriesExhausted, "no certified basis for (n, k) = (" + std::to_string(n) + ", " +
                                                 std::to_string(k) + ")");
}

}  // namespace prframe
