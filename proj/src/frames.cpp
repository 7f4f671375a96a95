#include "prframe/frames.hpp"

#include "prframe/error.hpp"

#include <bit>

namespace prframe {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::vector<std::size_t> members(std::uint64_t mask) { return IndexSet(mask).indices(); }

// Walks two-sided assignments of the active columns. `left` and `right` hold
// one mod-p basis per depth so that backtracking is a copy-assignment.
class PartitionWalk {
public:
    PartitionWalk(const ColumnSystem& cs, std::uint64_t active)
        : cs_(cs), order_(members(active)), left_(order_.size() + 1, ModBasis(cs.dim())),
          right_(order_.size() + 1, ModBasis(cs.dim())) {}

    ComplementResult complement() {
        const std::size_t m = order_.size();
        if (m == 0) return {cs_.dim() == 0, IndexSet{}};
        left_[1] = left_[0];
        left_[1].insert(cs_.residues(order_[0]));
        right_[1] = right_[0];
        if (complement_step(1, bit(order_[0]), 0)) return {true, std::nullopt};
        return {false, IndexSet(failing_)};
    }

    std::size_t width() {
        const std::size_t m = order_.size();
        std::uint64_t all = 0;
        for (auto i : order_) all |= bit(i);
        best_ = cs_.rank(all);
        if (m == 0) return 0;
        floor_ = (best_ + 1) / 2;
        left_[1] = left_[0];
        left_[1].insert(cs_.residues(order_[0]));
        right_[1] = right_[0];
        width_step(1, bit(order_[0]), 0);
        return best_;
    }

private:
    bool complement_step(std::size_t t, std::uint64_t lmask, std::uint64_t rmask) {
        if (left_[t].full() || right_[t].full()) return true;
        if (t == order_.size()) {
            if (cs_.spans(lmask) || cs_.spans(rmask)) return true;
            failing_ = lmask;
            return false;
        }
        const std::size_t j = order_[t];
        left_[t + 1] = left_[t];
        left_[t + 1].insert(cs_.residues(j));
        right_[t + 1] = right_[t];
        if (!complement_step(t + 1, lmask | bit(j), rmask)) return false;
        left_[t + 1] = left_[t];
        right_[t + 1] = right_[t];
        right_[t + 1].insert(cs_.residues(j));
        return complement_step(t + 1, lmask, rmask | bit(j));
    }

    // Returns true once the lower bound ceil(rank/2) has been reached.
    bool width_step(std::size_t t, std::uint64_t lmask, std::uint64_t rmask) {
        if (left_[t].rank() >= best_ || right_[t].rank() >= best_) return false;
        if (t == order_.size()) {
            const std::size_t value = std::max(cs_.rank(lmask), cs_.rank(rmask));
            if (value < best_) best_ = value;
            return best_ <= floor_;
        }
        const std::size_t j = order_[t];
        left_[t + 1] = left_[t];
        left_[t + 1].insert(cs_.residues(j));
        right_[t + 1] = right_[t];
        if (width_step(t + 1, lmask | bit(j), rmask)) return true;
        left_[t + 1] = left_[t];
        right_[t + 1] = right_[t];
        right_[t + 1].insert(cs_.residues(j));
        return width_step(t + 1, lmask, rmask | bit(j));
    }

    const ColumnSystem& cs_;
    std::vector<std::size_t> order_;
    std::vector<ModBasis> left_;
    std::vector<ModBasis> right_;
    std::uint64_t failing_ = 0;
    std::size_t best_ = 0;
    std::size_t floor_ = 0;
};

}  // namespace

Frame::Frame(RatMatrix vectors) : matrix_(std::move(vectors)) {
    if (matrix_.cols() > 64) throw Error(ErrorKind::NotAFrame, "at most 64 vectors are supported");
    columns_ = std::make_shared<const ColumnSystem>(matrix_);
    if (!columns_->spans(IndexSet::full(matrix_.cols()).bits()))
        throw Error(ErrorKind::NotAFrame, "vectors do not span Q^" + std::to_string(matrix_.rows()));
}

Frame Frame::from_columns(const std::vector<RatVector>& vectors, std::size_t dim) {
    return Frame(RatMatrix::from_columns(vectors, dim));
}

Frame Frame::subframe(IndexSet subset) const {
    const auto idx = subset.indices();
    for (auto i : idx)
        if (i >= size()) throw std::out_of_range("subframe index out of range");
    return Frame(matrix_.select_columns(idx));
}

std::size_t span_dim(const Frame& frame, IndexSet subset) {
    if ((subset.bits() & ~IndexSet::full(frame.size()).bits()) != 0) throw std::out_of_range("index out of range");
    return frame.columns().rank(subset.bits());
}

ComplementResult complement_property(const ColumnSystem& columns, std::uint64_t active) {
    return PartitionWalk(columns, active).complement();
}

std::size_t partition_width(const ColumnSystem& columns, std::uint64_t active) {
    return PartitionWalk(columns, active).width();
}

ComplementResult has_complement_property(const Frame& frame) {
    return complement_property(frame.columns(), IndexSet::full(frame.size()).bits());
}

bool is_phase_retrievable(const Frame& frame) { return has_complement_property(frame).holds; }

std::size_t spark(const Frame& frame) {
    const ColumnSystem& cs = frame.columns();
    const std::size_t n = frame.size();
    std::size_t best = n + 1;
    std::vector<ModBasis> stack(n + 1, ModBasis(cs.dim()));

    // Depth-first over independent sets in lexicographic order; a set is
    // only extended while a smaller dependent set could still be found.
    // Below a node where the mod-p basis lost a vector, `mod_ok` is false
    // and independence is decided exactly.
    auto walk = [&](auto&& self, std::size_t depth, std::size_t next, std::uint64_t mask, bool mod_ok) -> void {
        for (std::size_t j = next; j < n && depth + 1 < best; ++j) {
            stack[depth + 1] = stack[depth];
            const std::uint64_t grown = mask | bit(j);
            const bool mod_independent = stack[depth + 1].insert(cs.residues(j));
            const bool independent = (mod_ok && mod_independent) || cs.exact_rank(grown) == depth + 1;
            if (!independent) {
                best = depth + 1;
                return;
            }
            if (depth + 2 < best) self(self, depth + 1, j + 1, grown, mod_ok && mod_independent);
        }
    };
    walk(walk, 0, 0, 0, true);
    return best;
}

ExactnessReport is_exact_pr_frame(const Frame& frame) {
    ExactnessReport report;
    const ColumnSystem& cs = frame.columns();
    const std::uint64_t all = IndexSet::full(frame.size()).bits();
    const auto cp = complement_property(cs, all);
    report.phase_retrievable = cp.holds;
    report.failing = cp.failing;
    if (!cp.holds) return report;
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (complement_property(cs, all & ~bit(i)).holds) report.removable.push_back(i);
    report.exact = report.removable.empty();
    return report;
}

}  // namespace prframe
