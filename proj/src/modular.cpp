#include "prframe/modular.hpp"

#include <bit>
#include <stdexcept>

namespace prframe {

std::uint64_t modp::reduce(const Integer& z) {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), P));
}

void ModBasis::reduce(std::uint64_t* w) const {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t p = pivots_[k];
        const std::uint64_t c = w[p];
        if (c == 0) continue;
        const std::uint64_t* b = rows_.data() + k * dim_;
        const std::uint64_t lead = b[p];
        for (std::size_t j = 0; j < dim_; ++j) w[j] = modp::sub(modp::mul(lead, w[j]), modp::mul(c, b[j]));
    }
}

bool ModBasis::insert(const std::uint64_t* v) {
    if (full()) return false;
    const std::size_t base = rows_.size();
    rows_.insert(rows_.end(), v, v + dim_);
    std::uint64_t* w = rows_.data() + base;
    reduce(w);
    for (std::size_t j = 0; j < dim_; ++j)
        if (w[j] != 0) {
            pivots_.push_back(j);
            return true;
        }
    rows_.resize(base);
    return false;
}

bool ModBasis::contains(const std::uint64_t* v) const {
    if (full()) return true;
    std::vector<std::uint64_t> w(v, v + dim_);
    reduce(w.data());
    for (auto x : w)
        if (x != 0) return false;
    return true;
}

ColumnSystem::ColumnSystem(const RatMatrix& columns) : dim_(columns.rows()), count_(columns.cols()) {
    if (count_ > 64) throw std::invalid_argument("at most 64 columns are supported");
    ints_.reserve(count_);
    res_.reserve(dim_ * count_);
    for (std::size_t i = 0; i < count_; ++i) {
        ints_.push_back(primitive_integer_vector(columns.column(i)));
        for (const auto& z : ints_.back()) res_.push_back(modp::reduce(z));
    }
}

std::size_t ColumnSystem::rank_mod_p(std::uint64_t mask) const {
    ModBasis basis(dim_);
    for (std::uint64_t m = mask; m != 0 && !basis.full(); m &= m - 1)
        basis.insert(residues(static_cast<std::size_t>(std::countr_zero(m))));
    return basis.rank();
}

std::size_t ColumnSystem::exact_rank(std::uint64_t mask) const {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k == 0) return 0;
    std::vector<Integer> a;
    a.reserve(k * dim_);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const auto& col = ints_[static_cast<std::size_t>(std::countr_zero(m))];
        a.insert(a.end(), col.begin(), col.end());
    }
    return integer_rank(a, k, dim_);
}

std::size_t ColumnSystem::rank(std::uint64_t mask) const {
    const std::size_t r = rank_mod_p(mask);
    if (r == dim_ || r == static_cast<std::size_t>(std::popcount(mask))) return r;
    return exact_rank(mask);
}

bool ColumnSystem::in_span(std::size_t i, std::uint64_t mask) const {
    mask &= ~(std::uint64_t{1} << i);
    return rank(mask) == rank(mask | (std::uint64_t{1} << i));
}

}  // namespace prframe
