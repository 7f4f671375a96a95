#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "prframe/construct.hpp"
#include "prframe/error.hpp"
#include "prframe/reference_frames.hpp"
#include "prframe/subspaces.hpp"

using namespace prframe;

namespace {

template <class Fn>
ErrorKind error_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no prframe::Error thrown");
    return ErrorKind::ParseError;
}

RatVector vec(std::initializer_list<long> v) {
    RatVector out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

Subspace span_of(std::initializer_list<RatVector> vs, std::size_t n) { return Subspace(RatMatrix::from_columns(vs, n)); }

Frame standard(std::size_t n) { return Frame(RatMatrix::identity(n)); }

// A random basis of Q^n with small entries.
Frame random_basis(oracle::Gen& gen, std::size_t n) {
    for (;;) {
        const RatMatrix m = gen.matrix(n, n, 3, 30);
        if (rank(m) == n) return Frame(m);
    }
}

}  // namespace

TEST_CASE("subspace basics", "[subspaces]") {
    const Subspace m = example_r4_subspace();
    CHECK(m.dim() == 2);
    CHECK(m.ambient_dim() == 4);
    CHECK(m.contains(vec({2, 0, 1, 1})));
    CHECK_FALSE(m.contains(vec({1, 0, 0, 0})));
    CHECK(m.contains(span_of({vec({2, 0, 1, 1})}, 4)));
    CHECK_THROWS_AS(Subspace(RatMatrix::from_rows({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("PR subspace examples", "[subspaces]") {
    CHECK(is_pr_subspace(standard(4), example_r4_subspace()));
    CHECK(is_pr_subspace(standard(2), span_of({vec({1, 1})}, 2)));
    CHECK_FALSE(is_pr_subspace(standard(2), span_of({vec({1, 1}), vec({1, -1})}, 2)));

    oracle::Gen gen(41);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(gen.between(1, 4));
        const Frame f(gen.frame(n, static_cast<std::size_t>(gen.between(static_cast<long>(n), 8)), 3, 30));
        REQUIRE(is_pr_subspace(f, Subspace(RatMatrix::identity(n))) == is_phase_retrievable(f));
    }
}

TEST_CASE("PR subspace decisions agree with brute force", "[subspaces]") {
    oracle::Gen gen(42);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(gen.between(2, 4));
        const Frame f(gen.frame(n, static_cast<std::size_t>(gen.between(static_cast<long>(n), 7)), 3, 30));
        const auto k = static_cast<std::size_t>(gen.between(1, static_cast<long>(n)));
        const RatMatrix b = gen.matrix(n, k, 2, 20);
        if (rank(b) < k) continue;
        REQUIRE(is_pr_subspace(f, Subspace(b)) == oracle::pr_subspace(f.matrix(), b));
    }
}

TEST_CASE("d_max examples", "[subspaces]") {
    CHECK(d_max(example_r3_frame()) == 2);
    for (auto len : reference_lengths()) CHECK(d_max(reference_matrix(len)) == 5);
    CHECK(d_max(standard(5)) == 3);
    CHECK(error_of([] { d_max(reference_matrix(15), 12); }) == ErrorKind::CapExceeded);
}

TEST_CASE("random PR subspaces", "[subspaces]") {
    const Frame r3 = example_r3_frame();
    const Subspace m = random_pr_subspace(r3, 2, Seed{1});
    CHECK(m.dim() == 2);
    CHECK(oracle::pr_subspace(r3.matrix(), m.basis()));
    CHECK(error_of([&] { random_pr_subspace(r3, 3, Seed{1}); }) == ErrorKind::OutOfRange);
    CHECK(error_of([&] { random_pr_subspace(r3, 0, Seed{1}); }) == ErrorKind::OutOfRange);
    CHECK(random_pr_subspace(r3, 2, Seed{1}).basis() == m.basis());

    oracle::Gen gen(43);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(gen.between(1, 4));
        const Frame f(gen.frame(n, static_cast<std::size_t>(gen.between(static_cast<long>(n), 7)), 3, 30));
        const std::size_t d = d_max(f);
        const auto dim = static_cast<std::size_t>(gen.between(1, static_cast<long>(d)));
        const Subspace s = random_pr_subspace(f, dim, Seed{gen.next()});
        REQUIRE(s.dim() == dim);
        REQUIRE(oracle::pr_subspace(f.matrix(), s.basis()));
    }
}

TEST_CASE("support examples", "[subspaces]") {
    CHECK(support(vec({1, 0, 1}), standard(3)) == IndexSet::of({0, 2}));
    CHECK(support(vec({1, 0}), Frame(RatMatrix::from_rows({{1, 1}, {0, 1}}))) == IndexSet::of({0, 1}));
    CHECK(support(vec({0, 0, 0}), standard(3)).empty());
    CHECK(error_of([] { support(vec({1, 0}), example_r3_frame()); }) == ErrorKind::NotABasis);
}

TEST_CASE("min_support examples", "[subspaces]") {
    CHECK(min_support(example_r4_subspace(), standard(4)) == 3);
    CHECK(min_support(span_of({vec({0, 0, 1})}, 3), standard(3)) == 1);
    oracle::Gen gen(44);
    const RatMatrix b = gen.matrix(5, 2, 9, 0);
    REQUIRE(rank(b) == 2);
    CHECK(oracle::min_support(b, RatMatrix::identity(5)) == 4);
    CHECK(min_support(Subspace(b), standard(5)) == 4);
}

TEST_CASE("min_support agrees with brute force and bounds PR subspaces", "[subspaces]") {
    oracle::Gen gen(45);
    int pr = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(gen.between(2, 6));
        const Frame basis = random_basis(gen, n);
        const auto k = static_cast<std::size_t>(gen.between(1, static_cast<long>(n)));
        const RatMatrix b = gen.matrix(n, k, 2, static_cast<int>(gen.between(0, 60)));
        if (rank(b) < k) continue;
        const Subspace m(b);
        const std::size_t s = min_support(m, basis);
        REQUIRE(s == oracle::min_support(b, basis.matrix()));
        if (is_pr_subspace(basis, m)) {
            REQUIRE(s >= k);
            ++pr;
        }
    }
    CHECK(pr > 20);
}

TEST_CASE("maximality verdicts", "[subspaces]") {
    const MaximalityVerdict r4 = is_maximal_pr_subspace(standard(4), example_r4_subspace());
    CHECK(r4.status == MaximalityStatus::Maximal);

    const MaximalityVerdict e1 = is_maximal_pr_subspace(standard(5), span_of({vec({1, 0, 0, 0, 0})}, 5));
    CHECK(e1.status == MaximalityStatus::Maximal);

    const Subspace generic = span_of({vec({3, -1, 4, 1, -5})}, 5);
    const MaximalityVerdict g = is_maximal_pr_subspace(standard(5), generic, 32, Seed{3});
    CHECK(g.status == MaximalityStatus::NotMaximal);
    REQUIRE(g.witness);
    CHECK(g.witness->dim() == 2);
    CHECK(g.witness->contains(generic));
    CHECK(is_pr_subspace(standard(5), *g.witness));

    CHECK(error_of([] {
              is_maximal_pr_subspace(standard(2), Subspace(RatMatrix::identity(2)));
          }) == ErrorKind::NotPRSubspace);
}

TEST_CASE("maximality for bases follows the support criterion", "[subspaces]") {
    oracle::Gen gen(46);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(gen.between(3, 6));
        const Frame basis = random_basis(gen, n);
        const std::size_t half = (n + 1) / 2;
        const auto k = static_cast<std::size_t>(gen.between(1, static_cast<long>(half)));
        const RatMatrix b = gen.matrix(n, k, 3, static_cast<int>(gen.between(0, 50)));
        if (rank(b) < k) continue;
        const Subspace m(b);
        if (!is_pr_subspace(basis, m)) continue;
        const MaximalityVerdict v = is_maximal_pr_subspace(basis, m, 32, Seed{gen.next()});
        REQUIRE(v.status != MaximalityStatus::Unknown);
        if (k < half) REQUIRE((v.status == MaximalityStatus::Maximal) == (min_support(m, basis) == k));
        if (k == half) REQUIRE(v.status == MaximalityStatus::Maximal);
        if (v.witness) REQUIRE(oracle::pr_subspace(basis.matrix(), v.witness->basis()));
    }
}

TEST_CASE("extend_to_maximal examples", "[subspaces]") {
    const Subspace e3 = extend_to_maximal(standard(5), vec({0, 0, 1, 0, 0}));
    CHECK(e3.dim() == 1);
    CHECK(e3.contains(vec({0, 0, 1, 0, 0})));

    const RatVector x = vec({1, 1, 1, 0, 0});
    const Subspace m = extend_to_maximal(standard(5), x, Seed{2});
    CHECK(m.dim() == 3);
    CHECK(m.contains(x));
    CHECK(oracle::pr_subspace(RatMatrix::identity(5), m.basis()));
    CHECK(oracle::min_support(m.basis(), RatMatrix::identity(5)) == 3);
    CHECK(is_maximal_pr_subspace(standard(5), m).status == MaximalityStatus::Maximal);

    CHECK(error_of([] { extend_to_maximal(standard(4), vec({1, 1, 1, 0})); }) == ErrorKind::SupportTooLarge);
    CHECK(error_of([] { extend_to_maximal(standard(3), vec({0, 0, 0})); }) == ErrorKind::OutOfRange);
}

TEST_CASE("extend_to_maximal over random bases", "[subspaces]") {
    oracle::Gen gen(47);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(gen.between(2, 6));
        const Frame basis = random_basis(gen, n);
        const std::size_t k = static_cast<std::size_t>(gen.between(1, static_cast<long>((n + 1) / 2)));
        // x with <x, b_i> nonzero exactly for the first k indices: x = (B^T)^{-1} y.
        RatVector y(n);
        for (std::size_t i = 0; i < k; ++i) y[i] = Rational(gen.between(1, 5) * (gen.between(0, 1) ? 1 : -1));
        const RatVector x = inverse(basis.matrix().transpose()) * y;
        REQUIRE(support(x, basis).size() == k);
        const Subspace m = extend_to_maximal(basis, x, Seed{gen.next()});
        REQUIRE(m.dim() == k);
        REQUIRE(m.contains(x));
        REQUIRE(oracle::pr_subspace(basis.matrix(), m.basis()));
        REQUIRE(oracle::min_support(m.basis(), basis.matrix()) == k);
        REQUIRE(is_maximal_pr_subspace(basis, m).status == MaximalityStatus::Maximal);
    }
}
