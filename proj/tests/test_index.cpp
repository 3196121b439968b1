#include "doctest.h"
#include "inverto/families.hpp"
#include "inverto/hereditary.hpp"
#include "inverto/index.hpp"
#include "inverto/structure.hpp"
#include "oracles.hpp"

using namespace inverto;

namespace {

Tournament c3() { return tournament_from_code("T3:101"); }

void check_witness(const Tournament& t, const IndexResult& r) {
    CHECK(r.witness.size() == static_cast<std::size_t>(r.value));
    CHECK(is_acyclic(invert_seq(t, r.witness)));
}

}  // namespace

TEST_CASE("index examples") {
    for (int n = 0; n <= 7; ++n) {
        auto r = inversion_index(chain(n));
        CHECK(r.value == 0);
        CHECK(r.witness.empty());
    }
    auto r = inversion_index(c3());
    CHECK(r.value == 1);
    check_witness(c3(), r);
    CHECK(inversion_index(c3(), IndexMethod::OrderMin).value == 1);

    CHECK(inversion_index(bound_T5()).value == 2);
    CHECK(inversion_index(bound_B6()).value == 2);
    CHECK(inversion_index(bound_T5(), IndexMethod::OrderMin).value == 2);
    CHECK(inversion_index(bound_B6(), IndexMethod::OrderMin).value == 2);
}

TEST_CASE("table levels equal the BFS oracle") {
    for (int n = 0; n <= 5; ++n) {
        const auto& table = index_all(n);
        auto levels = oracle::index_levels(n);
        for (std::size_t c = 0; c < levels.size(); ++c) CHECK(table.index_of(c) == levels[c]);
    }
}

TEST_CASE("index_all counts") {
    const auto& t3 = index_all(3);
    REQUIRE(t3.level_counts().size() == 2);
    CHECK(t3.level_counts()[0] == 6);
    CHECK(t3.level_counts()[1] == 2);
    CHECK(index_all(4).max_index() == 1);
    CHECK(index_all(5).max_index() == 2);
    CHECK(i_of_n(3).max_index == 1);
    CHECK(i_of_n(4).max_index == 1);
    CHECK(i_of_n(5).max_index == 2);
}

TEST_CASE("witnesses are shortest and lexicographically least") {
    for (int n = 3; n <= 5; ++n) {
        const auto& table = index_all(n);
        const auto& gens = table.generators();
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << pair_count(n)); ++c) {
            auto t = Tournament::from_packed(n, c);
            auto r = table.witness(t);
            check_witness(t, r);
            // the first set must be the least generator that lowers the index
            if (r.value > 0) {
                for (const auto& g : gens) {
                    if (table.index_of(invert(t, g)) == r.value - 1) {
                        CHECK(g == r.witness[0]);
                        break;
                    }
                }
            }
        }
    }
    CHECK(inversion_index(c3()).witness.to_string() == "{0,1}");
}

TEST_CASE("both methods agree") {
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << pair_count(n)); c += 1 + (n == 5) * 6) {
            auto t = Tournament::from_packed(n, c);
            auto a = inversion_index(t, IndexMethod::StateBfs);
            auto b = inversion_index(t, IndexMethod::OrderMin);
            CHECK(a.value == b.value);
            check_witness(t, b);
        }
    for (int trial = 0; trial < 20; ++trial) {
        auto t = oracle::random_tournament(7);
        CHECK(inversion_index(t).value == inversion_index(t, IndexMethod::OrderMin).value);
    }
}

TEST_CASE("order-min handles order 8 without a table") {
    auto t = invert_seq(chain(8), InversionSequence(8, {{0, 2, 4, 6}, {1, 3, 5, 7}}));
    auto r = inversion_index(t, IndexMethod::OrderMin);
    CHECK(r.value == 2);
    check_witness(t, r);
    CHECK_THROWS_AS(inversion_index(t, IndexMethod::StateBfs), ResourceLimit);
    CHECK_THROWS_AS(inversion_index(chain(9), IndexMethod::OrderMin), ResourceLimit);
}

TEST_CASE("index invariants over order 5") {
    const auto& table = index_all(5);
    for (std::uint64_t c = 0; c < 1024; ++c) {
        auto t = Tournament::from_packed(5, c);
        const int i = table.index_of(c);
        CHECK((i == 0) == is_acyclic(t));
        CHECK(table.index_of(dual(t)) == i);
        for (std::uint64_t x = 1; x < 32; ++x) {
            auto r = restrict(t, VertexSet::from_mask(5, x));
            CHECK(index_all(r.order()).index_of(r) <= i);
        }
    }
}

TEST_CASE("index is the distance to the nearest chain") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> perm(n);
        std::vector<Tournament> chains;
        std::iota(perm.begin(), perm.end(), 0);
        do chains.push_back(chain_from_order(perm));
        while (std::next_permutation(perm.begin(), perm.end()));
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << pair_count(n)); c += (n == 5 ? 7 : 1)) {
            auto t = Tournament::from_packed(n, c);
            int best = 1 << 30;
            for (const auto& l : chains) best = std::min(best, distance(t, l));
            CHECK(best == index_all(n).index_of(c));
        }
    }
}

TEST_CASE("distance matches the graphic distance oracle") {
    CHECK(distance(chain(3), c3()) == 1);
    for (int i = 0; i < 10; ++i) {
        auto t = oracle::random_tournament(6);
        CHECK(distance(t, t) == 0);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 4;
        auto a = oracle::random_tournament(n), b = oracle::random_tournament(n), w = oracle::random_tournament(n);
        CHECK(distance(a, b) == oracle::graphic_distance(a, b));
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, w) <= distance(a, b) + distance(b, w));
    }
    for (int n = 4; n <= 5; ++n) {
        auto t = chain(n);
        CHECK(distance(t, flip_edges(t, SimpleGraph::path(n))) == n - 1);
    }
}

TEST_CASE("lexicographic sums keep the quotient index") {
    auto& gen = oracle::rng();
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 1 + static_cast<int>(gen() % 4);
        auto quotient = oracle::random_tournament(q);
        std::vector<Tournament> blocks;
        int total = 0;
        for (int i = 0; i < q; ++i) {
            const int room = 7 - total - (q - 1 - i);
            const int size = 1 + static_cast<int>(gen() % std::min(3, room));
            blocks.push_back(chain_from_order(oracle::random_permutation(size)));
            total += size;
        }
        auto sum = lex_sum(quotient, blocks);
        CHECK(inversion_index(sum).value == inversion_index(quotient).value);
    }
}

TEST_CASE("table bounds") {
    for (int n = 4; n <= 7; ++n) {
        auto s = i_of_n(n);
        CHECK(s.bounds.holds);
        CHECK(s.max_index <= n - 3);
    }
    // ceil((n-1)/2 - log2 n) for a few n, computed by hand
    CHECK(check_index_bounds(7, 0).lower_log == 1);
    CHECK(check_index_bounds(16, 0).lower_log == 4);
    CHECK(check_index_bounds(17, 0).lower_log == 4);
    CHECK(check_index_bounds(4, 0).lower_log == 0);
    CHECK_FALSE(check_index_bounds(5, 3).holds);
    CHECK_FALSE(check_index_bounds(5, 0).holds);
}

TEST_CASE("count_low_index") {
    auto a = count_low_index(3, 1);
    CHECK(a.count == 6);
    CHECK(a.bound == 6);
    CHECK(count_low_index(4, 1).count == 24);
    auto b = count_low_index(3, 2);
    CHECK(b.count == 8);
    CHECK(b.bound == 48);
    CHECK(b.holds);
    CHECK_THROWS_AS(count_low_index(3, 0), InvalidArgument);
}

TEST_CASE("caps") {
    Limits small;
    small.max_order = 5;
    CHECK_THROWS_AS(index_all(6, small), ResourceLimit);
    CHECK_THROWS_AS(index_all(8), ResourceLimit);
    try {
        index_all(8);
    } catch (const ResourceLimit& e) {
        CHECK(e.cap() == 7);
    }
}

TEST_CASE("sharded tables are bit-identical") {
    Limits one, three;
    three.jobs = 3;
    for (int n = 3; n <= 6; ++n) {
        auto a = build_index_table(n, one, simd::generic_kernels());
        auto b = build_index_table(n, three, simd::active_kernels());
        CHECK(std::equal(a.levels().begin(), a.levels().end(), b.levels().begin(), b.levels().end()));
        CHECK(a.level_counts() == b.level_counts());
    }
}
