#include <sstream>

#include "doctest.h"
#include "inverto/index.hpp"
#include "inverto/universal.hpp"
#include "oracles.hpp"

using namespace inverto;

namespace {

WVertex w(int m, std::uint32_t f, Rational q) { return WVertex{m, f, std::move(q)}; }

WVertex random_vertex(int m, std::mt19937_64& gen) {
    const std::uint32_t f = m == 0 ? 0 : static_cast<std::uint32_t>(gen() % (1u << m));
    const long num = static_cast<long>(gen() % 41) - 20;
    const long den = 1 + static_cast<long>(gen() % 6);
    return w(m, f, Rational(num, den));
}

}  // namespace

TEST_CASE("alpha_compare examples") {
    CHECK(alpha_compare(w(1, 0, 0), w(1, 1, 0)) < 0);
    CHECK(alpha_compare(w(1, 1, -2), w(1, 0, 0)) < 0);
    CHECK(alpha_compare(w(1, 1, 1), w(1, 1, 1)) == 0);
    CHECK_THROWS_AS(alpha_compare(w(1, 0, 0), w(2, 0, 0)), InvalidArgument);
    CHECK(first_primes(4) == std::vector<int>{2, 3, 5, 7});
}

TEST_CASE("alpha_compare refines until certain") {
    // sqrt2 + sqrt3 - sqrt5 = 0.910196392..., within 7e-6 of q
    int bits = 0;
    auto a = w(3, 0b011, 0), b = w(3, 0b100, Rational(91019, 100000));
    CHECK(alpha_compare(a, b, &bits) > 0);
    CHECK(bits > 16);
    CHECK(alpha_compare(b, a) < 0);
    alpha_compare(w(1, 0, 3), w(1, 0, 2), &bits);
    CHECK(bits == 0);
}

TEST_CASE("alpha_compare is a strict total order") {
    auto& gen = oracle::rng();
    for (int trial = 0; trial < 300; ++trial) {
        const int m = static_cast<int>(gen() % 4);
        auto a = random_vertex(m, gen), b = random_vertex(m, gen), c = random_vertex(m, gen);
        CHECK((alpha_compare(a, b) == 0) == (a == b));
        const auto ab = alpha_compare(a, b), ba = alpha_compare(b, a);
        CHECK((ab < 0) == (ba > 0));
        if (alpha_compare(a, b) < 0 && alpha_compare(b, c) < 0) CHECK(alpha_compare(a, c) < 0);
    }
}

TEST_CASE("build_W_sample examples") {
    std::vector<WVertex> chain_only;
    for (int q : {3, -1, 7, 0}) chain_only.push_back(w(0, 0, q));
    auto s0 = build_W_sample(0, chain_only);
    CHECK(s0.tournament == chain(4));
    CHECK(s0.chain.front().q == -1);

    auto s1 = build_W_sample(1, {w(1, 1, 1), w(1, 0, 0), w(1, 1, 0), w(1, 0, 1)});
    REQUIRE(s1.chain.size() == 4);
    CHECK(s1.chain[0] == w(1, 0, 0));
    CHECK(s1.chain[1] == w(1, 0, 1));
    CHECK(s1.chain[2] == w(1, 1, 0));
    CHECK(s1.chain[3] == w(1, 1, 1));
    CHECK(s1.annotated.annotations[0] == VertexSet(4, {2, 3}));
    CHECK(boolean_sum(s1.tournament, chain(4)).edge_count() == 1);
    CHECK(s1.tournament.arc(3, 2));

    CHECK_THROWS_AS(build_W_sample(1, {w(1, 0, 0), w(1, 0, 0)}), InvalidArgument);
}

TEST_CASE("sample index stays within m") {
    auto& gen = oracle::rng();
    for (int trial = 0; trial < 30; ++trial) {
        const int m = static_cast<int>(trial % 3);
        std::vector<WVertex> vs;
        while (vs.size() < 7) {
            auto v = random_vertex(m, gen);
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        }
        auto s = build_W_sample(m, vs);
        CHECK(inversion_index(s.tournament).value <= m);

        // sub-samples induce the same tournament
        std::vector<WVertex> half(s.chain.begin(), s.chain.begin() + 4);
        std::vector<WVertex> shuffled = {s.chain[5], s.chain[1], s.chain[3]};
        auto direct = build_W_sample(m, shuffled);
        CHECK(direct.tournament == restrict(s.tournament, VertexSet(7, {1, 3, 5})));
        CHECK(build_W_sample(m, half).tournament == restrict(s.tournament, VertexSet(7, {0, 1, 2, 3})));
    }
}

TEST_CASE("sample spec parsing") {
    std::istringstream in("# a comment\n10 1/2\n01 -3\n\n11 0  # trailing\n");
    auto vs = parse_sample_spec(in, 2);
    REQUIRE(vs.size() == 3);
    CHECK(vs[0].f == 1u);
    CHECK(vs[0].q == Rational(1, 2));
    CHECK(vs[1].f == 2u);
    CHECK(vs[1].q == -3);
    CHECK(vs[2].f == 3u);

    std::istringstream zero("- 5\n- 2/3\n");
    CHECK(parse_sample_spec(zero, 0).size() == 2);

    for (const char* bad : {"1 2\n", "10 x\n", "10 1/0\n", "12 3\n", "10\n", "- 1\n"}) {
        std::istringstream b(bad);
        CHECK_THROWS_AS(parse_sample_spec(b, 2), ParseError);
    }
}

TEST_CASE("universality") {
    auto s0 = build_W_sample(0, default_sample_vertices(0, 4));
    CHECK(universality_check(0, 4, s0).passed);

    auto s1 = build_W_sample(1, default_sample_vertices(1, 12));
    CHECK(s1.tournament.order() == 24);
    auto r3 = universality_check(1, 3, s1);
    CHECK(r3.passed);
    // orders 1 and 2 contribute one class each, order 3 both classes
    CHECK(r3.classes_checked == 4);
    CHECK(r3.classes_embedded == 4);

    auto esc = escalate_universality(1, 5, 60);
    CHECK(esc.report.passed);
    CHECK(esc.report.sample_size <= 60);
    CHECK(esc.report.max_index_witnessed == 1);

    CHECK_THROWS_AS(universality_check(3, 3, s1), ResourceLimit);
    CHECK_THROWS_AS(universality_check(1, 6, s1), ResourceLimit);
}
