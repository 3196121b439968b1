#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "inverto/index.hpp"
#include "inverto/simd/bitmap_kernels.hpp"

using namespace inverto;
using simd::BitmapKernels;

namespace {

std::vector<const BitmapKernels*> variants() {
    std::vector<const BitmapKernels*> out{&simd::generic_kernels()};
    if (auto* k = simd::avx2_kernels()) out.push_back(k);
    if (auto* k = simd::neon_kernels()) out.push_back(k);
    return out;
}

// Bit-by-bit definition of the frontier step.
std::vector<std::uint64_t> reference_step(const std::vector<std::uint64_t>& frontier,
                                          const std::vector<std::uint64_t>& gens, std::size_t states) {
    std::vector<std::uint64_t> out(frontier.size(), 0);
    for (std::uint64_t s = 0; s < states; ++s)
        for (auto g : gens) {
            const auto src = s ^ g;
            if ((frontier[src >> 6] >> (src & 63)) & 1) {
                out[s >> 6] |= std::uint64_t{1} << (s & 63);
                break;
            }
        }
    return out;
}

}  // namespace

TEST_CASE("xor_shuffle_word moves bit b to b ^ low") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = gen();
        const unsigned low = static_cast<unsigned>(gen() % 64);
        const auto y = simd::xor_shuffle_word(x, low);
        for (unsigned b = 0; b < 64; ++b) CHECK(((x >> b) & 1) == ((y >> (b ^ low)) & 1));
    }
}

TEST_CASE("every kernel variant matches the bitwise definition") {
    std::mt19937_64 gen(11);
    for (int bits : {3, 6, 8, 10, 12}) {
        const std::size_t states = std::size_t{1} << bits;
        const std::size_t words = std::max<std::size_t>(1, states / 64);
        std::vector<std::uint64_t> frontier(words);
        for (auto& w : frontier) w = gen() & gen() & gen();
        if (states < 64) frontier[0] &= (std::uint64_t{1} << states) - 1;
        std::vector<std::uint64_t> gens;
        for (int i = 0; i < 9; ++i) gens.push_back(gen() & (states - 1));
        auto expected = reference_step(frontier, gens, states);
        if (states < 64) expected[0] &= (std::uint64_t{1} << states) - 1;

        for (const auto* k : variants()) {
            CAPTURE(k->name);
            CAPTURE(bits);
            std::vector<std::uint64_t> out(words, ~std::uint64_t{0});
            k->xor_gather_or(frontier.data(), out.data(), 0, words, gens.data(), gens.size());
            if (states < 64) out[0] &= (std::uint64_t{1} << states) - 1;
            CHECK(out == expected);

            // split ranges, including unaligned ones
            std::vector<std::uint64_t> parts(words, 0);
            const std::size_t cut = words / 3;
            k->xor_gather_or(frontier.data(), parts.data(), 0, cut, gens.data(), gens.size());
            k->xor_gather_or(frontier.data(), parts.data(), cut, words, gens.data(), gens.size());
            if (states < 64) parts[0] &= (std::uint64_t{1} << states) - 1;
            CHECK(parts == expected);
        }
    }
}

TEST_CASE("commit kernels agree") {
    std::mt19937_64 gen(13);
    for (std::size_t words : {1u, 3u, 4u, 17u, 64u}) {
        std::vector<std::uint64_t> next(words), visited(words);
        for (std::size_t i = 0; i < words; ++i) {
            next[i] = gen();
            visited[i] = gen();
        }
        std::vector<std::uint64_t> en = next, ev = visited;
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < words; ++i) {
            en[i] &= ~ev[i];
            ev[i] |= en[i];
            count += __builtin_popcountll(en[i]);
        }
        for (const auto* k : variants()) {
            CAPTURE(k->name);
            auto n = next, v = visited;
            CHECK(k->commit(n.data(), v.data(), words) == count);
            CHECK(n == en);
            CHECK(v == ev);
        }
    }
}

TEST_CASE("tables built with each variant are identical") {
    Limits limits;
    for (int n = 2; n <= 7; ++n) {
        auto reference = build_index_table(n, limits, simd::generic_kernels());
        for (const auto* k : variants()) {
            CAPTURE(k->name);
            auto t = build_index_table(n, limits, *k);
            CHECK(std::equal(t.levels().begin(), t.levels().end(), reference.levels().begin(),
                             reference.levels().end()));
            CHECK(t.level_counts() == reference.level_counts());
        }
    }
}

TEST_CASE("active kernel selection") {
    const auto& active = simd::active_kernels();
    CHECK(active.name != nullptr);
    if (simd::avx2_kernels() && !std::getenv("INVERTO_SIMD")) CHECK(std::strcmp(active.name, "avx2") == 0);
}
