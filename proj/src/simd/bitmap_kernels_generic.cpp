#include <algorithm>
#include <bit>

#include "inverto/simd/bitmap_kernels.hpp"

namespace inverto::simd {

namespace generic {

namespace {

constexpr std::size_t kChunkWords = 512;

void xor_gather_or(const std::uint64_t* frontier, std::uint64_t* out, std::size_t begin,
                   std::size_t end, const std::uint64_t* gens, std::size_t gen_count) {
    for (std::size_t lo = begin; lo < end; lo += kChunkWords) {
        const std::size_t hi = std::min(end, lo + kChunkWords);
        std::fill(out + lo, out + hi, 0);
        for (std::size_t k = 0; k < gen_count; ++k) {
            const std::uint64_t high = gens[k] >> 6;
            const unsigned low = static_cast<unsigned>(gens[k] & 63);
            for (std::size_t w = lo; w < hi; ++w)
                out[w] |= xor_shuffle_word(frontier[w ^ high], low);
        }
    }
}

std::uint64_t commit(std::uint64_t* next, std::uint64_t* visited, std::size_t words) {
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        count += static_cast<std::uint64_t>(std::popcount(next[w]));
    }
    return count;
}

}  // namespace

}  // namespace generic

const BitmapKernels& generic_kernels() {
    static const BitmapKernels kernels{"generic", &generic::xor_gather_or, &generic::commit};
    return kernels;
}

}  // namespace inverto::simd
