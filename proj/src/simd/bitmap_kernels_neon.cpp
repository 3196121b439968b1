#include "inverto/simd/bitmap_kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <algorithm>
#include <bit>

namespace inverto::simd {

namespace neon {

namespace {

constexpr std::size_t kChunkWords = 512;

template <int B>
inline uint64x2_t swap_step(uint64x2_t x) {
    const uint64x2_t m = vdupq_n_u64(kSwapMasks[B]);
    return vorrq_u64(vshlq_n_u64(vandq_u64(x, m), 1 << B), vandq_u64(vshrq_n_u64(x, 1 << B), m));
}

inline uint64x2_t shuffle(uint64x2_t x, unsigned low) {
    if (low & 1u) x = swap_step<0>(x);
    if (low & 2u) x = swap_step<1>(x);
    if (low & 4u) x = swap_step<2>(x);
    if (low & 8u) x = swap_step<3>(x);
    if (low & 16u) x = swap_step<4>(x);
    if (low & 32u) x = swap_step<5>(x);
    return x;
}

void xor_gather_or(const std::uint64_t* frontier, std::uint64_t* out, std::size_t begin,
                   std::size_t end, const std::uint64_t* gens, std::size_t gen_count) {
    if ((begin | end) & 1u) {
        generic_kernels().xor_gather_or(frontier, out, begin, end, gens, gen_count);
        return;
    }
    for (std::size_t lo = begin; lo < end; lo += kChunkWords) {
        const std::size_t hi = std::min(end, lo + kChunkWords);
        std::fill(out + lo, out + hi, 0);
        for (std::size_t k = 0; k < gen_count; ++k) {
            const std::uint64_t high = gens[k] >> 6;
            const std::uint64_t block = high & ~std::uint64_t{1};
            const bool swap_lanes = (high & 1) != 0;
            const unsigned low = static_cast<unsigned>(gens[k] & 63);
            for (std::size_t w = lo; w < hi; w += 2) {
                uint64x2_t x = vld1q_u64(frontier + (w ^ block));
                if (swap_lanes) x = vextq_u64(x, x, 1);
                x = shuffle(x, low);
                vst1q_u64(out + w, vorrq_u64(vld1q_u64(out + w), x));
            }
        }
    }
}

std::uint64_t commit(std::uint64_t* next, std::uint64_t* visited, std::size_t words) {
    std::uint64_t count = 0;
    std::size_t w = 0;
    for (; w + 2 <= words; w += 2) {
        const uint64x2_t vis = vld1q_u64(visited + w);
        const uint64x2_t fresh = vbicq_u64(vld1q_u64(next + w), vis);
        vst1q_u64(next + w, fresh);
        vst1q_u64(visited + w, vorrq_u64(vis, fresh));
        count += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(fresh)));
    }
    for (; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        count += static_cast<std::uint64_t>(std::popcount(next[w]));
    }
    return count;
}

}  // namespace

}  // namespace neon

const BitmapKernels* neon_kernels() {
    static const BitmapKernels kernels{"neon", &neon::xor_gather_or, &neon::commit};
    return &kernels;
}

}  // namespace inverto::simd

#else

namespace inverto::simd {
const BitmapKernels* neon_kernels() { return nullptr; }
}  // namespace inverto::simd

#endif
