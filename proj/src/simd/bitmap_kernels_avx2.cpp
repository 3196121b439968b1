// Compiled with -mavx2; only entered after a runtime CPU check.

#include "inverto/simd/bitmap_kernels.hpp"

#if defined(INVERTO_ENABLE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace inverto::simd {

namespace avx2 {

namespace {

constexpr std::size_t kChunkWords = 512;

inline __m256i permute_lanes(__m256i v, unsigned r) {
    switch (r) {
        case 1: return _mm256_permute4x64_epi64(v, 0xB1);
        case 2: return _mm256_permute4x64_epi64(v, 0x4E);
        case 3: return _mm256_permute4x64_epi64(v, 0x1B);
        default: return v;
    }
}

template <int B>
inline __m256i swap_step(__m256i x) {
    const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kSwapMasks[B]));
    return _mm256_or_si256(_mm256_slli_epi64(_mm256_and_si256(x, m), 1 << B),
                           _mm256_and_si256(_mm256_srli_epi64(x, 1 << B), m));
}

inline __m256i shuffle(__m256i x, unsigned low) {
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
    if ((begin | end) & 3u) {
        generic_kernels().xor_gather_or(frontier, out, begin, end, gens, gen_count);
        return;
    }
    for (std::size_t lo = begin; lo < end; lo += kChunkWords) {
        const std::size_t hi = std::min(end, lo + kChunkWords);
        std::fill(out + lo, out + hi, 0);
        for (std::size_t k = 0; k < gen_count; ++k) {
            const std::uint64_t high = gens[k] >> 6;
            const std::uint64_t block = high & ~std::uint64_t{3};
            const unsigned lanes = static_cast<unsigned>(high & 3);
            const unsigned low = static_cast<unsigned>(gens[k] & 63);
            for (std::size_t w = lo; w < hi; w += 4) {
                const auto* src = reinterpret_cast<const __m256i*>(frontier + (w ^ block));
                __m256i x = permute_lanes(_mm256_loadu_si256(src), lanes);
                x = shuffle(x, low);
                auto* dst = reinterpret_cast<__m256i*>(out + w);
                _mm256_storeu_si256(dst, _mm256_or_si256(_mm256_loadu_si256(dst), x));
            }
        }
    }
}

inline __m256i popcount_bytes(__m256i v) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i nibble = _mm256_set1_epi8(0x0F);
    const __m256i lo = _mm256_shuffle_epi8(table, _mm256_and_si256(v, nibble));
    const __m256i hi = _mm256_shuffle_epi8(table, _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble));
    return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

std::uint64_t commit(std::uint64_t* next, std::uint64_t* visited, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        auto* pn = reinterpret_cast<__m256i*>(next + w);
        auto* pv = reinterpret_cast<__m256i*>(visited + w);
        const __m256i vis = _mm256_loadu_si256(pv);
        const __m256i fresh = _mm256_andnot_si256(vis, _mm256_loadu_si256(pn));
        _mm256_storeu_si256(pn, fresh);
        _mm256_storeu_si256(pv, _mm256_or_si256(vis, fresh));
        acc = _mm256_add_epi64(acc, popcount_bytes(fresh));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t count = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; w < words; ++w) {
        next[w] &= ~visited[w];
        visited[w] |= next[w];
        count += static_cast<std::uint64_t>(std::popcount(next[w]));
    }
    return count;
}

}  // namespace

}  // namespace avx2

const BitmapKernels* avx2_kernels() {
    static const BitmapKernels kernels{"avx2", &avx2::xor_gather_or, &avx2::commit};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kernels : nullptr;
}

}  // namespace inverto::simd

#else

namespace inverto::simd {
const BitmapKernels* avx2_kernels() { return nullptr; }
}  // namespace inverto::simd

#endif
