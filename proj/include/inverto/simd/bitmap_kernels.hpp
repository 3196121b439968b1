#pragma once

// Bitmap kernels for breadth-first search over XOR-generated state spaces.
//
// A state set over 2^P states is a bitmap of max(1, 2^P / 64) words. The
// frontier step computes, for every output word w,
//
//     out[w] = OR over generators g of  shuffle(frontier[w ^ (g >> 6)], g & 63)
//
// where shuffle(x, l) moves bit b of x to bit b ^ l. Bit s of out is then set
// iff s ^ g is in the frontier for some generator g.

#include <cstddef>
#include <cstdint>

namespace inverto::simd {

struct BitmapKernels {
    const char* name;

    /// Overwrites out[begin, end) with the frontier step.
    void (*xor_gather_or)(const std::uint64_t* frontier, std::uint64_t* out, std::size_t begin,
                          std::size_t end, const std::uint64_t* gens, std::size_t gen_count);

    /// next &= ~visited; visited |= next; returns popcount(next).
    std::uint64_t (*commit)(std::uint64_t* next, std::uint64_t* visited, std::size_t words);
};

inline constexpr std::uint64_t kSwapMasks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

/// Scalar bit permutation b -> b ^ low, low < 64.
inline std::uint64_t xor_shuffle_word(std::uint64_t x, unsigned low) {
    for (int b = 0; b < 6; ++b)
        if (low & (1u << b)) {
            const unsigned s = 1u << b;
            x = ((x & kSwapMasks[b]) << s) | ((x >> s) & kSwapMasks[b]);
        }
    return x;
}

/// Portable reference implementation.
const BitmapKernels& generic_kernels();

/// AVX2 variant; nullptr when not compiled in or not supported by the CPU.
const BitmapKernels* avx2_kernels();

/// NEON variant; nullptr when not compiled in (non-ARM targets).
const BitmapKernels* neon_kernels();

/// Best available variant. INVERTO_SIMD=generic|avx2|neon overrides the
/// choice when the requested variant is available.
const BitmapKernels& active_kernels();

}  // namespace inverto::simd
