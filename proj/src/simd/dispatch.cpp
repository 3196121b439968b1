#include <cstdlib>
#include <string_view>

#include "inverto/simd/bitmap_kernels.hpp"

namespace inverto::simd {

namespace {

const BitmapKernels& select_kernels() {
    const char* forced = std::getenv("INVERTO_SIMD");
    if (forced != nullptr) {
        std::string_view want(forced);
        if (want == "generic") return generic_kernels();
        if (want == "avx2" && avx2_kernels() != nullptr) return *avx2_kernels();
        if (want == "neon" && neon_kernels() != nullptr) return *neon_kernels();
    }
    if (const auto* k = avx2_kernels()) return *k;
    if (const auto* k = neon_kernels()) return *k;
    return generic_kernels();
}

}  // namespace

const BitmapKernels& active_kernels() {
    static const BitmapKernels& kernels = select_kernels();
    return kernels;
}

}  // namespace inverto::simd
