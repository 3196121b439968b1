#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "inverto/core.hpp"
#include "inverto/limits.hpp"
#include "inverto/simd/bitmap_kernels.hpp"

namespace inverto {

struct IndexResult {
    int value = 0;
    /// Applying these sets to the input yields an acyclic tournament.
    InversionSequence witness;
};

enum class IndexMethod { StateBfs, OrderMin };

/// Pair-code mask of the arcs inside x (packed layout, order <= 11).
std::uint64_t pair_mask(const VertexSet& x);

/// All vertex sets with at least two members, sorted as member lists.
std::vector<VertexSet> inversion_generators(int n);

/// Exact inversion index of every labeled tournament of one order, computed
/// by a breadth-first sweep from all acyclic codes at once.
class IndexTable {
public:
    static constexpr std::uint8_t kUnreached = 0xFF;

    int order() const noexcept { return order_; }
    int max_index() const noexcept { return static_cast<int>(level_counts_.size()) - 1; }
    int index_of(std::uint64_t packed) const { return levels_.at(packed); }
    int index_of(const Tournament& t) const { return index_of(t.packed()); }
    std::span<const std::uint8_t> levels() const noexcept { return levels_; }
    /// Number of labeled tournaments at each index.
    const std::vector<std::uint64_t>& level_counts() const noexcept { return level_counts_; }
    const std::vector<VertexSet>& generators() const noexcept { return generators_; }
    const char* kernel_name() const noexcept { return kernel_name_; }

    /// Lexicographically least shortest witness.
    IndexResult witness(const Tournament& t) const;

    friend IndexTable build_index_table(int n, const Limits& limits,
                                        const simd::BitmapKernels& kernels);

private:
    int order_ = 0;
    std::vector<std::uint8_t> levels_;
    std::vector<std::uint64_t> level_counts_;
    std::vector<VertexSet> generators_;
    std::vector<std::uint64_t> generator_masks_;
    const char* kernel_name_ = "";
};

/// Uncached construction with an explicit kernel variant.
IndexTable build_index_table(int n, const Limits& limits, const simd::BitmapKernels& kernels);

/// Process-wide cached table for order n (n <= limits.table_cap()).
const IndexTable& index_all(int n, const Limits& limits = {});

IndexResult inversion_index(const Tournament& t, IndexMethod method = IndexMethod::StateBfs,
                            const Limits& limits = {});

/// Graphic distance in the inversion graph, via the Boolean dimension of
/// the Boolean sum.
int distance(const Tournament& t, const Tournament& u);

struct BoundCheck {
    int lower_counting = 0;   // largest N with 2^(n(n-1)/2) > n! 2^(n(N-1))
    int lower_log = 0;        // ceil((n-1)/2 - log2 n), clamped at 0
    int upper = -1;           // n - 3 for n >= 4, otherwise -1 (no claim)
    bool holds = true;
};

/// Both lower bounds and the upper bound for i(n), checked against `value`
/// with integer arithmetic only.
BoundCheck check_index_bounds(int n, int value);

struct OrderSummary {
    int order = 0;
    int max_index = 0;
    std::vector<std::uint64_t> level_counts;
    /// (canonical code, index) per isomorphism class, sorted by code.
    std::vector<std::pair<std::string, int>> classes;
    BoundCheck bounds;
};

OrderSummary i_of_n(int n, const Limits& limits = {});

struct LowIndexCount {
    std::uint64_t count = 0;
    boost::multiprecision::cpp_int bound;  // n! 2^(n(N-1))
    bool holds = true;
};

/// Number of labeled tournaments of order n with index < N, and the
/// counting bound it must respect.
LowIndexCount count_low_index(int n, int N, const Limits& limits = {});

}  // namespace inverto
