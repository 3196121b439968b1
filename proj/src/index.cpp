#include "inverto/index.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "inverto/booldim.hpp"
#include "inverto/hereditary.hpp"

namespace inverto {

using boost::multiprecision::cpp_int;

std::uint64_t pair_mask(const VertexSet& x) {
    const int n = x.order();
    if (n > kMaxPackedOrder) throw InvalidArgument("pair masks need order <= 11");
    std::uint64_t mask = 0;
    auto members = x.members();
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            mask |= bit(pair_index(n, members[a], members[b]));
    return mask;
}

std::vector<VertexSet> inversion_generators(int n) {
    std::vector<VertexSet> sets;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (std::popcount(m) >= 2) sets.push_back(VertexSet::from_mask(n, m));
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
    return sets;
}

namespace {

void run_step(const simd::BitmapKernels& kernels, const std::vector<std::uint64_t>& frontier,
              std::vector<std::uint64_t>& next, const std::vector<std::uint64_t>& gens, int jobs) {
    const std::size_t words = next.size();
    constexpr std::size_t kShardAlign = 512;
    if (jobs <= 1 || words < 2 * kShardAlign) {
        kernels.xor_gather_or(frontier.data(), next.data(), 0, words, gens.data(), gens.size());
        return;
    }
    // Shards write disjoint output ranges, so the result is independent of
    // the worker count.
    const std::size_t blocks = words / kShardAlign;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), blocks);
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < workers; ++k) {
        const std::size_t begin = blocks * k / workers * kShardAlign;
        const std::size_t end = blocks * (k + 1) / workers * kShardAlign;
        pool.emplace_back([&, begin, end] {
            kernels.xor_gather_or(frontier.data(), next.data(), begin, end, gens.data(), gens.size());
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

IndexTable build_index_table(int n, const Limits& limits, const simd::BitmapKernels& kernels) {
    if (n < 0) throw InvalidArgument("order must be non-negative");
    if (n > limits.table_cap()) throw ResourceLimit("index table order " + std::to_string(n) + " refused", limits.table_cap());

    IndexTable table;
    table.order_ = n;
    table.kernel_name_ = kernels.name;
    table.generators_ = inversion_generators(n);
    for (const auto& x : table.generators_) table.generator_masks_.push_back(pair_mask(x));

    const int bits = pair_count(n);
    const std::uint64_t states = std::uint64_t{1} << bits;
    const std::size_t words = std::max<std::size_t>(1, states / 64);
    table.levels_.assign(states, IndexTable::kUnreached);

    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t acyclic = 0;
    do {
        const std::uint64_t code = chain_from_order(perm).packed();
        frontier[code >> 6] |= bit(static_cast<int>(code & 63));
        table.levels_[code] = 0;
        ++acyclic;
    } while (std::next_permutation(perm.begin(), perm.end()));
    visited = frontier;
    table.level_counts_.push_back(acyclic);

    for (int level = 1;; ++level) {
        run_step(kernels, frontier, next, table.generator_masks_, limits.jobs);
        const std::uint64_t fresh = kernels.commit(next.data(), visited.data(), words);
        if (fresh == 0) break;
        if (level >= IndexTable::kUnreached) throw Error("inversion index exceeds table range");
        for (std::size_t w = 0; w < words; ++w)
            for (std::uint64_t m = next[w]; m != 0; m &= m - 1)
                table.levels_[(w << 6) | static_cast<std::uint64_t>(std::countr_zero(m))] =
                    static_cast<std::uint8_t>(level);
        table.level_counts_.push_back(fresh);
        std::swap(frontier, next);
    }

    std::uint64_t total = 0;
    for (auto c : table.level_counts_) total += c;
    if (total != states) throw Error("index sweep left tournaments unreached");
    return table;
}

IndexResult IndexTable::witness(const Tournament& t) const {
    if (t.order() != order_) throw InvalidArgument("table order mismatch");
    std::uint64_t code = t.packed();
    IndexResult result{index_of(code), InversionSequence(order_)};
    for (int level = result.value; level > 0; --level) {
        bool stepped = false;
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            const std::uint64_t next = code ^ generator_masks_[k];
            if (levels_[next] == level - 1) {
                result.witness.push_back(generators_[k]);
                code = next;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw Error("index table is inconsistent");
    }
    return result;
}

const IndexTable& index_all(int n, const Limits& limits) {
    if (n < 0) throw InvalidArgument("order must be non-negative");
    if (n > limits.table_cap()) throw ResourceLimit("index table order " + std::to_string(n) + " refused", limits.table_cap());
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<IndexTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<IndexTable>(build_index_table(n, limits, simd::active_kernels()));
    return *slot;
}

namespace {

IndexResult order_min_index(const Tournament& t) {
    const int n = t.order();
    if (n > 8) throw ResourceLimit("order-min index refused for order " + std::to_string(n), 8);
    IndexResult best{std::max(n - 1, 0), InversionSequence(n)};
    bool found = false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Only a strictly smaller dimension can improve the incumbent.
        const int limit = found ? best.value : best.value + 1;
        auto dim = boolean_dimension_below(boolean_sum(t, chain_from_order(perm)), limit);
        if (dim) {
            best.value = dim->dimension;
            best.witness = parity_set_system(dim->witness);
            found = true;
            if (best.value == 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

IndexResult inversion_index(const Tournament& t, IndexMethod method, const Limits& limits) {
    if (t.order() <= 1) return {0, InversionSequence(t.order())};
    if (method == IndexMethod::OrderMin) return order_min_index(t);
    if (t.order() > limits.table_cap())
        throw ResourceLimit("state-bfs index refused for order " + std::to_string(t.order()), limits.table_cap());
    return index_all(t.order(), limits).witness(t);
}

int distance(const Tournament& t, const Tournament& u) {
    return boolean_dimension(boolean_sum(t, u)).dimension;
}

namespace {

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

cpp_int pow2(int e) { return cpp_int(1) << e; }

}  // namespace

BoundCheck check_index_bounds(int n, int value) {
    BoundCheck check;
    const cpp_int total = pow2(pair_count(n));
    const cpp_int nf = factorial(n);
    // Counting argument: fewer than n! 2^(n(N-1)) tournaments have index < N.
    int N = 0;
    while (total > nf * pow2(n * N)) ++N;
    check.lower_counting = N;
    // ceil((n-1)/2 - log2 n) <= i  <=>  2^(n-1-2i) <= n^2 for integer i.
    int lower_log = 0;
    while (n - 1 - 2 * lower_log > 0 && pow2(n - 1 - 2 * lower_log) > cpp_int(n) * n) ++lower_log;
    check.lower_log = lower_log;
    check.upper = n >= 4 ? n - 3 : -1;
    check.holds = value >= check.lower_counting && value >= check.lower_log &&
                  (check.upper < 0 || value <= check.upper);
    return check;
}

OrderSummary i_of_n(int n, const Limits& limits) {
    const IndexTable& table = index_all(n, limits);
    OrderSummary summary;
    summary.order = n;
    summary.max_index = table.max_index();
    summary.level_counts = table.level_counts();
    for (const auto& entry : enumerate(n, limits).classes)
        summary.classes.emplace_back(entry.code, table.index_of(entry.packed));
    summary.bounds = check_index_bounds(n, summary.max_index);
    return summary;
}

LowIndexCount count_low_index(int n, int N, const Limits& limits) {
    if (N < 1) throw InvalidArgument("N must be positive");
    const IndexTable& table = index_all(n, limits);
    LowIndexCount out;
    const auto& counts = table.level_counts();
    for (int k = 0; k < N && k < static_cast<int>(counts.size()); ++k) out.count += counts[k];
    out.bound = factorial(n) * pow2(n * (N - 1));
    out.holds = cpp_int(out.count) <= out.bound;
    return out;
}

}  // namespace inverto
