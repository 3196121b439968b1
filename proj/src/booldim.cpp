#include "inverto/booldim.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace inverto {

GF2Vector::GF2Vector(int width, std::uint32_t bits) : width_(width), bits_(bits) {
    if (width < 0 || width > kMaxBoolDimension)
        throw InvalidArgument("GF(2) vector width out of range");
    if (width < 32 && (bits >> width) != 0)
        throw InvalidArgument("GF(2) vector has bits beyond its width");
}

bool dot(const GF2Vector& u, const GF2Vector& v) {
    return (std::popcount(u.bits_ & v.bits_) & 1) != 0;
}

bool Representation::represents(const SimpleGraph& g) const {
    const int n = g.order();
    if (static_cast<int>(vectors.size()) != n) return false;
    for (const auto& v : vectors)
        if (v.width() != dimension) return false;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (dot(vectors[x], vectors[y]) != g.edge(x, y)) return false;
    return true;
}

namespace {

/// Affine solution set {particular ^ span(basis)} of a GF(2) linear system.
struct AffineSpace {
    std::uint32_t particular = 0;
    std::vector<std::uint32_t> basis;
};

/// Rows carry coefficients in bits 0..m-1 and the right-hand side in bit 32.
std::optional<AffineSpace> solve(std::vector<std::uint64_t> rows, int m) {
    constexpr std::uint64_t kRhs = std::uint64_t{1} << 32;
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < m && rank < rows.size(); ++c) {
        std::size_t r = rank;
        while (r < rows.size() && !((rows[r] >> c) & 1u)) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[rank], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> c) & 1u)) rows[i] ^= rows[rank];
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i] & kRhs) return std::nullopt;

    AffineSpace space;
    std::uint32_t pivots = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        pivots |= 1u << pivot_col[i];
        if (rows[i] & kRhs) space.particular |= 1u << pivot_col[i];
    }
    for (int f = 0; f < m; ++f) {
        if (pivots & (1u << f)) continue;
        std::uint32_t v = 1u << f;
        for (std::size_t i = 0; i < rank; ++i)
            if ((rows[i] >> f) & 1u) v |= 1u << pivot_col[i];
        space.basis.push_back(v);
    }
    return space;
}

class Searcher {
public:
    Searcher(const SimpleGraph& g, int m) : g_(g), m_(m), assigned_(g.order(), 0) {
        const int n = g.order();
        order_.resize(static_cast<std::size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return extend(0); }

    Representation result() const {
        Representation r;
        r.dimension = m_;
        for (auto bits : assigned_) r.vectors.emplace_back(m_, bits);
        return r;
    }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        if (depth == 0) {
            // Coordinate permutations preserve the scalar product, so the
            // first vector can be taken as 1^w 0^(m-w).
            for (int w = 0; w <= m_; ++w) {
                assigned_[v] = w == 32 ? ~0u : (1u << w) - 1;
                if (extend(1)) return true;
            }
            return false;
        }
        std::vector<std::uint64_t> rows;
        rows.reserve(depth);
        for (std::size_t j = 0; j < depth; ++j) {
            const int u = order_[j];
            std::uint64_t row = assigned_[u];
            if (g_.edge(v, u)) row |= std::uint64_t{1} << 32;
            rows.push_back(row);
        }
        auto space = solve(std::move(rows), m_);
        if (!space) return false;
        const std::uint64_t count = std::uint64_t{1} << space->basis.size();
        for (std::uint64_t combo = 0; combo < count; ++combo) {
            std::uint32_t x = space->particular;
            for (std::uint64_t c = combo; c != 0; c &= c - 1)
                x ^= space->basis[std::countr_zero(c)];
            assigned_[v] = x;
            if (extend(depth + 1)) return true;
        }
        return false;
    }

    const SimpleGraph& g_;
    int m_;
    std::vector<int> order_;
    std::vector<std::uint32_t> assigned_;
};

}  // namespace

std::optional<Representation> find_representation(const SimpleGraph& g, int m) {
    if (m < 0) throw InvalidArgument("dimension must be non-negative");
    if (m > kMaxBoolDimension)
        throw ResourceLimit("representation width exceeds solver limit", kMaxBoolDimension);
    if (m == 0) {
        if (g.edge_count() != 0) return std::nullopt;
        Representation r;
        r.vectors.assign(static_cast<std::size_t>(g.order()), GF2Vector(0, 0));
        return r;
    }
    Searcher search(g, m);
    if (!search.run()) return std::nullopt;
    return search.result();
}

std::optional<BooleanDimension> boolean_dimension_below(const SimpleGraph& g, int limit) {
    for (int m = 0; m < limit; ++m) {
        if (auto r = find_representation(g, m)) return BooleanDimension{m, std::move(*r)};
    }
    return std::nullopt;
}

BooleanDimension boolean_dimension(const SimpleGraph& g) {
    const int n = g.order();
    // Every graph on n >= 1 vertices has dimension at most n - 1.
    auto result = boolean_dimension_below(g, std::max(n - 1, 0) + 1);
    if (!result) throw Error("Boolean dimension exceeded n - 1; solver invariant broken");
    return std::move(*result);
}

InversionSequence parity_set_system(const Representation& r) {
    const int n = static_cast<int>(r.vectors.size());
    InversionSequence sets(n);
    for (int i = 0; i < r.dimension; ++i) {
        std::uint64_t mask = 0;
        for (int x = 0; x < n; ++x)
            if (r.vectors[x].coordinate(i)) mask |= bit(x);
        sets.push_back(VertexSet::from_mask(n, mask));
    }
    return sets;
}

SimpleGraph parity_graph(const InversionSequence& sets) {
    return SimpleGraph::from_pairs(sets.order(), [&](int i, int j) {
        bool odd = false;
        const std::uint64_t pair = bit(i) | bit(j);
        for (const auto& x : sets.sets())
            if ((x.mask() & pair) == pair) odd = !odd;
        return odd;
    });
}

}  // namespace inverto
