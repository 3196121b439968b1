#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inverto/error.hpp"

namespace inverto {

/// Largest vertex count supported by the row-mask representation.
inline constexpr int kMaxOrder = 64;

/// Largest order whose full pair code fits in one 64-bit integer.
inline constexpr int kMaxPackedOrder = 11;

inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Row-major upper-triangle position of the pair {i, j}, i < j.
inline constexpr int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Subset of {0, ..., order-1}.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(int order, std::initializer_list<int> members);
    VertexSet(int order, std::span<const int> members);

    static VertexSet from_mask(int order, std::uint64_t mask);
    static VertexSet full(int order) { return from_mask(order, low_mask(order)); }

    int order() const noexcept { return order_; }
    std::uint64_t mask() const noexcept { return mask_; }
    bool contains(int v) const noexcept { return v >= 0 && v < order_ && (mask_ & bit(v)) != 0; }
    int size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    std::vector<int> members() const;

    /// "{0,2,4}"
    std::string to_string() const;

    bool operator==(const VertexSet&) const = default;

    /// Compares sorted member lists lexicographically.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

private:
    int order_ = 0;
    std::uint64_t mask_ = 0;
};

/// Ordered list of vertex sets over a common order.
class InversionSequence {
public:
    InversionSequence() = default;
    explicit InversionSequence(int order) : order_(order) {}
    InversionSequence(int order, std::vector<VertexSet> sets);
    InversionSequence(int order, std::initializer_list<std::initializer_list<int>> sets);

    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    const std::vector<VertexSet>& sets() const noexcept { return sets_; }
    const VertexSet& operator[](std::size_t i) const { return sets_[i]; }

    void push_back(const VertexSet& x);

    /// "{0,2};{1,3}"; the empty sequence renders as "".
    std::string to_string() const;

    bool operator==(const InversionSequence&) const = default;

private:
    int order_ = 0;
    std::vector<VertexSet> sets_;
};

/// Parses the set-list grammar "{a,b,...};{...}" (whitespace tolerated).
InversionSequence parse_set_list(std::string_view text, int order);

/// Finite tournament stored as one out-neighbourhood mask per vertex.
class Tournament {
public:
    Tournament() = default;

    /// Builds a tournament from an arc predicate evaluated on every pair
    /// i < j: true means i -> j.
    template <typename Pred>
    static Tournament from_pairs(int n, Pred&& forward);

    /// Validating constructor from out-neighbourhood rows.
    static Tournament from_rows(std::vector<std::uint64_t> rows);

    /// Packed pair code: bit pair_index(i,j) set means i -> j. n <= 11.
    static Tournament from_packed(int n, std::uint64_t code);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    bool arc(int u, int v) const noexcept { return (rows_[u] & bit(v)) != 0; }
    std::uint64_t out_mask(int u) const noexcept { return rows_[u]; }
    std::uint64_t in_mask(int u) const noexcept {
        return low_mask(order()) & ~rows_[u] & ~bit(u);
    }
    int out_degree(int u) const noexcept;
    std::span<const std::uint64_t> rows() const noexcept { return rows_; }

    std::uint64_t packed() const;

    /// Reverses every arc with both ends in mask.
    Tournament inverted(std::uint64_t mask) const;

    bool operator==(const Tournament&) const = default;

private:
    std::vector<std::uint64_t> rows_;
};

/// Irreflexive symmetric graph stored as neighbourhood masks.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    template <typename Pred>
    static SimpleGraph from_pairs(int n, Pred&& adjacent);

    static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static SimpleGraph path(int n);
    static SimpleGraph complete(int n);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    bool edge(int u, int v) const noexcept { return (rows_[u] & bit(v)) != 0; }
    std::uint64_t neighbours(int u) const noexcept { return rows_[u]; }
    int degree(int u) const noexcept;
    int edge_count() const noexcept;

    SimpleGraph relabeled(std::span<const int> perm) const;

    bool operator==(const SimpleGraph&) const = default;

private:
    void add_edge(int u, int v);
    std::vector<std::uint64_t> rows_;
};

/// Tournament together with unary predicates, i.e. (T, (X_i)).
struct AnnotatedTournament {
    AnnotatedTournament(Tournament t, InversionSequence a);

    Tournament tournament;
    InversionSequence annotations;
};

// -- operations ---------------------------------------------------------

Tournament invert(const Tournament& t, const VertexSet& x);
Tournament invert_seq(const Tournament& t, const InversionSequence& s);

/// Graph of the pairs on which t and u disagree.
SimpleGraph boolean_sum(const Tournament& t, const Tournament& u);

/// Reverses the arcs on every edge of g.
Tournament flip_edges(const Tournament& t, const SimpleGraph& g);

bool is_acyclic(const Tournament& t);
bool has_three_cycle(const Tournament& t);
bool has_permutation_scores(const Tournament& t);

Tournament dual(const Tournament& t);
Tournament restrict(const Tournament& t, const VertexSet& x);
Tournament remove_vertex(const Tournament& t, int v);

/// Vertex u of t becomes vertex perm[u] of the result.
Tournament relabel(const Tournament& t, std::span<const int> perm);

/// Transitive tournament on n vertices with arcs i -> j for i < j.
Tournament chain(int n);

/// Transitive tournament following the given linear order (first beats all).
Tournament chain_from_order(std::span<const int> order);

// -- text codes ---------------------------------------------------------

std::string to_code(const Tournament& t);
std::string to_code(const SimpleGraph& g);
Tournament tournament_from_code(std::string_view text);
SimpleGraph graph_from_code(std::string_view text);

// -- template definitions -----------------------------------------------

template <typename Pred>
Tournament Tournament::from_pairs(int n, Pred&& forward) {
    if (n < 0 || n > kMaxOrder) throw InvalidArgument("tournament order out of range");
    Tournament t;
    t.rows_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (forward(i, j))
                t.rows_[i] |= bit(j);
            else
                t.rows_[j] |= bit(i);
        }
    return t;
}

template <typename Pred>
SimpleGraph SimpleGraph::from_pairs(int n, Pred&& adjacent) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(i, j)) g.add_edge(i, j);
    return g;
}

}  // namespace inverto
