#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "inverto/core.hpp"

namespace inverto {

/// Exhaustive interval enumeration is refused above this order.
inline constexpr int kMaxIntervalScanOrder = 16;

/// X is an interval iff no vertex outside X tells two members of X apart.
bool is_interval(const Tournament& t, const VertexSet& x);

/// Every interval including the trivial ones, in increasing mask order.
std::vector<VertexSet> intervals(const Tournament& t);

/// Smallest interval containing seed (closure under splitting vertices).
VertexSet interval_closure(const Tournament& t, std::uint64_t seed);

/// Only trivial intervals. Orders <= 2 are indecomposable.
bool is_indecomposable(const Tournament& t);

/// No acyclic interval with two or more elements.
bool is_acyclically_indecomposable(const Tournament& t);

/// Blocks are numbered consecutively in quotient-vertex order.
Tournament lex_sum(const Tournament& quotient, std::span<const Tournament> blocks);

struct AcyclicDecomposition {
    Tournament quotient;
    std::vector<Tournament> blocks;
    /// Original vertices of each block, ascending; blocks are ordered by
    /// their smallest original vertex.
    std::vector<std::vector<int>> block_vertices;

    /// lex_sum(quotient, blocks) relabeled back to the original numbering.
    Tournament recompose() const;
};

AcyclicDecomposition acyclic_decompose(const Tournament& t);

bool is_critical_vertex(const Tournament& t, int x);
bool is_critical_tournament(const Tournament& t);
VertexSet noncritical_vertices(const Tournament& t);
bool is_minus_one_critical(const Tournament& t);

}  // namespace inverto
