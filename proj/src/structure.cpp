#include "inverto/structure.hpp"

#include <algorithm>
#include <bit>

namespace inverto {

bool is_interval(const Tournament& t, const VertexSet& x) {
    if (x.order() != t.order()) throw InvalidArgument("vertex set order mismatch");
    const auto members = x.members();
    for (int y = 0; y < t.order(); ++y) {
        if (x.contains(y)) continue;
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const int u = members[a], v = members[b];
                if (t.arc(u, y) != t.arc(v, y) || t.arc(y, u) != t.arc(y, v)) return false;
            }
    }
    return true;
}

std::vector<VertexSet> intervals(const Tournament& t) {
    const int n = t.order();
    if (n > kMaxIntervalScanOrder)
        throw ResourceLimit("interval scan refused for order " + std::to_string(n), kMaxIntervalScanOrder);
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        VertexSet x = VertexSet::from_mask(n, m);
        if (is_interval(t, x)) out.push_back(x);
    }
    return out;
}

VertexSet interval_closure(const Tournament& t, std::uint64_t seed) {
    const int n = t.order();
    std::uint64_t s = seed & low_mask(n);
    while (true) {
        std::uint64_t splitters = 0;
        for (std::uint64_t rest = low_mask(n) & ~s; rest != 0; rest &= rest - 1) {
            const int y = std::countr_zero(rest);
            if ((t.out_mask(y) & s) && (t.in_mask(y) & s)) splitters |= bit(y);
        }
        if (!splitters) break;
        s |= splitters;
    }
    return VertexSet::from_mask(n, s);
}

bool is_indecomposable(const Tournament& t) {
    const int n = t.order();
    if (n <= 2) return true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (interval_closure(t, bit(a) | bit(b)).mask() != low_mask(n)) return false;
    return true;
}

namespace {

bool acyclic_on(const Tournament& t, std::uint64_t mask) {
    return is_acyclic(restrict(t, VertexSet::from_mask(t.order(), mask)));
}

}  // namespace

bool is_acyclically_indecomposable(const Tournament& t) {
    const int n = t.order();
    // Any acyclic interval with two members contains the closure of a pair.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (acyclic_on(t, interval_closure(t, bit(a) | bit(b)).mask())) return false;
    return true;
}

Tournament lex_sum(const Tournament& quotient, std::span<const Tournament> blocks) {
    if (static_cast<int>(blocks.size()) != quotient.order())
        throw InvalidArgument("lexicographic sum needs one block per quotient vertex");
    std::vector<int> owner, local;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int v = 0; v < blocks[i].order(); ++v) {
            owner.push_back(static_cast<int>(i));
            local.push_back(v);
        }
    const int n = static_cast<int>(owner.size());
    return Tournament::from_pairs(n, [&](int x, int y) {
        if (owner[x] == owner[y]) return blocks[owner[x]].arc(local[x], local[y]);
        return quotient.arc(owner[x], owner[y]);
    });
}

Tournament AcyclicDecomposition::recompose() const {
    Tournament sum = lex_sum(quotient, blocks);
    std::vector<int> original;
    for (const auto& vs : block_vertices) original.insert(original.end(), vs.begin(), vs.end());
    return relabel(sum, original);
}

namespace {

/// Quotient of t by a partition into intervals, groups ordered by their
/// smallest member.
Tournament quotient_of(const Tournament& t, const std::vector<std::vector<int>>& groups) {
    return Tournament::from_pairs(static_cast<int>(groups.size()),
                                  [&](int i, int j) { return t.arc(groups[i][0], groups[j][0]); });
}

/// Inclusion-maximal acyclic interval of q containing vertex a, grown from
/// the lexicographically least acyclic pair closure; empty mask if none.
std::uint64_t maximal_acyclic_interval(const Tournament& q, int a) {
    const int n = q.order();
    std::uint64_t best = 0;
    for (int b = 0; b < n; ++b) {
        if (b == a) continue;
        const VertexSet c = interval_closure(q, bit(a) | bit(b));
        if (!acyclic_on(q, c.mask())) continue;
        if (best == 0 || lex_less(c, VertexSet::from_mask(n, best))) best = c.mask();
    }
    if (best == 0) return 0;
    for (bool grown = true; grown;) {
        grown = false;
        for (int z = 0; z < n; ++z) {
            if (best & bit(z)) continue;
            const std::uint64_t c = interval_closure(q, best | bit(z)).mask();
            if (acyclic_on(q, c)) {
                best = c;
                grown = true;
                break;
            }
        }
    }
    return best;
}

}  // namespace

AcyclicDecomposition acyclic_decompose(const Tournament& t) {
    const int n = t.order();
    if (n == 0) throw InvalidArgument("cannot decompose the empty tournament");
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups.push_back({v});

    while (true) {
        const Tournament q = quotient_of(t, groups);
        std::uint64_t merge = 0;
        for (int a = 0; a < q.order() && merge == 0; ++a) merge = maximal_acyclic_interval(q, a);
        if (merge == 0) break;
        std::vector<std::vector<int>> next;
        std::vector<int> merged;
        for (int i = 0; i < q.order(); ++i) {
            if (merge & bit(i))
                merged.insert(merged.end(), groups[i].begin(), groups[i].end());
            else
                next.push_back(groups[i]);
        }
        std::sort(merged.begin(), merged.end());
        next.push_back(std::move(merged));
        std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
        groups = std::move(next);
    }

    AcyclicDecomposition d;
    d.quotient = quotient_of(t, groups);
    for (const auto& g : groups) {
        d.blocks.push_back(restrict(t, VertexSet(n, g)));
        d.block_vertices.push_back(g);
    }
    for (const auto& b : d.blocks)
        if (!is_acyclic(b)) throw Error("decomposition produced a cyclic block");
    if (d.recompose() != t) throw Error("decomposition does not recompose to its input");
    return d;
}

namespace {

void require_indecomposable(const Tournament& t) {
    if (t.order() == 0) throw PreconditionError("criticality needs a nonempty tournament");
    if (!is_indecomposable(t)) throw PreconditionError("criticality needs an indecomposable tournament");
}

}  // namespace

bool is_critical_vertex(const Tournament& t, int x) {
    require_indecomposable(t);
    return !is_indecomposable(remove_vertex(t, x));
}

VertexSet noncritical_vertices(const Tournament& t) {
    require_indecomposable(t);
    std::uint64_t mask = 0;
    for (int x = 0; x < t.order(); ++x)
        if (is_indecomposable(remove_vertex(t, x))) mask |= bit(x);
    return VertexSet::from_mask(t.order(), mask);
}

bool is_critical_tournament(const Tournament& t) { return noncritical_vertices(t).empty(); }

bool is_minus_one_critical(const Tournament& t) { return noncritical_vertices(t).size() == 1; }

}  // namespace inverto
