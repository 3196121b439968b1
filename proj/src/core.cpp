#include "inverto/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace inverto {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxOrder)
        throw InvalidArgument("order " + std::to_string(n) + " outside [0, " +
                              std::to_string(kMaxOrder) + "]");
}

void check_vertex(int order, int v) {
    if (v < 0 || v >= order)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order));
}

void check_same_order(int a, int b) {
    if (a != b)
        throw InvalidArgument("order mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// -- VertexSet ------------------------------------------------------------

VertexSet::VertexSet(int order, std::initializer_list<int> members)
    : VertexSet(order, std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(int order, std::span<const int> members) : order_(order) {
    check_order(order);
    for (int v : members) {
        check_vertex(order, v);
        mask_ |= bit(v);
    }
}

VertexSet VertexSet::from_mask(int order, std::uint64_t mask) {
    check_order(order);
    if ((mask & ~low_mask(order)) != 0)
        throw InvalidArgument("vertex out of range for order " + std::to_string(order));
    VertexSet x;
    x.order_ = order;
    x.mask_ = mask;
    return x;
}

int VertexSet::size() const noexcept { return std::popcount(mask_); }

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : members()) {
        if (!first) s += ',';
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// -- InversionSequence ----------------------------------------------------

InversionSequence::InversionSequence(int order, std::vector<VertexSet> sets) : order_(order) {
    check_order(order);
    for (auto& x : sets) push_back(x);
}

InversionSequence::InversionSequence(int order,
                                     std::initializer_list<std::initializer_list<int>> sets)
    : order_(order) {
    check_order(order);
    for (auto members : sets) sets_.emplace_back(order, members);
}

void InversionSequence::push_back(const VertexSet& x) {
    check_same_order(order_, x.order());
    sets_.push_back(x);
}

std::string InversionSequence::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (i) s += ';';
        s += sets_[i].to_string();
    }
    return s;
}

InversionSequence parse_set_list(std::string_view text, int order) {
    InversionSequence seq(order);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) return seq;
    while (true) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{'", pos);
        ++pos;
        std::vector<int> members;
        skip_ws();
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
        } else {
            while (true) {
                skip_ws();
                std::size_t start = pos;
                int v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    v = v * 10 + (text[pos] - '0');
                    if (v > kMaxOrder) throw ParseError("vertex number too large", start);
                    ++pos;
                }
                if (pos == start) throw ParseError("expected vertex number", pos);
                if (v >= order)
                    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                                          std::to_string(order) + " at position " + std::to_string(start));
                members.push_back(v);
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == '}') {
                    ++pos;
                    break;
                }
                throw ParseError("expected ',' or '}'", pos);
            }
        }
        seq.push_back(VertexSet(order, members));
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ';') throw ParseError("expected ';'", pos);
        ++pos;
    }
    return seq;
}

// -- Tournament -----------------------------------------------------------

Tournament Tournament::from_rows(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~low_mask(n)) throw InvalidArgument("arc to a vertex outside the order");
        if (rows[u] & bit(u)) throw InvalidArgument("loop at vertex " + std::to_string(u));
        for (int v = u + 1; v < n; ++v) {
            bool uv = rows[u] & bit(v);
            bool vu = rows[v] & bit(u);
            if (uv == vu)
                throw InvalidArgument("pair {" + std::to_string(u) + "," + std::to_string(v) +
                                      "} must carry exactly one arc");
        }
    }
    Tournament t;
    t.rows_ = std::move(rows);
    return t;
}

Tournament Tournament::from_packed(int n, std::uint64_t code) {
    if (n < 0 || n > kMaxPackedOrder)
        throw InvalidArgument("packed codes support orders up to " +
                              std::to_string(kMaxPackedOrder));
    int p = 0;
    Tournament t;
    t.rows_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p) {
            if (code & bit(p))
                t.rows_[i] |= bit(j);
            else
                t.rows_[j] |= bit(i);
        }
    return t;
}

std::uint64_t Tournament::packed() const {
    const int n = order();
    if (n > kMaxPackedOrder)
        throw InvalidArgument("packed codes support orders up to " +
                              std::to_string(kMaxPackedOrder));
    std::uint64_t code = 0;
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
            if (rows_[i] & bit(j)) code |= bit(p);
    return code;
}

int Tournament::out_degree(int u) const noexcept { return std::popcount(rows_[u]); }

Tournament Tournament::inverted(std::uint64_t mask) const {
    Tournament t = *this;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        int u = std::countr_zero(m);
        t.rows_[u] ^= mask & ~bit(u);
    }
    return t;
}

// -- SimpleGraph ----------------------------------------------------------

SimpleGraph::SimpleGraph(int n) {
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

void SimpleGraph::add_edge(int u, int v) {
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u == v) throw InvalidArgument("loops are not allowed in a simple graph");
        g.add_edge(u, v);
    }
    return g;
}

SimpleGraph SimpleGraph::path(int n) {
    return from_pairs(n, [](int i, int j) { return j == i + 1; });
}

SimpleGraph SimpleGraph::complete(int n) {
    return from_pairs(n, [](int, int) { return true; });
}

int SimpleGraph::degree(int u) const noexcept { return std::popcount(rows_[u]); }

int SimpleGraph::edge_count() const noexcept {
    int total = 0;
    for (auto r : rows_) total += std::popcount(r);
    return total / 2;
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(u, v)) g.add_edge(perm[u], perm[v]);
    return g;
}

// -- AnnotatedTournament --------------------------------------------------

AnnotatedTournament::AnnotatedTournament(Tournament t, InversionSequence a)
    : tournament(std::move(t)), annotations(std::move(a)) {
    check_same_order(tournament.order(), annotations.order());
}

// -- operations -----------------------------------------------------------

Tournament invert(const Tournament& t, const VertexSet& x) {
    check_same_order(t.order(), x.order());
    return t.inverted(x.mask());
}

Tournament invert_seq(const Tournament& t, const InversionSequence& s) {
    check_same_order(t.order(), s.order());
    Tournament out = t;
    for (const auto& x : s.sets()) out = out.inverted(x.mask());
    return out;
}

SimpleGraph boolean_sum(const Tournament& t, const Tournament& u) {
    check_same_order(t.order(), u.order());
    return SimpleGraph::from_pairs(t.order(), [&](int i, int j) { return t.arc(i, j) != u.arc(i, j); });
}

Tournament flip_edges(const Tournament& t, const SimpleGraph& g) {
    check_same_order(t.order(), g.order());
    return Tournament::from_pairs(t.order(), [&](int i, int j) { return t.arc(i, j) != g.edge(i, j); });
}

bool is_acyclic(const Tournament& t) {
    // Transitivity of the arc relation: every out-neighbour's out-set is
    // contained in ours.
    const int n = t.order();
    for (int u = 0; u < n; ++u)
        for (std::uint64_t m = t.out_mask(u); m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            if (t.out_mask(v) & ~t.out_mask(u)) return false;
        }
    return true;
}

bool has_three_cycle(const Tournament& t) {
    const int n = t.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                bool ab = t.arc(a, b), bc = t.arc(b, c), ca = t.arc(c, a);
                if (ab == bc && bc == ca) return true;
            }
    return false;
}

bool has_permutation_scores(const Tournament& t) {
    const int n = t.order();
    std::vector<int> scores(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) scores[u] = t.out_degree(u);
    std::sort(scores.begin(), scores.end());
    for (int i = 0; i < n; ++i)
        if (scores[i] != i) return false;
    return true;
}

Tournament dual(const Tournament& t) {
    return Tournament::from_pairs(t.order(), [&](int i, int j) { return !t.arc(i, j); });
}

Tournament restrict(const Tournament& t, const VertexSet& x) {
    check_same_order(t.order(), x.order());
    auto keep = x.members();
    return Tournament::from_pairs(static_cast<int>(keep.size()),
                                  [&](int i, int j) { return t.arc(keep[i], keep[j]); });
}

Tournament remove_vertex(const Tournament& t, int v) {
    check_vertex(t.order(), v);
    return restrict(t, VertexSet::from_mask(t.order(), low_mask(t.order()) & ~bit(v)));
}

Tournament relabel(const Tournament& t, std::span<const int> perm) {
    const int n = t.order();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
    std::vector<int> inverse(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < n; ++u) {
        check_vertex(n, perm[u]);
        if (inverse[perm[u]] != -1) throw InvalidArgument("relabeling is not a permutation");
        inverse[perm[u]] = u;
    }
    return Tournament::from_pairs(n, [&](int i, int j) { return t.arc(inverse[i], inverse[j]); });
}

Tournament chain(int n) {
    return Tournament::from_pairs(n, [](int, int) { return true; });
}

Tournament chain_from_order(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        check_vertex(n, order[r]);
        if (rank[order[r]] != -1) throw InvalidArgument("order lists a vertex twice");
        rank[order[r]] = r;
    }
    return Tournament::from_pairs(n, [&](int i, int j) { return rank[i] < rank[j]; });
}

// -- text codes -----------------------------------------------------------

namespace {

template <typename Adjacent>
std::string encode(char tag, int n, Adjacent&& adjacent) {
    std::string s(1, tag);
    s += std::to_string(n);
    s += ':';
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += adjacent(i, j) ? '1' : '0';
    return s;
}

struct DecodedCode {
    int order;
    std::string_view bits;
};

DecodedCode decode(char tag, std::string_view text) {
    if (text.empty() || text[0] != tag)
        throw ParseError(std::string("expected code prefix '") + tag + "'", 0);
    std::size_t pos = 1;
    int n = 0;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        n = n * 10 + (text[pos] - '0');
        if (n > kMaxOrder) throw ParseError("order exceeds " + std::to_string(kMaxOrder), start);
        ++pos;
    }
    if (pos == start) throw ParseError("expected order after prefix", pos);
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
    ++pos;
    auto bits = text.substr(pos);
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k] != '0' && bits[k] != '1') throw ParseError("non-binary digit", pos + k);
    if (static_cast<int>(bits.size()) != pair_count(n))
        throw ParseError("expected " + std::to_string(pair_count(n)) + " bits, found " +
                             std::to_string(bits.size()),
                         pos + std::min<std::size_t>(bits.size(), pair_count(n)));
    return {n, bits};
}

}  // namespace

std::string to_code(const Tournament& t) {
    return encode('T', t.order(), [&](int i, int j) { return t.arc(i, j); });
}

std::string to_code(const SimpleGraph& g) {
    return encode('G', g.order(), [&](int i, int j) { return g.edge(i, j); });
}

Tournament tournament_from_code(std::string_view text) {
    auto [n, bits] = decode('T', text);
    return Tournament::from_pairs(n, [&](int i, int j) { return bits[pair_index(n, i, j)] == '1'; });
}

SimpleGraph graph_from_code(std::string_view text) {
    auto [n, bits] = decode('G', text);
    return SimpleGraph::from_pairs(n, [&](int i, int j) { return bits[pair_index(n, i, j)] == '1'; });
}

}  // namespace inverto
