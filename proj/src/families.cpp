#include "inverto/families.hpp"

namespace inverto {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
    return VertexSet::from_mask(a.order(), a.mask() & ~b.mask());
}

Tournament from_chain(const InversionSequence& s) { return invert_seq(chain(s.order()), s); }

}  // namespace

VertexSet evens_below(int order, int count) {
    std::uint64_t mask = 0;
    for (int i = 0; i < count; ++i) mask |= bit(2 * i);
    return VertexSet::from_mask(order, mask);
}

VertexSet odds_below(int order, int count) {
    std::uint64_t mask = 0;
    for (int i = 0; i < count; ++i) mask |= bit(2 * i + 1);
    return VertexSet::from_mask(order, mask);
}

Tournament transitive(int n) {
    require(n >= 0, "order must be non-negative");
    return chain(n);
}

InversionSequence critical_U_sets(int n) {
    require(n >= 1, "U_{2n+1} requires n >= 1");
    const int order = 2 * n + 1;
    return InversionSequence(order, {evens_below(order, n + 1)});
}

InversionSequence critical_T_sets(int n) {
    require(n >= 2, "T_{2n+1} requires n >= 2");
    const int order = 2 * n + 1;
    return InversionSequence(order, {evens_below(order, n + 1), odds_below(order, n)});
}

InversionSequence critical_V_sets(int n) {
    require(n >= 2, "V_{2n+1} requires n >= 2");
    const int order = 2 * n + 1;
    return InversionSequence(order, {evens_below(order, n + 1), evens_below(order, n)});
}

Tournament critical_U(int n) { return from_chain(critical_U_sets(n)); }
Tournament critical_T(int n) { return from_chain(critical_T_sets(n)); }
Tournament critical_V(int n) { return from_chain(critical_V_sets(n)); }

std::string to_string(MinusOneKind kind) {
    switch (kind) {
        case MinusOneKind::E: return "E";
        case MinusOneKind::F: return "F";
        case MinusOneKind::G: return "G";
        case MinusOneKind::H: return "H";
        case MinusOneKind::FDual: return "F*";
        case MinusOneKind::GDual: return "G*";
    }
    return "?";
}

MinusOneKind minus_one_kind_from_string(const std::string& name) {
    for (auto kind : kAllMinusOneKinds)
        if (to_string(kind) == name) return kind;
    if (name == "Fdual" || name == "F-dual") return MinusOneKind::FDual;
    if (name == "Gdual" || name == "G-dual") return MinusOneKind::GDual;
    throw InvalidArgument("unknown (-1)-critical kind '" + name + "'");
}

InversionSequence minus_one_critical_sets(MinusOneKind kind, int n, int k) {
    require(n >= 3, "(-1)-critical families require n >= 3");
    require(k >= 1 && k <= n - 2, "(-1)-critical families require 1 <= k <= n-2");
    const int order = 2 * n + 1;
    auto ev = [&](int c) { return evens_below(order, c); };
    switch (kind) {
        case MinusOneKind::E:
            return InversionSequence(order, {ev(n + 1), ev(k + 1), minus(ev(n + 1), ev(k + 1))});
        case MinusOneKind::F:
        case MinusOneKind::FDual:
            return InversionSequence(order, {ev(n + 1), minus(ev(n + 1), ev(k + 1))});
        case MinusOneKind::G:
        case MinusOneKind::GDual:
            return InversionSequence(order, {ev(n + 1), ev(n), ev(k + 1)});
        case MinusOneKind::H:
            return InversionSequence(
                order, {ev(k + 1), ev(k), minus(ev(n + 1), ev(k)), minus(ev(n), ev(k))});
    }
    throw InvalidArgument("unknown (-1)-critical kind");
}

Tournament minus_one_critical(MinusOneKind kind, int n, int k) {
    Tournament t = from_chain(minus_one_critical_sets(kind, n, k));
    if (kind == MinusOneKind::FDual || kind == MinusOneKind::GDual) return dual(t);
    return t;
}

Tournament paley7() {
    return Tournament::from_pairs(7, [](int i, int j) {
        int d = (j - i) % 7;
        return d == 1 || d == 2 || d == 4;
    });
}

Tournament bound_B6() { return remove_vertex(paley7(), 6); }

Tournament three_cycle() { return critical_U(1); }

Tournament bound_C3_2() { return from_chain(InversionSequence(6, {{0, 2}, {3, 5}})); }
Tournament bound_D5() { return from_chain(InversionSequence(5, {{1, 3}, {0, 4}})); }
Tournament bound_T5() { return from_chain(InversionSequence(5, {{0, 2, 4}, {1, 3}})); }
Tournament bound_V5() { return from_chain(InversionSequence(5, {{0, 4}, {2, 4}})); }

std::vector<NamedTournament> bounds_of_I1() {
    std::vector<NamedTournament> out;
    auto add = [&](std::string name, InversionSequence s) {
        Tournament t = from_chain(s);
        out.push_back({std::move(name), std::move(t), std::move(s)});
    };
    add("B6", InversionSequence(6, {{0, 3, 4}, {1, 4, 5}}));
    add("C3.2", InversionSequence(6, {{0, 2}, {3, 5}}));
    add("D5", InversionSequence(5, {{1, 3}, {0, 4}}));
    add("T5", InversionSequence(5, {{0, 2, 4}, {1, 3}}));
    add("V5", InversionSequence(5, {{0, 4}, {2, 4}}));
    return out;
}

}  // namespace inverto
