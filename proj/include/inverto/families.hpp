#pragma once

#include <string>
#include <vector>

#include "inverto/core.hpp"

namespace inverto {

/// Evens below 2*count: {0, 2, ..., 2(count-1)}.
VertexSet evens_below(int order, int count);
/// Odds below 2*count: {1, 3, ..., 2count-1}.
VertexSet odds_below(int order, int count);

/// Chain 0 -> 1 -> ... -> n-1 (all arcs i -> j for i < j).
Tournament transitive(int n);

// The critical families take the half-order n and have 2n+1 vertices.
// U accepts n >= 1, T and V require n >= 2.
InversionSequence critical_U_sets(int n);
InversionSequence critical_T_sets(int n);
InversionSequence critical_V_sets(int n);
Tournament critical_U(int n);
Tournament critical_T(int n);
Tournament critical_V(int n);

enum class MinusOneKind { E, F, G, H, FDual, GDual };

std::string to_string(MinusOneKind kind);
MinusOneKind minus_one_kind_from_string(const std::string& name);
inline constexpr MinusOneKind kAllMinusOneKinds[] = {MinusOneKind::E, MinusOneKind::F,
                                                     MinusOneKind::G, MinusOneKind::H,
                                                     MinusOneKind::FDual, MinusOneKind::GDual};

/// Inversion sets for E, F, G, H (duals use the sets of F and G).
/// Requires n >= 3 and 1 <= k <= n-2.
InversionSequence minus_one_critical_sets(MinusOneKind kind, int n, int k);
Tournament minus_one_critical(MinusOneKind kind, int n, int k);

/// Paley tournament on Z/7Z: i -> j iff j - i is a nonzero square mod 7.
Tournament paley7();
/// P7 with vertex 6 deleted.
Tournament bound_B6();

Tournament three_cycle();
Tournament bound_C3_2();
Tournament bound_D5();
Tournament bound_T5();
Tournament bound_V5();

struct NamedTournament {
    std::string name;
    Tournament tournament;
    InversionSequence sets;  // inversion sets from the chain of the same order
};

/// B6, C3.2, D5, T5, V5 built from their two-set inversion formulas.
std::vector<NamedTournament> bounds_of_I1();

}  // namespace inverto
