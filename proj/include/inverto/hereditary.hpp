#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "inverto/core.hpp"
#include "inverto/limits.hpp"

namespace inverto {

/// Largest order accepted by the factorial canonicalization scan.
inline constexpr int kMaxCanonicalOrder = 8;

struct CanonicalForm {
    std::string code;
    std::uint64_t packed = 0;
    /// Number of relabelings that fix the tournament.
    std::uint64_t automorphisms = 0;
};

/// Lexicographically least code over all relabelings (order <= 8).
CanonicalForm canonical_form(const Tournament& t);
std::string canonical_code(const Tournament& t);

struct IsoClass {
    std::string code;
    std::uint64_t packed = 0;
    std::uint64_t automorphisms = 0;

    Tournament tournament(int order) const { return Tournament::from_packed(order, packed); }
};

/// One canonical code per isomorphism class of a given order, sorted.
struct IsoClassCatalog {
    int order = 0;
    std::vector<IsoClass> classes;

    Tournament tournament(std::size_t i) const { return classes[i].tournament(order); }
};

/// Orbit sweep over all labeled codes; cached per order.
const IsoClassCatalog& enumerate(int n, const Limits& limits = {});

void write_catalog(std::ostream& out, const IsoClassCatalog& catalog);
IsoClassCatalog read_catalog(std::istream& in);

/// Injective map pattern -> host preserving arcs both ways, if any.
std::optional<std::vector<int>> find_embedding(const Tournament& pattern, const Tournament& host);
bool embeds(const Tournament& pattern, const Tournament& host);
bool isomorphic(const Tournament& a, const Tournament& b);

enum class MembershipMode { Index, Forb };

struct Membership {
    bool member = false;
    /// Index mode: the computed index and a witness sequence of that length.
    int index = -1;
    std::optional<InversionSequence> witness;
    /// Forb mode, rejection: the bound found and where it embeds.
    std::string bound_name;
    std::vector<int> embedding;
};

/// Named forbidden list for I_0 ({C3}) and I_1 (five bounds).
std::vector<std::pair<std::string, Tournament>> forbidden_list(int m);

Membership member_I(const Tournament& t, int m, MembershipMode mode, const Limits& limits = {});

struct Obstruction {
    std::string code;
    int order = 0;
    int index = 0;
    /// Index of t - x for each vertex x.
    std::vector<int> deletion_indices;
};

struct ObstructionReport {
    int m = 0;
    int max_n = 0;
    std::vector<Obstruction> bounds;
};

/// Every class of order <= max_n with index > m whose one-vertex deletions
/// all have index <= m. Complete only up to max_n.
ObstructionReport obstructions(int m, int max_n, const Limits& limits = {});

}  // namespace inverto
