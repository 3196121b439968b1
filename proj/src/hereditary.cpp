#include "inverto/hereditary.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

#include "inverto/families.hpp"
#include "inverto/index.hpp"

namespace inverto {

namespace {

void check_canonical_order(int n) {
    if (n > kMaxCanonicalOrder)
        throw ResourceLimit("canonical form refused for order " + std::to_string(n), kMaxCanonicalOrder);
}

/// Packed code with pair 0 moved to the most significant position, so that
/// integer order matches lexicographic order of the text code.
std::uint64_t lex_key(std::uint64_t packed, int bits) {
    std::uint64_t key = 0;
    for (int p = 0; p < bits; ++p)
        if (packed & bit(p)) key |= bit(bits - 1 - p);
    return key;
}

/// For a relabeling perm (new vertex i is old vertex perm[i]): new pair p
/// reads old pair source[p], complemented when flip has bit p.
struct PairMap {
    std::vector<std::uint8_t> source;
    std::uint64_t flip = 0;

    std::uint64_t apply(std::uint64_t packed) const {
        std::uint64_t out = 0;
        for (std::size_t p = 0; p < source.size(); ++p) out |= ((packed >> source[p]) & 1u) << p;
        return out ^ flip;
    }
};

std::vector<PairMap> all_pair_maps(int n) {
    std::vector<PairMap> maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        PairMap map;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int a = perm[i], b = perm[j];
                map.source.push_back(static_cast<std::uint8_t>(pair_index(n, std::min(a, b), std::max(a, b))));
                if (a > b) map.flip |= bit(pair_index(n, i, j));
            }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

}  // namespace

CanonicalForm canonical_form(const Tournament& t) {
    const int n = t.order();
    check_canonical_order(n);
    const int bits = pair_count(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::uint64_t hits = 0;
    do {
        // Most significant bit first, with early exit once we exceed best.
        std::uint64_t key = 0;
        int pos = bits;
        bool worse = false;
        for (int i = 0; i < n && !worse; ++i)
            for (int j = i + 1; j < n; ++j) {
                --pos;
                if (t.arc(perm[i], perm[j])) key |= bit(pos);
                if ((key >> pos) > (best >> pos)) {
                    worse = true;
                    break;
                }
            }
        if (worse) continue;
        if (key < best) {
            best = key;
            hits = 1;
        } else if (key == best) {
            ++hits;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    CanonicalForm form;
    form.packed = lex_key(best, bits);  // lex_key is its own inverse
    form.code = to_code(Tournament::from_packed(n, form.packed));
    form.automorphisms = hits;
    return form;
}

std::string canonical_code(const Tournament& t) { return canonical_form(t).code; }

const IsoClassCatalog& enumerate(int n, const Limits& limits) {
    if (n < 0) throw InvalidArgument("order must be non-negative");
    if (n > limits.table_cap())
        throw ResourceLimit("enumeration refused for order " + std::to_string(n), limits.table_cap());
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<IsoClassCatalog>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (slot) return *slot;

    auto catalog = std::make_unique<IsoClassCatalog>();
    catalog->order = n;
    const int bits = pair_count(n);
    const std::uint64_t states = std::uint64_t{1} << bits;
    const auto maps = all_pair_maps(n);
    std::vector<std::uint64_t> seen(std::max<std::uint64_t>(1, states / 64), 0);
    for (std::uint64_t code = 0; code < states; ++code) {
        if (seen[code >> 6] & bit(static_cast<int>(code & 63))) continue;
        std::uint64_t best_key = ~std::uint64_t{0};
        std::uint64_t orbit = 0;
        for (const auto& map : maps) {
            const std::uint64_t image = map.apply(code);
            std::uint64_t& word = seen[image >> 6];
            const std::uint64_t b = bit(static_cast<int>(image & 63));
            if (!(word & b)) {
                word |= b;
                ++orbit;
            }
            best_key = std::min(best_key, lex_key(image, bits));
        }
        IsoClass cls;
        cls.packed = lex_key(best_key, bits);
        cls.code = to_code(Tournament::from_packed(n, cls.packed));
        cls.automorphisms = maps.size() / orbit;
        catalog->classes.push_back(std::move(cls));
    }
    std::sort(catalog->classes.begin(), catalog->classes.end(),
              [](const IsoClass& a, const IsoClass& b) { return a.code < b.code; });
    slot = std::move(catalog);
    return *slot;
}

void write_catalog(std::ostream& out, const IsoClassCatalog& catalog) {
    for (const auto& cls : catalog.classes) out << cls.code << '\n';
}

IsoClassCatalog read_catalog(std::istream& in) {
    IsoClassCatalog catalog;
    catalog.order = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        Tournament t = tournament_from_code(line);
        if (catalog.order == -1) catalog.order = t.order();
        if (t.order() != catalog.order) throw ParseError("mixed orders in catalog", line_no);
        CanonicalForm form = canonical_form(t);
        if (form.code != line) throw ParseError("code is not canonical", line_no);
        catalog.classes.push_back({form.code, form.packed, form.automorphisms});
    }
    if (catalog.order == -1) catalog.order = 0;
    return catalog;
}

// -- embeddings -----------------------------------------------------------

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Tournament& pattern, const Tournament& host)
        : pattern_(pattern), host_(host), map_(pattern.order(), -1) {
        order_.resize(static_cast<std::size_t>(pattern.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return pattern.out_degree(a) > pattern.out_degree(b);
        });
    }

    bool run() { return extend(0, low_mask(host_.order())); }
    std::vector<int> mapping() const { return map_; }

private:
    bool extend(std::size_t depth, std::uint64_t unused) {
        if (depth == order_.size()) return true;
        const int p = order_[depth];
        std::uint64_t candidates = unused;
        for (std::size_t d = 0; d < depth; ++d) {
            const int q = order_[d];
            const int hq = map_[q];
            candidates &= pattern_.arc(p, q) ? host_.in_mask(hq) : host_.out_mask(hq);
        }
        const int need_out = pattern_.out_degree(p);
        const int need_in = pattern_.order() - 1 - need_out;
        for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
            const int h = std::countr_zero(c);
            if (host_.out_degree(h) < need_out || host_.order() - 1 - host_.out_degree(h) < need_in)
                continue;
            map_[p] = h;
            if (extend(depth + 1, unused & ~bit(h))) return true;
        }
        map_[p] = -1;
        return false;
    }

    const Tournament& pattern_;
    const Tournament& host_;
    std::vector<int> order_;
    std::vector<int> map_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Tournament& pattern, const Tournament& host) {
    if (pattern.order() > host.order()) return std::nullopt;
    EmbeddingSearch search(pattern, host);
    if (!search.run()) return std::nullopt;
    return search.mapping();
}

bool embeds(const Tournament& pattern, const Tournament& host) {
    return find_embedding(pattern, host).has_value();
}

bool isomorphic(const Tournament& a, const Tournament& b) {
    return a.order() == b.order() && embeds(a, b);
}

// -- membership and obstructions -----------------------------------------

std::vector<std::pair<std::string, Tournament>> forbidden_list(int m) {
    if (m == 0) return {{"C3", three_cycle()}};
    if (m == 1) {
        std::vector<std::pair<std::string, Tournament>> out;
        for (auto& b : bounds_of_I1()) out.emplace_back(b.name, b.tournament);
        return out;
    }
    throw InvalidArgument("no forbidden list is known for m = " + std::to_string(m) +
                          "; use index mode");
}

Membership member_I(const Tournament& t, int m, MembershipMode mode, const Limits& limits) {
    if (m < 0) throw InvalidArgument("m must be non-negative");
    Membership out;
    if (mode == MembershipMode::Index) {
        IndexResult r = inversion_index(t, IndexMethod::StateBfs, limits);
        out.index = r.value;
        out.member = r.value <= m;
        if (out.member) out.witness = r.witness;
        return out;
    }
    for (auto& [name, bound] : forbidden_list(m)) {
        if (auto map = find_embedding(bound, t)) {
            out.member = false;
            out.bound_name = name;
            out.embedding = std::move(*map);
            return out;
        }
    }
    out.member = true;
    return out;
}

ObstructionReport obstructions(int m, int max_n, const Limits& limits) {
    if (m < 0) throw InvalidArgument("m must be non-negative");
    if (max_n > limits.table_cap())
        throw ResourceLimit("obstruction scan refused for order " + std::to_string(max_n), limits.table_cap());
    ObstructionReport report;
    report.m = m;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        const IndexTable& table = index_all(n, limits);
        const IndexTable& smaller = index_all(n - 1, limits);
        for (const auto& cls : enumerate(n, limits).classes) {
            const int idx = table.index_of(cls.packed);
            if (idx <= m) continue;
            const Tournament t = cls.tournament(n);
            Obstruction ob{cls.code, n, idx, {}};
            bool minimal = true;
            for (int x = 0; x < n; ++x) {
                const int sub = smaller.index_of(remove_vertex(t, x));
                ob.deletion_indices.push_back(sub);
                if (sub > m) minimal = false;
            }
            if (minimal) report.bounds.push_back(std::move(ob));
        }
    }
    return report;
}

}  // namespace inverto
