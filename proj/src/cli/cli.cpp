#include "inverto/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "inverto/booldim.hpp"
#include "inverto/families.hpp"
#include "inverto/hereditary.hpp"
#include "inverto/index.hpp"
#include "inverto/structure.hpp"
#include "inverto/universal.hpp"

namespace inverto::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
    std::ostringstream text;
    Json json = Json::object();

    void begin(const std::string& op, Json input) {
        json["op"] = op;
        json["input"] = std::move(input);
        json["result"] = nullptr;
        json["witness"] = nullptr;
    }
};

Json sets_json(const InversionSequence& s) {
    Json out = Json::array();
    for (const auto& x : s.sets()) out.push_back(x.members());
    return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

// -- gen --------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::optional<int> param, n, order, k;
};

int half_order(const GenArgs& a, const std::string& family) {
    if (a.n) return *a.n;
    if (a.param) return *a.param;
    if (a.order) {
        if (*a.order % 2 == 0) throw InvalidArgument(family + " has odd order 2n+1; got --order " + std::to_string(*a.order));
        return (*a.order - 1) / 2;
    }
    throw InvalidArgument(family + " needs n (positional, --n) or --order");
}

void do_gen(const GenArgs& a, Output& out) {
    Json input = {{"family", a.family}};
    if (a.param) input["param"] = *a.param;
    if (a.n) input["n"] = *a.n;
    if (a.order) input["order"] = *a.order;
    if (a.k) input["k"] = *a.k;
    out.begin("gen", input);

    const std::string f = a.family;
    const std::string fl = lower(f);
    Tournament t;
    std::optional<InversionSequence> sets;
    bool dual_of_sets = false;
    if (fl == "transitive" || fl == "chain") {
        int n = a.order ? *a.order : a.param ? *a.param : a.n ? *a.n : -1;
        if (n < 0) throw InvalidArgument("transitive needs an order");
        t = transitive(n);
    } else if (f == "U" || f == "T" || f == "V") {
        int n = half_order(a, f);
        sets = f == "U" ? critical_U_sets(n) : f == "T" ? critical_T_sets(n) : critical_V_sets(n);
        t = invert_seq(chain(sets->order()), *sets);
    } else if (f == "E" || f == "F" || f == "G" || f == "H" || f == "F*" || f == "G*") {
        if (!a.k) throw InvalidArgument(f + " needs --k");
        auto kind = minus_one_kind_from_string(f);
        int n = half_order(a, f);
        sets = minus_one_critical_sets(kind, n, *a.k);
        t = minus_one_critical(kind, n, *a.k);
        dual_of_sets = kind == MinusOneKind::FDual || kind == MinusOneKind::GDual;
    } else if (fl == "paley7" || f == "P7") {
        t = paley7();
    } else if (f == "B6") {
        t = bound_B6();
    } else if (f == "C3") {
        t = three_cycle();
        sets = critical_U_sets(1);
    } else {
        bool found = false;
        for (auto& b : bounds_of_I1())
            if (b.name == f) {
                t = b.tournament;
                sets = b.sets;
                found = true;
            }
        if (!found) throw InvalidArgument("unknown family '" + f + "'");
    }
    out.text << to_code(t) << '\n';
    out.json["result"] = {{"code", to_code(t)}, {"order", t.order()}};
    if (sets) out.json["witness"] = {{"sets", sets_json(*sets)}, {"dual", dual_of_sets}};
}

// -- index / table / count -------------------------------------------------

void do_index(const std::string& code, const std::string& method, const Limits& limits, Output& out) {
    out.begin("index", {{"code", code}, {"method", method}});
    Tournament t = tournament_from_code(code);
    auto r = inversion_index(t, method == "order-min" ? IndexMethod::OrderMin : IndexMethod::StateBfs, limits);
    out.text << "index: " << r.value << '\n' << "witness: " << r.witness.to_string() << '\n';
    out.json["result"] = {{"value", r.value}};
    out.json["witness"] = sets_json(r.witness);
}

void do_index_all(int n, bool list, const Limits& limits, Output& out) {
    out.begin("index-all", {{"n", n}});
    const IndexTable& table = index_all(n, limits);
    Json counts = Json::object();
    for (std::size_t k = 0; k < table.level_counts().size(); ++k) {
        out.text << "index " << k << ": " << table.level_counts()[k] << '\n';
        counts[std::to_string(k)] = table.level_counts()[k];
    }
    out.text << "i(" << n << ") = " << table.max_index() << '\n';
    Json result = {{"order", n}, {"max", table.max_index()}, {"counts", counts}, {"kernel", table.kernel_name()}};
    if (list) {
        Json codes = Json::object();
        for (std::uint64_t c = 0; c < table.levels().size(); ++c) {
            auto code = to_code(Tournament::from_packed(n, c));
            out.text << code << ' ' << int(table.levels()[c]) << '\n';
            codes[code] = table.levels()[c];
        }
        result["codes"] = codes;
    }
    out.json["result"] = result;
}

void do_table(int n, const Limits& limits, Output& out) {
    out.begin("table", {{"n", n}});
    OrderSummary s = i_of_n(n, limits);
    Json classes = Json::array();
    for (const auto& [code, idx] : s.classes) {
        out.text << code << ' ' << idx << '\n';
        classes.push_back({{"code", code}, {"index", idx}});
    }
    out.text << "i(" << n << ") = " << s.max_index << '\n';
    out.json["result"] = {
        {"order", n},
        {"max", s.max_index},
        {"classes", classes},
        {"bounds", {{"lower_counting", s.bounds.lower_counting}, {"lower_log", s.bounds.lower_log},
                    {"upper", s.bounds.upper}, {"holds", s.bounds.holds}}}};
    if (!s.bounds.holds) throw Error("i(" + std::to_string(n) + ") violates the index bounds");
}

void do_count(int n, int N, const Limits& limits, Output& out) {
    out.begin("count", {{"n", n}, {"N", N}});
    LowIndexCount c = count_low_index(n, N, limits);
    out.text << "count: " << c.count << '\n' << "bound: " << c.bound << '\n' << "holds: " << yes_no(c.holds) << '\n';
    out.json["result"] = {{"count", c.count}, {"bound", c.bound.str()}, {"holds", c.holds}};
}

// -- distance / booldim / invert -------------------------------------------

void do_distance(const std::string& a, const std::string& b, Output& out) {
    out.begin("distance", {{"from", a}, {"to", b}});
    Tournament t = tournament_from_code(a), u = tournament_from_code(b);
    auto dim = boolean_dimension(boolean_sum(t, u));
    auto sets = parity_set_system(dim.witness);
    if (invert_seq(t, sets) != u) throw Error("distance witness does not reach the target");
    out.text << "distance: " << dim.dimension << '\n' << "witness: " << sets.to_string() << '\n';
    out.json["result"] = {{"value", dim.dimension}};
    out.json["witness"] = sets_json(sets);
}

void do_booldim(const std::string& code, Output& out) {
    out.begin("booldim", {{"graph", code}});
    SimpleGraph g = graph_from_code(code);
    auto dim = boolean_dimension(g);
    auto sets = parity_set_system(dim.witness);
    out.text << "dimension: " << dim.dimension << '\n';
    Json vectors = Json::array();
    for (std::size_t v = 0; v < dim.witness.vectors.size(); ++v) {
        std::string bits;
        for (int i = 0; i < dim.dimension; ++i) bits += dim.witness.vectors[v].coordinate(i) ? '1' : '0';
        out.text << "f(" << v << ") = (" << bits << ")\n";
        vectors.push_back(bits);
    }
    out.text << "sets: " << sets.to_string() << '\n';
    out.json["result"] = {{"dimension", dim.dimension}};
    out.json["witness"] = {{"vectors", vectors}, {"sets", sets_json(sets)}};
}

void do_invert(const std::string& code, const std::string& sets_text, Output& out) {
    out.begin("invert", {{"code", code}, {"sets", sets_text}});
    Tournament t = tournament_from_code(code);
    auto sets = parse_set_list(sets_text, t.order());
    Tournament r = invert_seq(t, sets);
    out.text << to_code(r) << '\n';
    out.json["result"] = {{"code", to_code(r)}};
    out.json["witness"] = sets_json(sets);
}

// -- structure --------------------------------------------------------------

void do_decompose(const std::string& code, Output& out) {
    out.begin("decompose", {{"code", code}});
    auto d = acyclic_decompose(tournament_from_code(code));
    out.text << "quotient: " << to_code(d.quotient) << '\n';
    Json blocks = Json::array();
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& vs = d.block_vertices[i];
        std::string members = VertexSet(kMaxOrder, std::vector<int>(vs)).to_string();
        out.text << "block " << i << ": " << members << ' ' << to_code(d.blocks[i]) << '\n';
        blocks.push_back({{"vertices", vs}, {"code", to_code(d.blocks[i])}});
    }
    out.json["result"] = {{"quotient", to_code(d.quotient)}, {"blocks", blocks}};
}

void do_intervals(const std::string& code, Output& out) {
    out.begin("intervals", {{"code", code}});
    Tournament t = tournament_from_code(code);
    Json list = Json::array();
    for (const auto& x : intervals(t)) {
        out.text << x.to_string() << '\n';
        list.push_back(x.members());
    }
    const bool indec = is_indecomposable(t);
    out.text << "indecomposable: " << yes_no(indec) << '\n';
    out.json["result"] = {{"intervals", list}, {"indecomposable", indec},
                          {"acyclically_indecomposable", is_acyclically_indecomposable(t)}};
}

void do_critical(const std::string& code, Output& out) {
    out.begin("critical", {{"code", code}});
    Tournament t = tournament_from_code(code);
    VertexSet non = noncritical_vertices(t);
    out.text << "critical: " << yes_no(non.empty()) << '\n'
             << "minus-one-critical: " << yes_no(non.size() == 1) << '\n'
             << "noncritical: " << non.to_string() << '\n';
    out.json["result"] = {{"critical", non.empty()}, {"minus_one_critical", non.size() == 1},
                          {"noncritical", non.members()}};
}

// -- hereditary -------------------------------------------------------------

void do_member(const std::string& code, int m, const std::string& mode, const Limits& limits, Output& out) {
    out.begin("member", {{"code", code}, {"m", m}, {"mode", mode}});
    Tournament t = tournament_from_code(code);
    auto r = member_I(t, m, mode == "forb" ? MembershipMode::Forb : MembershipMode::Index, limits);
    out.text << "member: " << yes_no(r.member) << '\n';
    Json result = {{"member", r.member}};
    if (mode == "index") {
        result["index"] = r.index;
        out.text << "index: " << r.index << '\n';
        if (r.witness) {
            out.text << "witness: " << r.witness->to_string() << '\n';
            out.json["witness"] = sets_json(*r.witness);
        }
    } else if (!r.member) {
        out.text << "bound: " << r.bound_name << '\n' << "embedding:";
        for (int h : r.embedding) out.text << ' ' << h;
        out.text << '\n';
        out.json["witness"] = {{"bound", r.bound_name}, {"embedding", r.embedding}};
    }
    out.json["result"] = result;
}

void do_enumerate(int n, const std::string& path, const Limits& limits, Output& out) {
    out.begin("enumerate", {{"n", n}});
    const auto& catalog = enumerate(n, limits);
    Json codes = Json::array();
    for (const auto& c : catalog.classes) codes.push_back(c.code);
    if (!path.empty()) {
        std::ofstream file(path);
        if (!file) throw InvalidArgument("cannot write " + path);
        write_catalog(file, catalog);
    }
    write_catalog(out.text, catalog);
    out.json["result"] = {{"order", n}, {"count", catalog.classes.size()}, {"classes", codes}};
}

void do_obstructions(int m, int max_n, const Limits& limits, Output& out) {
    out.begin("obstructions", {{"m", m}, {"max_n", max_n}});
    auto report = obstructions(m, max_n, limits);
    Json bounds = Json::array();
    for (const auto& b : report.bounds) {
        out.text << b.code << '\n';
        bounds.push_back({{"code", b.code}, {"order", b.order}, {"index", b.index},
                          {"deletion_indices", b.deletion_indices}});
    }
    out.text << "# " << report.bounds.size() << " bounds of I_" << m << ", search up to order " << max_n << '\n';
    out.json["result"] = {{"bounds", bounds}, {"count", report.bounds.size()},
                          {"complete_up_to", max_n}};
}

void do_embed(const std::string& p, const std::string& h, Output& out) {
    out.begin("embed", {{"pattern", p}, {"host", h}});
    auto map = find_embedding(tournament_from_code(p), tournament_from_code(h));
    out.text << "embeds: " << yes_no(map.has_value()) << '\n';
    out.json["result"] = {{"embeds", map.has_value()}};
    if (map) {
        out.text << "map:";
        for (std::size_t i = 0; i < map->size(); ++i) out.text << ' ' << i << "->" << (*map)[i];
        out.text << '\n';
        out.json["witness"] = *map;
    }
}

// -- universal --------------------------------------------------------------

void do_universal(int m, const std::string& sample_spec, int k, bool escalate, int max_points,
                  const Limits& limits, Output& out) {
    out.begin("universal", {{"m", m}, {"sample", sample_spec}, {"k", k}});
    Json result = Json::object();
    if (escalate) {
        auto esc = escalate_universality(m, k, max_points, limits);
        const auto& r = esc.report;
        out.text << "escalated sample: " << r.sample_size << " points (q in 0.." << esc.q_count - 1 << ")\n"
                 << "universality (k=" << k << "): " << (r.passed ? "pass" : "FAIL") << ", embedded "
                 << r.classes_embedded << '/' << r.classes_checked << ", max index witnessed "
                 << r.max_index_witnessed << '\n';
        result = {{"sample_size", r.sample_size}, {"q_count", esc.q_count}, {"passed", r.passed},
                  {"embedded", r.classes_embedded}, {"checked", r.classes_checked},
                  {"max_index_witnessed", r.max_index_witnessed}, {"missing", r.missing}};
        out.json["result"] = result;
        return;
    }
    std::vector<WVertex> vertices;
    if (sample_spec.rfind("default:", 0) == 0) {
        int q_count = 0;
        try {
            q_count = std::stoi(sample_spec.substr(8));
        } catch (const std::exception&) {
            throw ParseError("malformed default sample size", 8);
        }
        vertices = default_sample_vertices(m, q_count);
    } else {
        std::ifstream file(sample_spec);
        if (!file) throw InvalidArgument("cannot read sample file " + sample_spec);
        vertices = parse_sample_spec(file, m);
    }
    WSample sample = build_W_sample(m, std::move(vertices));
    out.text << "points: " << sample.chain.size() << '\n' << "tournament: " << to_code(sample.tournament) << '\n';
    for (std::size_t i = 0; i < sample.annotated.annotations.size(); ++i)
        out.text << "X_" << i << ": " << sample.annotated.annotations[i].to_string() << '\n';
    Json chain = Json::array();
    for (const auto& v : sample.chain) chain.push_back(v.to_string());
    result = {{"points", sample.chain.size()}, {"tournament", to_code(sample.tournament)},
              {"chain", chain}, {"sets", sets_json(sample.annotated.annotations)}};
    if (k > 0) {
        auto r = universality_check(m, k, sample, limits);
        out.text << "universality (k=" << k << "): " << (r.passed ? "pass" : "FAIL") << ", embedded "
                 << r.classes_embedded << '/' << r.classes_checked << ", max index witnessed "
                 << r.max_index_witnessed << '\n';
        for (const auto& code : r.missing) out.text << "missing: " << code << '\n';
        result["universality"] = {{"passed", r.passed}, {"embedded", r.classes_embedded},
                                  {"checked", r.classes_checked},
                                  {"max_index_witnessed", r.max_index_witnessed}, {"missing", r.missing}};
    }
    out.json["result"] = result;
}

int jobs_from_env() {
    if (const char* env = std::getenv("INVERTO_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"inverto: inversion index and related computations on tournaments", "inverto"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    Limits limits;
    int jobs = 0;
    app.add_flag("--json", json, "Print the JSON document instead of text");
    app.add_option("--max-order", limits.max_order, "Upper cap on orders for exhaustive tables");
    app.add_flag("--allow-n8", limits.allow_n8, "Permit order-8 tables (2^28 states)");
    app.add_option("--jobs", jobs, "Worker threads (default: INVERTO_JOBS or 1)");

    std::map<std::string, std::function<void(Output&)>> actions;
    auto add = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

    GenArgs gen;
    auto* g = add("gen", "Construct a named tournament");
    g->add_option("family", gen.family, "transitive, U, T, V, E, F, G, H, F*, G*, paley7, C3, B6, C3.2, D5, T5, V5")->required();
    g->add_option("param", gen.param, "Order for transitive, half-order n otherwise");
    g->add_option("--n", gen.n, "Half-order n (order 2n+1)");
    g->add_option("--order", gen.order, "Vertex count");
    g->add_option("--k", gen.k, "Second parameter of the (-1)-critical families");
    actions["gen"] = [&](Output& o) { do_gen(gen, o); };

    std::string code, code2, method = "state-bfs", mode = "index", sets_text, path, sample = "default:20";
    int n = 0, m = 0, max_n = 0, big_n = 0, k = 5, max_points = 64;
    bool list = false, escalate = false;

    auto* ix = add("index", "Inversion index with witness");
    ix->add_option("code", code)->required();
    ix->add_option("--method", method)->check(CLI::IsMember({"state-bfs", "order-min"}));
    actions["index"] = [&](Output& o) { do_index(code, method, limits, o); };

    auto* ia = add("index-all", "Index of every labeled tournament of order n");
    ia->add_option("n", n)->required();
    ia->add_flag("--list", list, "List every labeled code with its index");
    actions["index-all"] = [&](Output& o) { do_index_all(n, list, limits, o); };

    auto* tb = add("table", "Index per isomorphism class and i(n)");
    tb->add_option("n", n)->required();
    actions["table"] = [&](Output& o) { do_table(n, limits, o); };

    auto* ds = add("distance", "Graphic distance between two tournaments");
    ds->add_option("from", code)->required();
    ds->add_option("to", code2)->required();
    actions["distance"] = [&](Output& o) { do_distance(code, code2, o); };

    auto* bd = add("booldim", "Boolean dimension of a graph");
    bd->add_option("graph", code)->required();
    actions["booldim"] = [&](Output& o) { do_booldim(code, o); };

    auto* iv = add("invert", "Apply a sequence of inversions");
    iv->add_option("code", code)->required();
    iv->add_option("--sets", sets_text, "\"{a,b,...};{...}\"")->required();
    actions["invert"] = [&](Output& o) { do_invert(code, sets_text, o); };

    auto* dc = add("decompose", "Acyclic lexicographic decomposition");
    dc->add_option("code", code)->required();
    actions["decompose"] = [&](Output& o) { do_decompose(code, o); };

    auto* in = add("intervals", "All intervals of a tournament");
    in->add_option("code", code)->required();
    actions["intervals"] = [&](Output& o) { do_intervals(code, o); };

    auto* cr = add("critical", "Critical vertices of an indecomposable tournament");
    cr->add_option("code", code)->required();
    actions["critical"] = [&](Output& o) { do_critical(code, o); };

    auto* mb = add("member", "Membership in I_m");
    mb->add_option("code", code)->required();
    mb->add_option("--m", m)->required();
    mb->add_option("--mode", mode)->check(CLI::IsMember({"index", "forb"}));
    actions["member"] = [&](Output& o) { do_member(code, m, mode, limits, o); };

    auto* en = add("enumerate", "Canonical codes of all isomorphism classes of order n");
    en->add_option("n", n)->required();
    en->add_option("--out", path, "Also write the catalog file");
    actions["enumerate"] = [&](Output& o) { do_enumerate(n, path, limits, o); };

    auto* ob = add("obstructions", "Bounds of I_m up to a size cap");
    ob->add_option("--m", m)->required();
    ob->add_option("--max-n", max_n)->required();
    actions["obstructions"] = [&](Output& o) { do_obstructions(m, max_n, limits, o); };

    auto* un = add("universal", "Finite sample of W(m) and a universality check");
    un->add_option("--m", m)->required();
    un->add_option("--sample", sample, "Sample file or default:<q-count>");
    un->add_option("--k", k, "Check classes up to this order (0 skips the check)");
    un->add_flag("--escalate", escalate, "Grow the default sample until the check passes");
    un->add_option("--max-points", max_points, "Escalation ceiling");
    actions["universal"] = [&](Output& o) { do_universal(m, sample, k, escalate, max_points, limits, o); };

    auto* em = add("embed", "Embedding of a pattern into a host");
    em->add_option("pattern", code)->required();
    em->add_option("host", code2)->required();
    actions["embed"] = [&](Output& o) { do_embed(code, code2, o); };

    auto* ct = add("count", "Count labeled tournaments with index < N");
    ct->add_option("--n", n)->required();
    ct->add_option("--N", big_n)->required();
    actions["count"] = [&](Output& o) { do_count(n, big_n, limits, o); };

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.text = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = kParseError;
        result.text = e.what();
        return result;
    }
    result.want_json = json;
    limits.jobs = jobs > 0 ? jobs : jobs_from_env();

    Output out;
    try {
        actions.at(app.get_subcommands().front()->get_name())(out);
    } catch (const inverto::ParseError& e) {
        result.status = kParseError;
        result.text = e.what();
        return result;
    } catch (const Error& e) {
        result.status = kDomainError;
        result.text = e.what();
        return result;
    }
    result.text = out.text.str();
    result.json = std::move(out.json);
    return result;
}

}  // namespace inverto::cli
