#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "inverto/booldim.hpp"
#include "inverto/cli.hpp"
#include "inverto/families.hpp"
#include "inverto/hereditary.hpp"
#include "inverto/index.hpp"
#include "inverto/structure.hpp"

using namespace inverto;
using cli::CommandResult;

namespace {

CommandResult run(std::vector<std::string> args) { return cli::run(args); }

CommandResult run_json(std::vector<std::string> args) {
    args.push_back("--json");
    auto r = cli::run(args);
    REQUIRE(r.status == cli::kOk);
    REQUIRE(r.want_json);
    return r;
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
    return out;
}

}  // namespace

TEST_CASE("gen") {
    CHECK(run({"gen", "transitive", "4"}).text == "T4:111111\n");
    CHECK(run({"gen", "T", "2"}).text == to_code(critical_T(2)) + "\n");
    CHECK(run({"gen", "V", "--order", "5"}).text == to_code(critical_V(2)) + "\n");
    CHECK(run({"gen", "F*", "--n", "3", "--k", "1"}).text ==
          to_code(minus_one_critical(MinusOneKind::FDual, 3, 1)) + "\n");
    CHECK(run({"gen", "paley7"}).text == to_code(paley7()) + "\n");
    CHECK(run({"gen", "B6"}).text == to_code(bound_B6()) + "\n");
    CHECK(run({"gen", "V", "--order", "6"}).status == cli::kDomainError);
    CHECK(run({"gen", "E", "--n", "3"}).status == cli::kDomainError);
    CHECK(run({"gen", "nonsense"}).status == cli::kDomainError);
}

TEST_CASE("json documents have a stable key order") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"gen", "U", "2"}, {"index", "T3:101"}, {"table", "4"}, {"distance", "T3:111", "T3:101"},
             {"booldim", "G3:101"}, {"intervals", "T3:101"}, {"embed", "T3:101", "T5:1111111111"}}) {
        auto r = run_json(args);
        CHECK(keys(r.json) == std::vector<std::string>{"op", "input", "result", "witness"});
        CHECK(r.json["op"] == args[0]);
    }
}

TEST_CASE("index agrees with the module") {
    auto r = run({"index", "T3:101"});
    CHECK(r.status == cli::kOk);
    CHECK(r.text == "index: 1\nwitness: {0,1}\n");
    auto j = run_json({"index", "T5:1010011110", "--method", "order-min"});
    auto t = tournament_from_code("T5:1010011110");
    CHECK(j.json["result"]["value"] == inversion_index(t).value);
    CHECK(run({"index", "T3:101", "--method", "magic"}).status == cli::kParseError);
}

TEST_CASE("table and index-all") {
    auto r = run({"table", "4"});
    CHECK(r.text == "T4:000000 0\nT4:000010 1\nT4:001000 1\nT4:001001 1\ni(4) = 1\n");
    auto j = run_json({"table", "5"});
    CHECK(j.json["result"]["max"] == 2);
    CHECK(j.json["result"]["classes"].size() == 12);
    auto all = run({"index-all", "3"});
    CHECK(all.text == "index 0: 6\nindex 1: 2\ni(3) = 1\n");
    CHECK(run({"table", "8"}).status == cli::kDomainError);
    CHECK(run({"table", "6", "--max-order", "5"}).status == cli::kDomainError);
}

TEST_CASE("distance, booldim, invert") {
    auto d = run_json({"distance", "T4:111111", "T4:100101"});
    CHECK(d.json["result"]["value"] == 3);
    CHECK(d.json["witness"].size() == 3);

    auto b = run({"booldim", "G4:100101"});
    CHECK(b.text.rfind("dimension: 3\n", 0) == 0);
    CHECK(run({"booldim", "G4:10010"}).status == cli::kParseError);

    CHECK(run({"invert", "T3:111", "--sets", "{0, 2}"}).text == "T3:101\n");
    CHECK(run({"invert", "T5:1111111111", "--sets", "{0,2,4};{1,3}"}).text == to_code(bound_T5()) + "\n");
    CHECK(run({"invert", "T3:111", "--sets", "{0,2"}).status == cli::kParseError);
    CHECK(run({"invert", "T3:111", "--sets", "{0,7}"}).status == cli::kDomainError);
}

TEST_CASE("structure commands") {
    auto d = run({"decompose", "T3:101"});
    CHECK(d.text == "quotient: T3:101\nblock 0: {0} T1:\nblock 1: {1} T1:\nblock 2: {2} T1:\n");
    auto i = run_json({"intervals", "T3:101"});
    CHECK(i.json["result"]["intervals"].size() == 5);
    CHECK(i.json["result"]["indecomposable"] == true);
    auto c = run_json({"critical", to_code(bound_T5())});
    CHECK(c.json["result"]["critical"] == true);
    CHECK(run({"critical", "T3:111"}).status == cli::kDomainError);
    CHECK(run({"decompose", "T0:"}).status == cli::kDomainError);
}

TEST_CASE("membership and enumeration") {
    auto f = run_json({"member", to_code(bound_T5()), "--m", "1", "--mode", "forb"});
    CHECK(f.json["result"]["member"] == false);
    CHECK(f.json["witness"]["bound"] == "T5");
    auto ix = run_json({"member", to_code(critical_U(3)), "--m", "1"});
    CHECK(ix.json["result"]["member"] == true);
    CHECK(run({"member", "T3:101", "--m", "2", "--mode", "forb"}).status == cli::kDomainError);

    auto e = run({"enumerate", "4"});
    std::string expected;
    for (const auto& cls : enumerate(4).classes) expected += cls.code + "\n";
    CHECK(e.text == expected);

    const std::string path = "test_cli_catalog.txt";
    CHECK(run({"enumerate", "5", "--out", path}).status == cli::kOk);
    std::ifstream file(path);
    CHECK(read_catalog(file).classes.size() == 12);
    std::remove(path.c_str());
}

TEST_CASE("obstructions") {
    auto r = run({"obstructions", "--m", "1", "--max-n", "6"});
    CHECK(r.status == cli::kOk);
    int codes = 0;
    for (std::size_t pos = 0; (pos = r.text.find("\nT", pos)) != std::string::npos; ++pos) ++codes;
    codes += r.text.rfind("T", 0) == 0;
    CHECK(codes == 5);
    auto j = run_json({"obstructions", "--m", "0", "--max-n", "5"});
    REQUIRE(j.json["result"]["bounds"].size() == 1);
    CHECK(j.json["result"]["bounds"][0]["code"] == canonical_code(three_cycle()));
}

TEST_CASE("universal and embed") {
    auto u = run_json({"universal", "--m", "1", "--sample", "default:12", "--k", "3"});
    CHECK(u.json["result"]["points"] == 24);
    CHECK(u.json["result"]["universality"]["passed"] == true);

    const std::string path = "test_cli_sample.txt";
    {
        std::ofstream out(path);
        out << "0 0\n0 1\n1 0\n1 1\n";
    }
    auto s = run_json({"universal", "--m", "1", "--sample", path, "--k", "0"});
    CHECK(s.json["result"]["tournament"] == "T4:111110");
    std::remove(path.c_str());
    CHECK(run({"universal", "--m", "1", "--sample", "default:x"}).status == cli::kParseError);

    auto e = run({"embed", "T3:101", to_code(critical_U(2))});
    CHECK(e.text.rfind("embeds: yes", 0) == 0);
    CHECK(run({"embed", "T3:101", "T4:111111"}).text == "embeds: no\n");
}

TEST_CASE("count") {
    auto r = run({"count", "--n", "3", "--N", "2"});
    CHECK(r.text == "count: 8\nbound: 48\nholds: yes\n");
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).status == cli::kParseError);
    CHECK(run({"frobnicate"}).status == cli::kParseError);
    CHECK(run({"index"}).status == cli::kParseError);
    CHECK(run({"index", "T3:12"}).status == cli::kParseError);
    CHECK(run({"--help"}).status == cli::kOk);
    CHECK(run({"count", "--n", "3", "--N", "0"}).status == cli::kDomainError);
}

TEST_CASE("jobs flag does not change results") {
    auto a = run({"index-all", "6"});
    auto b = run({"index-all", "6", "--jobs", "3"});
    CHECK(a.text == b.text);
}
