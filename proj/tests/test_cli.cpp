#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "mdim/enumerate.hpp"
#include "mdim/errors.hpp"
#include "mdim/families.hpp"

using namespace mdim;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "mdim-cli-test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string put(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* kP5 = "5 4\n0 1\n1 2\n2 3\n3 4\n";
const char* kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const char* kC5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";

}  // namespace

TEST_CASE("edge list parsing") {
    std::istringstream ok("# a path\n3 2\n0 1\n\n# middle\n1 2\n");
    CHECK(cli::parse_edge_list(ok).size() == 2);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(cli::parse_edge_list(dup), InputError);
    std::istringstream count("3 3\n0 1\n1 2\n");
    CHECK_THROWS_AS(cli::parse_edge_list(count), InputError);
    std::istringstream range("3 1\n0 3\n");
    CHECK_THROWS_AS(cli::parse_edge_list(range), InputError);
    std::istringstream junk("3 1\n0 x\n");
    CHECK_THROWS_AS(cli::parse_edge_list(junk), InputError);

    std::ostringstream out;
    cli::write_edge_list(out, make_k_path(4, 2).graph);
    CHECK(out.str() == "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
}

TEST_CASE("dim") {
    auto p5 = run({"dim", put("p5.txt", kP5)});
    CHECK(p5.code == cli::kOk);
    CHECK(p5.out == "dim=1 basis=[0]\n");

    auto k4 = run({"dim", put("k4.txt", kK4)});
    CHECK(k4.out.rfind("dim=3", 0) == 0);

    const auto fig1 = run({"gen", "kpath", "--n", "7", "--k", "2"});
    auto f = run({"dim", put("fig1.txt", fig1.out)});
    CHECK(f.out.rfind("dim=2", 0) == 0);

    auto js = run({"dim", put("k4.txt", kK4), "--json", "--table"});
    const auto j = nlohmann::ordered_json::parse(js.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "input", "result", "diagnostics"});
    CHECK(j["result"]["dimension"] == 3);
    CHECK(j["result"]["representations"].size() == 4);

    CHECK(run({"dim", put("split.txt", "4 2\n0 1\n2 3\n")}).code == cli::kBadInput);
    CHECK(run({"dim", put("dup.txt", "3 2\n0 1\n0 1\n")}).code == cli::kBadInput);
    CHECK(run({"dim", (scratch() / "missing.txt").string()}).code == cli::kBadInput);
    CHECK(run({"dim"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("classify") {
    const auto cane = run({"gen", "cane", "--t", "6"});
    auto c = run({"classify", put("cane.txt", cane.out)});
    CHECK(c.code == cli::kOk);
    CHECK(c.out.rfind("member shape=cane", 0) == 0);
    CHECK(c.out.find("witness resolves") != std::string::npos);

    auto cj = run({"classify", put("cane.txt", cane.out), "--json"});
    const auto j = nlohmann::ordered_json::parse(cj.out);
    CHECK(j["result"]["verdict"] == "member");
    CHECK(j["result"]["witness_resolves"] == true);
    CHECK(j["result"]["conditions"].size() == 12);
    CHECK(j["result"]["representations"].size() == 7);

    const auto spec = put("dbl.spec", "spine A 4\nbranch b2-b3 two-path 1\nbranch b2-b3 two-path 1\n");
    const auto dbl = run({"gen", "family-f", spec});
    REQUIRE(dbl.code == cli::kOk);
    auto d = run({"classify", put("dbl.txt", dbl.out), "--json"});
    CHECK(d.code == cli::kOk);
    const auto dj = nlohmann::ordered_json::parse(d.out);
    CHECK(dj["result"]["verdict"] == "non-member");
    CHECK(dj["result"]["conditions"]["c2"] == false);

    CHECK(run({"classify", put("c5.txt", kC5)}).code == cli::kBadInput);

    auto dot = run({"classify", put("cane.txt", cane.out), "--dot"});
    CHECK(dot.out.rfind("graph G {", 0) == 0);
    CHECK(dot.out.find("label=\"a1\"") != std::string::npos);
}

TEST_CASE("gen") {
    const auto fig1 = run({"gen", "kpath", "--n", "7", "--k", "2"});
    CHECK(fig1.code == cli::kOk);
    std::istringstream in(fig1.out);
    const Graph g = cli::parse_edge_list(in);
    CHECK(canonical_code(g) == canonical_code(make_k_path(7, 2).graph));

    const auto cane = run({"gen", "cane", "--t", "6"});
    std::istringstream cin(cane.out);
    const Graph c = cli::parse_edge_list(cin);
    CHECK(c.order() == 7);
    CHECK(canonical_code(c) == canonical_code(make_cane(6).graph));

    const auto top = run({"gen", "family-f", put("top.spec", "spine A 4\nbranch a2-a3 two-path 1\n")});
    CHECK(top.code == cli::kUsage);
    CHECK(top.err.find("c3") != std::string::npos);

    CHECK(run({"gen", "family-f", put("bad.spec", "spine C 4\n")}).code == cli::kUsage);
    CHECK(run({"gen", "cane", "--t", "3"}).code == cli::kUsage);
    CHECK(run({"gen", "kpath", "--n", "2", "--k", "2"}).code == cli::kUsage);
    CHECK(run({"gen", "kpath", "--n", "x", "--k", "2"}).code == cli::kUsage);

    const auto member = run({"gen", "family-f", put("fb.spec", "spine B 5 3\nbranch b3-b4 two-path 2 from b4\n")});
    REQUIRE(member.code == cli::kOk);
    std::istringstream min(member.out);
    const Graph mg = cli::parse_edge_list(min);
    std::ostringstream again;
    cli::write_edge_list(again, mg);
    CHECK(again.str() == member.out);
}

TEST_CASE("enumerate") {
    const auto cache = scratch() / "cache";
    auto three = run({"enumerate", "--n", "3"});
    CHECK(three.out == "n=3 count=1\n");
    auto four = run({"enumerate", "--n", "4"});
    CHECK(four.out == "n=3 count=1\nn=4 count=1\n");

    auto cold = run({"enumerate", "--n", "8", "--cache", cache.string()});
    CHECK(cold.code == cli::kOk);
    CHECK(cold.out.find("n=8 count=39\n") != std::string::npos);
    const auto first = slurp(cache / "2trees-8.codes");
    auto warm = run({"enumerate", "--n", "8", "--cache", cache.string(), "--parallel", "3"});
    CHECK(warm.out == cold.out);
    CHECK(slurp(cache / "2trees-8.codes") == first);

    // A file where the directory should be.
    put("blocker", "x");
    CHECK(run({"enumerate", "--n", "5", "--cache", (scratch() / "blocker").string()}).code == cli::kBadInput);
    CHECK(run({"enumerate", "--n", "2"}).code == cli::kBadInput);
}

TEST_CASE("verify") {
    auto v = run({"verify", "--n-max", "7"});
    CHECK(v.code == cli::kOk);
    CHECK(v.out.find("all campaigns passed") != std::string::npos);

    auto a = run({"verify", "--n-max", "8", "--json"});
    auto b = run({"--parallel", "0", "verify", "--n-max", "8", "--json"});
    CHECK(a.out == b.out);
    const auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(j["result"]["passed"] == true);
    CHECK(j["result"]["campaigns"].size() == 5);
}

TEST_CASE("verify catches an injected c8 fault") {
    auto v = run({"verify", "--n-max", "10", "--c8-threshold", "6"});
    CHECK(v.code == cli::kMismatch);
    CHECK(v.out.find("equivalence") != std::string::npos);
    CHECK(v.out.find("mismatch n=10 code=") != std::string::npos);
}
