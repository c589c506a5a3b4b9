#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pcond/cli.hpp"
#include "pcond/isometry.hpp"
#include "pcond/tables.hpp"

using namespace pcond;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result pcond_run(std::vector<std::string> args) {
    args.insert(args.begin(), {"--corpus", PCOND_DATA_DIR});
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("pcond_cli_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("conductors A5 p=5") {
    auto r = pcond_run({"conductors", "--group", "A5", "--prime", "5", "--json"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    std::vector<std::pair<int, int>> got;
    for (const auto& c : doc["characters"]) got.emplace_back(c["conductor"], c["p_parts"]["5"]);
    CHECK(got == std::vector<std::pair<int, int>>{{1, 1}, {5, 5}, {5, 5}, {1, 1}, {1, 1}});

    auto text = pcond_run({"conductors", "--group", "A5", "--prime", "5"});
    CHECK(text.out.find("c_5") != std::string::npos);
    auto csv = pcond_run({"conductors", "--group", "A5", "--prime", "5", "--csv"});
    CHECK(csv.out.rfind("group,chi,degree,conductor,c_5\n", 0) == 0);
}

TEST_CASE("verify --all passes and is independent of --jobs") {
    auto one = pcond_run({"verify", "--all", "--jobs", "1", "--json"});
    auto many = pcond_run({"verify", "--all", "--jobs", "4", "--json"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    auto doc = json::parse(one.out);
    CHECK(doc["pass"] == true);
    std::size_t expected = 0;
    for (const auto& e : read_manifest(PCOND_DATA_DIR)) expected += 5 * e.primes.size();
    CHECK(doc["reports"].size() == expected);

    auto text = pcond_run({"verify", "--all"});
    CHECK(text.out.find("summary: " + std::to_string(expected) + " reports, 0 failed") != std::string::npos);
}

TEST_CASE("seed changes sampled characters only") {
    auto a = pcond_run({"verify", "--group", "S4", "--prime", "2", "--check", "gendec-conductor", "--json", "--seed", "1"});
    auto b = pcond_run({"verify", "--group", "S4", "--prime", "2", "--check", "gendec-conductor", "--json", "--seed", "2"});
    auto a2 = pcond_run({"verify", "--group", "S4", "--prime", "2", "--check", "gendec-conductor", "--json", "--seed", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == a2.out);
    CHECK(a.out != b.out);
}

TEST_CASE("usage errors exit 3") {
    CHECK(pcond_run({}).code == 3);
    CHECK(pcond_run({"frobnicate"}).code == 3);
    CHECK(pcond_run({"conductors"}).code == 3);
    CHECK(pcond_run({"conductors", "--group", "nope"}).code == 3);
    CHECK(pcond_run({"verify"}).code == 3);
    CHECK(pcond_run({"gendec", "--group", "S3", "--prime", "4"}).code == 3);
    CHECK(pcond_run({"conductors", "--group", "S3", "--json", "--csv"}).code == 3);
    CHECK(pcond_run({"isometry-search", "--group", "A5", "--prime", "5", "--target", "D10", "--bound", "3"}).code == 3);
    CHECK(pcond_run({"isometry-search", "--group", "A5", "--prime", "5", "--target", "S3"}).code == 3);
    auto r = pcond_run({"verify"});
    CHECK(r.err.find("usage: pcond") != std::string::npos);
    CHECK(pcond_run({"--help"}).code == 0);
}

TEST_CASE("malformed dataset exits 2 with the field path") {
    auto dir = scratch("bad");
    for (const auto& f : std::filesystem::directory_iterator(PCOND_DATA_DIR))
        std::filesystem::copy_file(f.path(), dir / f.path().filename());
    {
        std::ifstream in(dir / "S3.json");
        std::stringstream buf;
        buf << in.rdbuf();
        auto s = buf.str();
        s.replace(s.find("\"powermaps\""), 11, "\"pm\"");
        std::ofstream(dir / "S3.json") << s;
    }
    std::ostringstream out, err;
    int code = cli::run({"--corpus", dir.string(), "validate"}, out, err);
    CHECK(code == 2);
    CHECK(err.str().find("classes[0].powermaps") != std::string::npos);
    CHECK(out.str().find("ok     A5") != std::string::npos);
    code = cli::run({"--corpus", dir.string(), "conductors", "--group", "S3"}, out, err);
    CHECK(code == 2);
    CHECK(cli::run({"--corpus", (dir / "missing").string(), "validate"}, out, err) == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("validate the shipped corpus") {
    auto r = pcond_run({"validate", "--json"});
    CHECK(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc.size() == read_manifest(PCOND_DATA_DIR).size());
    for (const auto& e : doc) CHECK(e["ok"] == true);
}

TEST_CASE("blocks and gendec") {
    auto b = pcond_run({"blocks", "--group", "S3", "--json"});
    REQUIRE(b.code == 0);
    auto doc = json::parse(b.out);
    // p=2: {1, sign} and the defect-0 degree-2 character; p=3: one block
    CHECK(doc["primes"][0]["prime"] == 2);
    CHECK(doc["primes"][0]["blocks"].size() == 2);
    CHECK(doc["primes"][1]["blocks"].size() == 1);

    auto g = pcond_run({"gendec", "--group", "S3", "--prime", "2", "--json"});
    REQUIRE(g.code == 0);
    auto gd = json::parse(g.out);
    REQUIRE(gd["sections"].size() == 2);
    CHECK(gd["sections"][1]["u"] == "2a");
    // chi(u) for u = 2a on the trivial, sign and degree-2 characters
    CHECK(gd["sections"][1]["d"] == json::parse(R"([["1"],["-1"],["0"]])"));
    auto csv = pcond_run({"gendec", "--group", "S3", "--prime", "2", "--csv"});
    CHECK(csv.out.find("S3,2,2a,2,0,0\n") != std::string::npos);
}

TEST_CASE("isometry-search certificates pass isometry-check") {
    auto r = pcond_run({"isometry-search", "--group", "A5", "--prime", "5", "--target", "D10", "--json", "--jobs", "2"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["candidates"] == 384);
    auto ds = load_dataset(std::string(PCOND_DATA_DIR) + "/A5.json");
    auto d10 = load_dataset(std::string(PCOND_DATA_DIR) + "/D10.json");
    auto lib = search_perfect_isometries(block_ref(*ds, 5, 0), block_ref(*d10, 5, 0));
    REQUIRE(doc["isometries"].size() == lib.size());
    REQUIRE(!lib.empty());

    auto dir = scratch("certs");
    std::vector<std::string> args{"isometry-check"};
    for (std::size_t i = 0; i < lib.size(); ++i) {
        auto& c = doc["isometries"][i];
        CHECK(c["permutation"].get<std::vector<int>>() == lib[i].permutation);
        CHECK(c["conductor_preserved"] == true);
        CHECK(c["l0_preserved"] == true);
        auto f = dir / ("cert" + std::to_string(i) + ".json");
        std::ofstream(f) << c.dump();
        args.push_back(f.string());
    }
    auto check = pcond_run(args);
    CHECK(check.code == 0);

    // scrambled: identity permutation with all signs +1 is not perfect
    auto bad = doc["isometries"][0];
    bad["permutation"] = {0, 1, 2, 3};
    bad["signs"] = {1, 1, 1, 1};
    std::ofstream(dir / "bad.json") << bad.dump();
    auto rb = pcond_run({"isometry-check", (dir / "bad.json").string()});
    CHECK(rb.code == 1);
    CHECK(rb.out.find("not perfect") != std::string::npos);

    std::ofstream(dir / "broken.json") << R"({"source":{"group":"A5"}})";
    CHECK(pcond_run({"isometry-check", (dir / "broken.json").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("restrict-check") {
    auto r = pcond_run({"restrict-check", "--group", "A5", "--prime", "5", "--json"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    const auto& recs = doc["reports"][0]["records"];
    std::vector<std::string> lhs;
    for (const auto& x : recs)
        if (x["character"].get<std::string>().find("chi") != std::string::npos) lhs.push_back(x["lhs"]);
    CHECK(lhs == std::vector<std::string>{"1", "5", "5", "1", "1"});
    auto na = pcond_run({"restrict-check", "--group", "C4"});
    CHECK(na.code == 0);
    CHECK(na.out.find("n/a") != std::string::npos);
}
