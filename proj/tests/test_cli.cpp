#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = lucaszeck::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("decompose --all lists both partitions of 5") {
    const auto r = run({"decompose", "5", "--seq", "lucas", "--all"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"n\tseq\tindices\tvalues", "5\tlucas\t1,3\t1,4",
                                                   "5\tlucas\t0,2\t2,3"});
}

TEST_CASE("decompose canonical forms") {
    CHECK(lines(run({"decompose", "1", "--seq", "fib"}).out).back() == "1\tfib\t2\t1");
    CHECK(lines(run({"decompose", "12", "--seq", "lucas"}).out).back() == "12\tlucas\t1,5\t1,11");
    CHECK(lines(run({"decompose", "0", "--all"}).out).back() == "0\tlucas\t-\t-");
}

TEST_CASE("decompose JSON round-trips") {
    const auto r = run({"--format", "json", "decompose", "5", "--all"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["v"] == 1);
    CHECK(j["cmd"] == "decompose");
    CHECK(j["result"]["count"] == 2);
    CHECK(j["result"]["partitions"][1]["indices"] == nlohmann::json::array({0, 2}));
    CHECK(j["status"] == "ok");
    CHECK(nlohmann::json::parse(j.dump()) == j);
    // Format may also follow the subcommand.
    CHECK(run({"decompose", "5", "--format", "json"}).out == run({"--format", "json", "decompose", "5"}).out);
}

TEST_CASE("custom sequences") {
    const auto r = run({"decompose", "10", "--seq", "custom:1,1,3,2", "--all"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() >= 2);
    CHECK(run({"decompose", "10", "--seq", "custom:1,1,0,1", "--all"}).code == 2);
    CHECK(run({"decompose", "10", "--seq", "custom:1,1,2"}).code == 2);
    CHECK(run({"decompose", "10", "--seq", "custom:1,1,3,2"}).code == 2);
    CHECK(run({"decompose", "10", "--seq", "tribonacci"}).code == 2);
}

TEST_CASE("usage errors exit 2, overflow exits 3") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"decompose"}).code == 2);
    CHECK(run({"decompose", "0"}).code == 2);
    CHECK(run({"decompose", "5", "--all", "--canonical"}).code == 2);
    CHECK(run({"--format", "xml", "kset", "--count", "3"}).code == 2);
    CHECK(run({"kset", "--count", "0"}).code == 2);
    const auto overflow = run({"term", "91"});
    CHECK(overflow.code == 3);
    CHECK(overflow.err.find("overflow") != std::string::npos);
    CHECK(run({"term", "90"}).code == 0);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sequence commands print one value per line") {
    CHECK(run({"zset", "0", "--count", "4"}).out == "2\n6\n9\n13\n");
    CHECK(run({"kset", "--count", "3"}).out == "5\n12\n16\n");
    CHECK(run({"zset", "3", "--count", "3"}).out == "4\n5\n6\n");
    CHECK(run({"qseq", "0", "--count", "5"}).out == "2\n6\n9\n13\n17\n");
    const auto j = nlohmann::json::parse(run({"--format", "json", "kset", "--count", "3"}).out);
    CHECK(j["result"]["values"] == nlohmann::json::array({5, 12, 16}));
}

TEST_CASE("sequence output matches the golden files") {
    const std::string dir = LUCASZECK_GOLDEN_DIR;
    CHECK(run({"zset", "0", "--count", "100"}).out == read_file(dir + "/z0.txt"));
    CHECK(run({"zset", "1", "--count", "100"}).out == read_file(dir + "/z1.txt"));
    CHECK(run({"zset", "2", "--count", "100"}).out == read_file(dir + "/z2.txt"));
    CHECK(run({"kset", "--count", "100"}).out == read_file(dir + "/kset.txt"));
}

TEST_CASE("density") {
    const auto r = run({"density", "--max", "100"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(1) == "formula\t100\t17\t17/100\t0.17000\t17.000%\t0.000820393250");
    CHECK(lines(run({"density", "--max", "1"}).out).at(1).rfind("formula\t1\t0\t", 0) == 0);

    const auto both = run({"density", "--max", "10000", "--mode", "both"});
    CHECK(both.code == 0);
    const auto rows = lines(both.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].rfind("formula\t10000\t1708\t", 0) == 0);
    CHECK(rows[2].rfind("enum\t10000\t1708\t", 0) == 0);

    CHECK(run({"density"}).code == 2);
    CHECK(run({"density", "--max", "10", "--mode", "fast"}).code == 2);
}

TEST_CASE("density --table4 matches the golden file bit for bit") {
    const auto r = run({"density", "--table4"});
    CHECK(r.code == 0);
    CHECK(r.out == read_file(std::string(LUCASZECK_GOLDEN_DIR) + "/table4.tsv"));
    const auto j = nlohmann::json::parse(run({"--format", "json", "density", "--table4"}).out);
    CHECK(j["result"]["golden_match"] == true);
    CHECK(j["result"]["rows"].size() == 6);
}

TEST_CASE("verify suites") {
    auto status = [](const Result& r) { return lines(r.out).at(1); };
    const auto m1 = run({"verify", "--suite", "theorem-m1", "--max", "10000"});
    CHECK(m1.code == 0);
    CHECK(status(m1) == "theorem-m1\tPASS\tmax_count=2 min_count=1");
    CHECK(run({"verify", "--suite", "lemma3", "--max", "20"}).code == 0);
    CHECK(run({"verify", "--suite", "lemma5", "--max", "10"}).code == 0);
    CHECK(run({"verify", "--suite", "gaps", "--max", "200"}).code == 0);
    CHECK(run({"verify", "--suite", "golden", "--max", "100000"}).code == 0);
    CHECK(run({"verify", "--suite", "lemma3", "--max", "99"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);

    const auto j = nlohmann::json::parse(run({"--format", "json", "verify", "--suite", "lemma5"}).out);
    CHECK(j["result"]["passed"] == true);
    CHECK(j["inputs"]["max"] == 10);
}

TEST_CASE("auxiliary commands") {
    CHECK(run({"alpha", "--precision", "5"}).out == "0.17082\n");
    CHECK(run({"golden", "13"}).out == "BABBABABBABBA\n");
    CHECK(run({"sums", "2"}).out == "0,1,2,3,5\t0..5 except 4\tmatch\n");
    CHECK(run({"term", "5"}).out == "11\n");
}

}  // TEST_SUITE
