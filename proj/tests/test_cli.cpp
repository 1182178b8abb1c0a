#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using json = nlohmann::json;

namespace {
    struct Run {
        int status;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args, const std::string & input = {}) -> Run
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        int status = trc::cli::run(args, in, out, err);
        return {status, out.str(), err.str()};
    }

    auto lines(const std::string & s) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in(s);
        for (std::string line; std::getline(in, line);)
            out.push_back(line);
        return out;
    }

    auto temp_file(const std::string & name, const std::string & content) -> std::string
    {
        auto path = std::filesystem::temp_directory_path() / ("trc_test_" + name);
        std::ofstream(path) << content;
        return path.string();
    }
}

TEST_SUITE("cli") {

TEST_CASE("compute a family member")
{
    auto r = run({"compute", "--family", "cycle:5", "--mode", "search"});
    REQUIRE(r.status == 0);
    auto rec = json::parse(r.out);
    CHECK(rec["n"] == 5);
    CHECK(rec["m"] == 5);
    CHECK(rec["c_tr"] == 3);
    CHECK(rec["gamma_tr"] == 3);
    CHECK(rec["d_tr"] == 1);
    CHECK(rec["d_t"] == 1);
    CHECK(rec["girth"] == 5);
    CHECK(rec["diameter"] == 2);
    CHECK(rec["exhaustive"] == true);
    CHECK(rec["witness"].size() == 3);
    CHECK(rec["bounds"].is_array());
}

TEST_CASE("compute in oracle mode")
{
    auto r = run({"compute", "--family", "figure1", "--mode", "oracle", "--no-witness"});
    REQUIRE(r.status == 0);
    auto rec = json::parse(r.out);
    CHECK(rec["c_tr"] == 4);
    CHECK_FALSE(rec.contains("witness"));
}

TEST_CASE("compute in bounds mode adds the constructive partition")
{
    auto r = run({"compute", "--family", "cycle:4", "--mode", "bounds"});
    REQUIRE(r.status == 0);
    auto rec = json::parse(r.out);
    CHECK(rec["constructive"].size() == 4);
}

TEST_CASE("compute from graph6 on stdin")
{
    // K_2 plus an isolated vertex, then C_3
    auto r = run({"compute", "--graph6", "-"}, "BO\n\nBw\n");
    REQUIRE(r.status == 0);
    auto recs = lines(r.out);
    REQUIRE(recs.size() == 2);
    auto first = json::parse(recs[0]);
    CHECK(first["c_tr"] == 0);
    CHECK(first["gamma_tr"].is_null());
    CHECK(first["d_tr"].is_null());
    CHECK(first["diameter"].is_null());
    CHECK(json::parse(recs[1])["c_tr"] == 2);
}

TEST_CASE("compute reports parse errors with their line")
{
    auto r = run({"compute", "--graph6", "-"}, "Bw\nB\n");
    CHECK(r.status == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(lines(r.out).size() == 1);
}

TEST_CASE("compute from files")
{
    auto edges = temp_file("c4.edges", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    auto r = run({"compute", "--edges", edges});
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["c_tr"] == 4);

    auto bad = temp_file("bad.edges", "3 2\n0 1\n1 7\n");
    auto b = run({"compute", "--edges", bad});
    CHECK(b.status == 2);
    CHECK(b.err.find(":3:") != std::string::npos);

    auto g6 = temp_file("two.g6", "Ch\nD]o\n");
    auto g = run({"compute", "--graph6", g6, "--no-witness"});
    REQUIRE(g.status == 0);
    CHECK(lines(g.out).size() == 2);

    CHECK(run({"compute", "--graph6", "/nonexistent/file.g6"}).status == 2);
}

TEST_CASE("compute input errors and caps")
{
    CHECK(run({"compute"}).status == 2);
    CHECK(run({"compute", "--family", "cycle:5", "--graph6", "-"}).status == 2);
    CHECK(run({"compute", "--family", "wheel:5"}).status == 2);
    CHECK(run({"compute", "--family", "cycle:5", "--mode", "fast"}).status == 2);
    CHECK(run({"compute", "--family", "cycle:5", "--format", "csv"}).status == 2);
    CHECK(run({"compute", "--family", "cycle:13"}).status == 3);
    CHECK(run({"compute", "--family", "cycle:5", "--max-n", "40"}).status == 3);
    CHECK(run({"compute", "--family", "cycle:8", "--max-n", "6"}).status == 3);
}

TEST_CASE("verify")
{
    auto c3 = run({"verify", "--suite", "cycles", "--max-n", "3"});
    REQUIRE(c3.status == 0);
    auto doc = json::parse(c3.out);
    CHECK(doc["summary"]["text"] == "1/1");
    CHECK(doc["results"][0]["expected"] == "2");

    auto csv = run({"verify", "--suite", "paths", "--max-n", "6", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(csv.out.starts_with("claim_id,"));

    auto md = run({"verify", "--suite", "named", "--format", "markdown"});
    CHECK(md.status == 0);
    CHECK(md.out.find("(pass)") != std::string::npos);

    CHECK(run({"verify", "--suite", "bogus"}).status == 2);
    CHECK(run({"verify", "--suite", "paths", "--format", "xml"}).status == 2);
    CHECK(run({"verify", "--suite", "catalog", "--max-n", "7"}).status == 3);
}

TEST_CASE("verify output is byte-identical across runs")
{
    auto a = run({"verify", "--suite", "cycles", "--max-n", "8"});
    auto b = run({"verify", "--suite", "cycles", "--max-n", "8"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("family")
{
    auto r = run({"family", "path:4", "cycle:8", "kbip:2,3"});
    REQUIRE(r.status == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"Ch", "GhCGKC", "D]o"});
    CHECK(run({"family", "wheel:4"}).status == 2);
    CHECK(run({"family"}).status == 2);
}

TEST_CASE("usage")
{
    CHECK(run({}).status == 2);
    CHECK(run({"--help"}).status == 0);
    CHECK(run({"frobnicate"}).status == 2);
}

}
