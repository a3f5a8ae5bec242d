#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wps/cli.hpp"
#include "wps/count.hpp"

using namespace wps;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> const & args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("constant command prints the Schanuel value")
{
    auto r = cli({"constant", "--field", "Q", "--weights", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.21585420370805") != std::string::npos);
    CHECK(r.out.find("h             = 1") != std::string::npos);
}

TEST_CASE("constant rejects non-well-formed weights naming the subset")
{
    auto r = cli({"constant", "--field", "Q", "--weights", "2,2,3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not well-formed") != std::string::npos);
    CHECK(r.err.find("{2,2}") != std::string::npos);
}

TEST_CASE("constant in both product modes")
{
    auto lemma = cli({"constant", "--field", "Q", "--product", "1,1:1,1",
                      "--mode", "lemma-derived"});
    CHECK(lemma.code == 0);
    CHECK(lemma.out.find("1.4783") != std::string::npos);
    auto printed = cli({"constant", "--field", "Q", "--product", "1,1:1,1",
                        "--mode", "as-printed"});
    CHECK(printed.code == 0);
    CHECK(printed.out.find("0.7391") != std::string::npos);
}

TEST_CASE("count command")
{
    auto r = cli({"count", "--field", "Q", "--weights", "1,1", "--T", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count = 4") != std::string::npos);

    auto q = cli({"count", "--field", "Q(i)", "--weights", "1,1", "--T", "1",
                  "--classes"});
    CHECK(q.code == 0);
    CHECK(q.out.find("count = 6") != std::string::npos);
    CHECK(q.out.find("class (1): 6") != std::string::npos);

    auto m = cli({"count", "--field", "Q", "--weights", "1,1,2", "--T", "1",
                  "--method", "moebius"});
    CHECK(m.code == 0);
    CHECK(m.out.find("count = 14") != std::string::npos);
}

TEST_CASE("count with open constraint")
{
    auto r = cli({"count", "--field", "Q", "--weights", "1,1,2", "--T", "4",
                  "--open", "x1!=0"});
    CHECK(r.code == 0);
    auto full =
        cli({"count", "--field", "Q", "--weights", "1,1,2", "--T", "4"});
    CHECK(full.code == 0);
    // the open count is strictly smaller than the full count here
    CHECK(r.out != full.out);
}

TEST_CASE("exit codes for bad input and budget")
{
    CHECK(cli({"count", "--field", "Z", "--weights", "1,1", "--T", "1"})
              .code == 2);
    CHECK(cli({"count", "--field", "Q", "--weights", "1,1", "--T", "0"})
              .code == 2);
    CHECK(cli({"count", "--field", "Q", "--weights", "2,4", "--T", "5"})
              .code == 2);
    CHECK(cli({"count", "--field", "Q", "--weights", "1,1", "--T", "1",
               "--method", "bogus"})
              .code == 2);
    CHECK(cli({"bogus-subcommand"}).code == 2);
    auto b = cli({"count", "--field", "Q", "--weights", "1,1", "--T", "1e6",
                  "--budget", "1000"});
    CHECK(b.code == 3);
    CHECK(b.err.find("budget") != std::string::npos);
}

TEST_CASE("sweep CSV schema is stable")
{
    auto r = cli({"sweep", "--field", "Q", "--weights", "1,1", "--grid",
                  "1:16:2"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "T,count,predicted,ratio");
    int rows = 0;
    std::string line;
    std::vector<unsigned long long> counts;
    while (std::getline(is, line)) {
        ++rows;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        counts.push_back(std::stoull(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    CHECK(rows == 5);
    // counts column matches direct count calls
    FieldData F = make_rational_field();
    CountQuery q;
    q.field = F.tag();
    q.weights = {Weight({1, 1})};
    q.divisor = make_divisor({1});
    for (int i = 0; i < 5; ++i) {
        q.bound = Rat(1LL << i);
        CHECK(counts[static_cast<size_t>(i)] ==
              run_count(F, q, {1u << 30, 0}).count);
    }
}

TEST_CASE("count JSON embeds a reproducible manifest")
{
    auto r = cli({"count", "--field", "Q", "--weights", "1,1,2", "--T", "6",
                  "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("manifest").at("command") == "count");
    CHECK(j.at("manifest").at("T") == "6");
    auto count = j.at("result").at("count").get<unsigned long long>();

    // replay from the manifest file reproduces the identical count
    std::string path = "/tmp/wps_manifest_test.json";
    {
        std::ofstream f(path);
        f << r.out;
    }
    auto rr = cli({"replay", path});
    REQUIRE(rr.code == 0);
    CHECK(rr.out.find("count = " + std::to_string(count)) !=
          std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("volume command and MC reproducibility via replay")
{
    auto r = cli({"volume", "--frame", "rational", "--weights", "1,1,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("closed form = 8") != std::string::npos);

    // randomness requires an explicit seed
    auto noseed = cli({"volume", "--frame", "complex", "--weights", "1,1",
                       "--mc", "20000"});
    CHECK(noseed.code == 2);

    auto mc = cli({"volume", "--frame", "complex", "--weights", "1,1",
                   "--mc", "20000", "--seed", "7", "--json"});
    REQUIRE(mc.code == 0);
    json j = json::parse(mc.out);
    double est = j.at("result").at("estimate").get<double>();
    auto hits = j.at("result").at("hits").get<unsigned long long>();

    std::string path = "/tmp/wps_volume_manifest.json";
    {
        std::ofstream f(path);
        f << mc.out;
    }
    auto rr = cli({"replay", path});
    REQUIRE(rr.code == 0);
    CHECK(rr.out.find("hits = " + std::to_string(hits)) !=
          std::string::npos);
    std::remove(path.c_str());

    // real-quadratic frame needs --R
    CHECK(cli({"volume", "--frame", "real-quadratic", "--weights", "1,2"})
              .code == 2);
    CHECK(est == doctest::Approx(9.8696).epsilon(0.05));
}

TEST_CASE("sweep JSON round trip reproduces identical counts")
{
    auto r = cli({"sweep", "--field", "Q", "--weights", "1,1,2", "--grid",
                  "2:8:2", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    auto rows = j.at("rows");
    REQUIRE(rows.size() == 3);

    std::string path = "/tmp/wps_sweep_manifest.json";
    {
        std::ofstream f(path);
        f << r.out;
    }
    auto rr = cli({"replay", path});
    REQUIRE(rr.code == 0);
    // the replayed CSV carries the same counts
    std::istringstream is(rr.out);
    std::string line;
    std::getline(is, line); // header
    for (size_t i = 0; i < rows.size(); ++i) {
        std::getline(is, line);
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        CHECK(std::stoull(line.substr(c1 + 1, c2 - c1 - 1)) ==
              rows[i].at("count").get<unsigned long long>());
    }
    std::remove(path.c_str());
}

TEST_CASE("product count through the CLI defaults to the anticanonical "
          "divisor")
{
    auto r = cli({"count", "--field", "Q", "--product", "1,1:1,1", "--T",
                  "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count = 16") != std::string::npos);
    // moebius is a single-space method
    CHECK(cli({"count", "--field", "Q", "--product", "1,1:1,1", "--T", "1",
               "--method", "moebius"})
              .code == 2);
}

TEST_CASE("point command canonicalizes literals")
{
    auto r = cli({"point", "--field", "Q", "--weights", "1,1,2", "--point",
                  "4,8,16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("canonical  = 1,2,1") != std::string::npos);
    CHECK(r.out.find("size       = 2") != std::string::npos);

    auto g = cli({"point", "--field", "Q(i)", "--weights", "1,2", "--point",
                  "1+w,2"});
    CHECK(g.code == 0);

    auto f = cli({"point", "--field", "d=5", "--weights", "1,1", "--point",
                  "2,1+w"});
    CHECK(f.code == 0);
    CHECK(f.out.find("content    = <2, 1+w>") != std::string::npos);

    CHECK(cli({"point", "--field", "Q", "--weights", "1,1", "--point",
               "1,2,3"})
              .code == 2);
    CHECK(cli({"point", "--field", "Q", "--weights", "1,1", "--point", "0,0"})
              .code == 2);
}

TEST_CASE("help exits zero")
{
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code == 2); // a subcommand is required
}
