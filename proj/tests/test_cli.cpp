#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arcpat/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json result() const { return json::parse(out).at("result"); }
    json manifest() const { return json::parse(out).at("manifest"); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = arcpat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Unsets the cache variable for tests that should not touch a file.
struct NoCache {
    NoCache() { unsetenv(arcpat::cli::kCacheEnv); }
};

struct TempCache {
    fs::path path;
    TempCache() {
        path = fs::temp_directory_path() / ("arcpat-test-cache-" + std::to_string(::getpid()) + ".json");
        fs::remove(path);
        setenv(arcpat::cli::kCacheEnv, path.c_str(), 1);
    }
    ~TempCache() {
        unsetenv(arcpat::cli::kCacheEnv);
        fs::remove(path);
    }
    json read() const {
        std::ifstream in(path);
        return json::parse(in);
    }
    void write(const json& j) const { std::ofstream(path) << j.dump(); }
};

}  // namespace

TEST(Cli, CountByShape) {
    NoCache nc;
    auto o = run({"count", "--family", "matching", "--n", "2", "--avoid", "321", "--by-shape"});
    ASSERT_EQ(o.code, 0) << o.err;
    auto r = o.result();
    EXPECT_EQ(r["total"], "3");
    ASSERT_EQ(r["by_shape"].size(), 2u);
    EXPECT_EQ(r["by_shape"][0]["border"], "EESS");
    EXPECT_EQ(r["by_shape"][0]["count"], "2");
    EXPECT_EQ(r["by_shape"][1]["border"], "ESES");
    EXPECT_EQ(r["by_shape"][1]["count"], "1");
    auto m = o.manifest();
    EXPECT_EQ(m["command"], "count");
    EXPECT_EQ(m["version"], arcpat::cli::kVersion);
    EXPECT_EQ(m["parameters"]["avoid"], "321");
}

TEST(Cli, EmptyPartition) {
    NoCache nc;
    auto o = run({"count", "--family", "partition", "--n", "0", "--avoid", "123"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.result()["total"], "1");
}

TEST(Cli, Series) {
    auto o = run({"series", "--formula", "catalan_v", "--order", "4"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.result()["coefficients"], json({"1", "1", "2", "5", "14"}));
    auto m = run({"series", "--formula", "m312", "--order", "5"});
    EXPECT_EQ(m.result()["coefficients"][5], "570");
}

TEST(Cli, CsvPutsManifestOnStderr) {
    auto o = run({"series", "--formula", "m312", "--order", "3", "--format", "csv"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "n,coefficient\n0,1\n1,1\n2,3\n3,14\n");
    EXPECT_EQ(json::parse(o.err)["command"], "series");
}

TEST(Cli, ResultIsDeterministic) {
    NoCache nc;
    std::vector<std::string> args = {"count", "--family", "matching", "--n", "5", "--avoid", "123,312", "--stat", "valleys"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.result(), b.result());
    auto c = run({"count", "--family", "matching", "--n", "5", "--avoid", "312,123", "--stat", "valleys", "--shards", "3"});
    EXPECT_EQ(a.result(), c.result());
    EXPECT_EQ(a.result()["total"], "364");
}

TEST(Cli, ExitCodes) {
    NoCache nc;
    EXPECT_EQ(run({"count", "--family", "bogus", "--n", "2"}).code, arcpat::cli::usage);
    EXPECT_EQ(run({"nonsense"}).code, arcpat::cli::usage);
    EXPECT_EQ(run({"series", "--formula", "m312", "--order", "9999"}).code, arcpat::cli::resource_cap);
    EXPECT_EQ(run({"count", "--family", "matching", "--n", "40"}).code, arcpat::cli::resource_cap);
    auto bad = run({"delta321", "--placement", "border:EEESSS;rooks:3,2,1"});
    EXPECT_EQ(bad.code, arcpat::cli::usage);
    auto e = json::parse(bad.err);
    EXPECT_EQ(e["error"], "precondition");
    EXPECT_NE(e["message"].get<std::string>().find("Gamma(V_"), std::string::npos);
}

TEST(Cli, Maps) {
    auto d = run({"delta321", "--placement", "border:ES;rooks:1"});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(d.result()["output"]["bottom"], "ES");
    auto back = run({"delta213-inv", "--pair", "ES|ES"});
    ASSERT_EQ(back.code, 0) << back.err;
    auto k = run({"kappa-prime", "--matching", "(1,4)(2)(3,7)(5)(6,8)", "--tau", "321"});
    ASSERT_EQ(k.code, 0) << k.err;
    EXPECT_NE(k.out.find("EEESEESSSS"), std::string::npos);
    auto c = run({"chi", "--perm", "4321"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_NE(c.out.find("ESESESES"), std::string::npos);
}

TEST(Cli, VerifyAndCrossCheck) {
    auto v = run({"verify", "--suite", "tables", "--max-n", "4", "--max-n-partitions", "5"});
    ASSERT_EQ(v.code, 0) << v.err;
    EXPECT_TRUE(v.result()["passed"].get<bool>());
    auto x = run({"cross-check", "--formula", "p312", "--max-n", "7"});
    ASSERT_EQ(x.code, 0) << x.err;
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, arcpat::cli::usage);
}

TEST(Cache, HitsAndAtomicWrite) {
    TempCache cache;
    std::vector<std::string> args = {"count", "--family", "matching", "--n", "4", "--avoid", "132"};
    auto first = run(args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.manifest()["cache_hits"], 0);
    auto j = cache.read();
    EXPECT_EQ(j["format"], "arcpat-cache-1");
    EXPECT_EQ(j["entries"]["matching|132|4|0"], "84");
    for (const auto& e : fs::directory_iterator(cache.path.parent_path()))
        EXPECT_EQ(e.path().string().find(cache.path.string() + "."), std::string::npos) << "leftover " << e.path();

    auto second = run(args);
    EXPECT_EQ(second.manifest()["cache_hits"], 1);
    EXPECT_EQ(second.manifest()["cache_spot_check"], "ok");
    EXPECT_EQ(second.result()["total"], "84");
}

TEST(Cache, SpotCheckDropsBadEntry) {
    TempCache cache;
    cache.write({{"format", "arcpat-cache-1"}, {"entries", {{"matching|132|4|0", "85"}}}});
    auto o = run({"count", "--family", "matching", "--n", "4", "--avoid", "132"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.manifest()["cache_spot_check"], "mismatch");
    EXPECT_EQ(o.result()["total"], "84");
    EXPECT_NE(o.err.find("warning"), std::string::npos);
    EXPECT_EQ(cache.read()["entries"]["matching|132|4|0"], "84");
}

TEST(Cache, UnreadableFileIsAnError) {
    TempCache cache;
    std::ofstream(cache.path) << "not json";
    EXPECT_NE(run({"count", "--family", "matching", "--n", "2"}).code, 0);
}

TEST(Binary, RunsAsAProcess) {
    const char* bin = std::getenv("ARCPAT_CLI");
    if (!bin) GTEST_SKIP() << "ARCPAT_CLI not set";
    std::string cmd = std::string(bin) + " series --formula maps --order 3 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    ASSERT_NE(p, nullptr);
    std::string out;
    char buf[256];
    while (size_t got = fread(buf, 1, sizeof buf, p)) out.append(buf, got);
    int status = pclose(p);
    EXPECT_EQ(WEXITSTATUS(status), 0);
    EXPECT_EQ(json::parse(out)["result"]["coefficients"], json({"1", "2", "9", "54"}));

    std::string cap = std::string(bin) + " series --formula maps --order 9999 >/dev/null 2>&1";
    EXPECT_EQ(WEXITSTATUS(std::system(cap.c_str())), 3);
}
