#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(HYPERHARM_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "hyperharm_test_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("check prints both sides and exits by verdict") {
    const Run t = run("check t --u 4 --n 2");
    CHECK(t.status == 0);
    CHECK(t.out.find("lhs:     6\n") != std::string::npos);
    CHECK(t.out.find("rhs:     6\n") != std::string::npos);
    CHECK(t.out.find("verdict: pass") != std::string::npos);

    const Run thm = run("check theorem --m 1 --v 4 --n 1 --p 0,0,0,0 --format json");
    CHECK(thm.status == 0);
    const auto j = nlohmann::json::parse(thm.out);
    CHECK(j["lhs"] == "4");
    CHECK(j["rhs"] == "4");

    const Run d = run("check deriv --n 2 --r 2");
    CHECK(d.status == 0);
    CHECK(d.out.find("lhs:     3/2") != std::string::npos);
    CHECK(d.out.find("rhs:     3/2") != std::string::npos);

    const Run pre = run("check pre-derivative --m 1 --v 4 --n 1 --p 0,0,0,0");
    CHECK(pre.status == 0);
    CHECK(pre.out.find("lhs dual (value, deriv): (0, 4)") != std::string::npos);

    CHECK(run("check example:g --b 0 --c 0 --d 0 --e 0 --n 1").status == 3);
    CHECK(run("check whipple --a 1 --p 1/2,1/3,1/5,1/7 --n 3").status == 0);
    CHECK(run("check andrews --m 2 --a 1 --p 1/2,1/3,1/5,1/7,1/11,1/13 --n 2").status == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").status == 2);
    CHECK(run("check t --u 4").status == 0);  // n defaults to 0
    CHECK(run("check t --n 2").status == 2);
    CHECK(run("check theorem --m 1 --v 4 --n 1 --p 0,0,0").status == 2);
    CHECK(run("verify nosuchfamily").status == 2);
    CHECK(run("verify t --u-min 1 --u-max 2 --format xml").status == 2);
    CHECK(run("verify t --u-min 1 --u-max 2 --workers 0").status == 2);
    CHECK(run("check whipple --a 1/0 --p 1,1,1,1 --n 1").status == 2);
    CHECK(run("check theorem --m 1 --v 4 --n 1 --p 0,x,0,0").status == 2);
}

TEST_CASE("verify exit status") {
    const Run t = run("verify t --u-min -6 --u-max 10 --n-max 12 --format json");
    CHECK(t.status == 0);
    const auto arr = nlohmann::json::parse(t.out);
    CHECK(arr.size() == 16 * 13);

    const Run thm = run("verify theorem --m 1 --n-max 0 --format json");
    CHECK(thm.status == 0);
    for (const auto& rec : nlohmann::json::parse(thm.out)) {
        CHECK(rec["lhs"] == "1");
        CHECK(rec["rhs"] == "1");
    }

    const Run b = run("verify example:b --b 1 --c 1 --n 3 --format json");
    CHECK(b.status == 0);
    const auto rec = nlohmann::json::parse(b.out).at(0);
    CHECK(rec["lhs"] == "0");
    CHECK(rec["rhs"] == "0");

    // Inapplicable instances do not fail a sweep.
    const Run g = run("verify example:g --param-max 2 --n-max 3");
    CHECK(g.status == 0);
    CHECK(g.out.find("inapplicable: 0,") == std::string::npos);

    CHECK(run("verify t --u-min 1 --u-max 3 --n-max 3 --inject-rhs-fault").status == 1);
}

TEST_CASE("human summary and csv header") {
    const Run h = run("verify t --u-min 1 --u-max 2 --n-max 1");
    CHECK(h.out.find("families: 1, instances: 4, pass: 4, inapplicable: 0, fail: 0\n") != std::string::npos);
    const Run c = run("verify t --u-min 1 --u-max 1 --n-max 0 --format csv");
    CHECK(c.out == "family,params,lhs,rhs,verdict,diagnostic\r\nt,\"{\"\"u\"\":1,\"\"n\"\":0}\",1,1,pass,\r\n");
    const Run nd = run("verify t --u-min 1 --u-max 1 --n-max 2 --format json --ndjson");
    CHECK(std::count(nd.out.begin(), nd.out.end(), '\n') == 3);
}

TEST_CASE("fixtures: counts, determinism and round trip") {
    const auto first = scratch("t_first.json");
    const auto second = scratch("t_second.json");
    REQUIRE(run("fixtures t --u-min -2 --u-max 4 --n-min 1 --n-max 5 --out " + first.string()).status == 0);
    REQUIRE(run("fixtures t --u-min -2 --u-max 4 --n-min 1 --n-max 5 --workers 3 --out " + second.string()).status ==
            0);
    const auto records = nlohmann::json::parse(slurp(first));
    CHECK(records.size() == 5 * 6);
    for (const auto& r : records)
        CHECK(r["verdict"] == "pass");
    CHECK(slurp(first) == slurp(second));

    CHECK(run("verify --fixtures-in " + first.string()).status == 0);

    const auto w1 = scratch("w1.json");
    const auto w2 = scratch("w2.json");
    REQUIRE(run("fixtures whipple --count 10 --n-max 5 --seed 42 --out " + w1.string()).status == 0);
    REQUIRE(run("fixtures whipple --count 10 --n-max 5 --seed 42 --out " + w2.string()).status == 0);
    CHECK(slurp(w1) == slurp(w2));
    CHECK(run("verify --fixtures-in " + w1.string()).status == 0);

    const auto empty = scratch("empty.json");
    REQUIRE(run("fixtures t --u-min 1 --u-max 0 --out " + empty.string()).status == 0);
    CHECK(slurp(empty) == "[]\n");
    CHECK(nlohmann::json::parse(slurp(empty)).empty());
}

TEST_CASE("fixtures: tampered corpus fails re-verification") {
    const auto path = scratch("tampered.json");
    REQUIRE(run("fixtures t --u-min 3 --u-max 4 --n-max 3 --out " + path.string()).status == 0);
    auto records = nlohmann::json::parse(slurp(path));
    records[2]["rhs"] = "12345";
    std::ofstream(path) << records.dump();
    CHECK(run("verify --fixtures-in " + path.string()).status == 1);
    CHECK(run("verify --fixtures-in " + scratch("missing.json").string()).status == 1);
}
