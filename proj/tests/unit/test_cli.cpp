#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cliffdkp/cli.hpp"

namespace {
struct Run {
    int rc;
    std::string out, err;
};
Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = cliffdkp::cli::run(args, out, err);
    return {rc, out.str(), err.str()};
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dims") {
    const auto r = run({"dims", "--n", "3", "--format", "json"});
    CHECK(r.rc == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "dims");
    CHECK(j["pass"] == true);
    std::vector<std::string> dims;
    for (const auto& x : j["results"])
        dims.push_back(x["detail"]);
    CHECK(dims == std::vector<std::string>{"4", "12", "12", "4"});
}

TEST_CASE("derive-dwh") {
    const auto r = run({"derive-dwh", "--n", "2", "--p", "0", "--H", "1/2*(pi[1]^2+pi[2]^2)+y[]^2"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("Dp[1][1][] + Dp[2][2][] = -2*y[]") != std::string::npos);
    CHECK(r.out.find("Dy[1][] = p[1][]") != std::string::npos);
    CHECK(r.out.find("Dy[2][] = p[2][]") != std::string::npos);
}

TEST_CASE("bracket") {
    const auto r = run({"bracket", "--n", "2", "--p", "1", "--mu", "2", "--G", "y[1]", "--F", "p[2][1]", "--format", "json"});
    CHECK(r.rc == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"][0]["name"] == "bracket");
    CHECK(j["results"][0]["detail"] == "1");
}

TEST_CASE("verify is deterministic") {
    const auto a = run({"verify", "--n", "2", "--suite", "bracket", "--seed", "7", "--format", "json"});
    const auto b = run({"verify", "--n", "2", "--suite", "bracket", "--seed", "7", "--format", "json"});
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["params"]["seed"] == 7);
    CHECK(j["checks_failed"] == 0);
}

TEST_CASE("oracle-check") {
    CHECK(run({"oracle-check", "--n", "2"}).rc == 0);
    CHECK(run({"oracle-check", "--n", "5"}).rc == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).rc == 2);
    CHECK(run({"frobnicate"}).rc == 2);
    CHECK(run({"verify", "--suite", "nonsense"}).rc == 2);
    CHECK(run({"verify", "--n", "0"}).rc == 2);
    CHECK(run({"derive-dwh", "--n", "2", "--p", "3", "--H", "y[]"}).rc == 2);
    CHECK(run({"derive-dwh", "--n", "2", "--H", "y[1"}).rc == 2);
    CHECK(run({"bracket", "--n", "2", "--lambda", "1,2;2,4", "--G", "y[]", "--F", "y[]"}).rc == 2);
    CHECK(run({"bracket", "--n", "2", "--mu", "3", "--G", "y[]", "--F", "y[]"}).rc == 2);
    CHECK(run({"verify", "--n", "2", "--metric", "1,2;3,4"}).rc == 2);
    const auto r = run({"derive-dwh", "--n", "2", "--H", "y[] + + 1"});
    CHECK(r.err.find("byte") != std::string::npos);
}

}
