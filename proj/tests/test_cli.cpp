#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "topocorr/bundle.hpp"
#include "topocorr/cli.hpp"

using namespace topocorr;
using json = nlohmann::json;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("betti subcommand reproduces the corner values") {
    const CliResult at_corner =
        run({"betti", "--shape", "circle:64", "--fields", "x,y", "--at=-1,-1",
             "--degree", "0"});
    REQUIRE(at_corner.status == 0);
    CHECK(json::parse(at_corner.out)["results"]["betti"] == 0);

    const CliResult diagonal =
        run({"betti", "--shape", "circle:64", "--fields", "x,x", "--at=-1,-1",
             "--degree", "0"});
    REQUIRE(diagonal.status == 0);
    CHECK(json::parse(diagonal.out)["results"]["betti"] == 1);
}

TEST_CASE("bottleneck of a field against itself is zero") {
    const CliResult result = run(
        {"bottleneck", "--shape", "circle:16", "--field-a", "x", "--field-b", "x"});
    REQUIRE(result.status == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["results"]["distance"] == 0.0);
    CHECK(doc["results"]["infinite"] == false);
}

TEST_CASE("identical invocations give byte-identical documents") {
    const std::vector<std::string> args = {
        "topocorr", "--shape", "circle:16",   "--fields", "x,y",
        "--grid-theta", "5",   "--grid-beta", "5",        "--refine", "1"};
    const CliResult first = run(args);
    const CliResult second = run(args);
    REQUIRE(first.status == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("persist emits the diagram of the chosen field") {
    const CliResult result =
        run({"persist", "--shape", "circle:16", "--field", "x", "--degree", "0"});
    REQUIRE(result.status == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["results"]["essential_births"] == json::array({-1.0}));
    CHECK(doc["results"]["finite_pairs"].empty());
    CHECK(doc["parameters"]["degree"] == 0);
}

TEST_CASE("shapes subcommand emits a bundle that parses back") {
    const CliResult result = run({"shapes", "--shape", "circle:8", "--fields", "x,y"});
    REQUIRE(result.status == 0);
    const Bundle bundle = parse_bundle(result.out);
    CHECK(bundle.vertex_count == 8);
    CHECK(bundle.fields.count("x") == 1);
    CHECK(bundle.fields.count("y") == 1);
    REQUIRE(bundle.coordinates.has_value());
}

TEST_CASE("a bundle written to disk feeds the other subcommands") {
    const std::string path = "test_cli_circle.bundle";
    const CliResult emitted =
        run({"shapes", "--shape", "circle:8", "--fields", "x,y", "--output", path});
    REQUIRE(emitted.status == 0);

    const CliResult match =
        run({"match", "--input", path, "--fields-a", "x,y", "--fields-b", "x,y",
             "--grid-theta", "3", "--grid-beta", "3", "--refine", "0"});
    REQUIRE(match.status == 0);
    const json doc = json::parse(match.out);
    CHECK(doc["results"]["distance"] == 0.0);
    CHECK(doc["inputs"]["input"] == path);

    const CliResult bottleneck =
        run({"bottleneck", "--input", path, "--field-a", "x", "--field-b", "x"});
    REQUIRE(bottleneck.status == 0);
    CHECK(json::parse(bottleneck.out)["results"]["distance"] == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("corr over tiny shapes stays near zero") {
    const CliResult result =
        run({"corr", "--shapes", "circle:16", "--fields", "x,y", "--grid-theta", "5",
             "--grid-beta", "5", "--refine", "1"});
    REQUIRE(result.status == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["results"]["correlation"].get<double>() == 0.0);
    CHECK(doc["results"]["per_space"].size() == 1);
    CHECK(doc["results"]["per_space"][0]["branch"] == "FORMULA");
}

TEST_CASE("topodiff reports the non-negative surplus") {
    const CliResult result =
        run({"topodiff", "--shape", "circle:16", "--fields-a", "x,y", "--fields-b",
             "x,x", "--grid-theta", "5", "--grid-beta", "5", "--refine", "1"});
    REQUIRE(result.status == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["results"]["difference"].get<double>() >= 0.0);
    CHECK(doc["results"]["matching_distance"].get<double>() >=
          doc["results"]["component_distance"].get<double>());
}

TEST_CASE("errors exit nonzero with a diagnostic") {
    const CliResult unknown = run({"nonsense"});
    CHECK(unknown.status != 0);

    const CliResult missing_file =
        run({"persist", "--input", "does_not_exist.bundle", "--field", "f"});
    CHECK(missing_file.status == 1);
    CHECK(missing_file.err.find("error:") != std::string::npos);

    const CliResult bad_shape =
        run({"persist", "--shape", "cube:3", "--field", "x"});
    CHECK(bad_shape.status == 1);

    const CliResult no_space = run({"persist", "--field", "f"});
    CHECK(no_space.status == 1);
}

TEST_CASE("timings are opt-in so default output stays deterministic") {
    const std::vector<std::string> args = {"persist", "--shape", "circle:8",
                                           "--field", "x"};
    const CliResult plain = run(args);
    REQUIRE(plain.status == 0);
    CHECK(json::parse(plain.out).contains("timings") == false);

    std::vector<std::string> timed = args;
    timed.push_back("--timings");
    const CliResult with_timings = run(timed);
    REQUIRE(with_timings.status == 0);
    CHECK(json::parse(with_timings.out)["timings"].contains("total_seconds"));
}
