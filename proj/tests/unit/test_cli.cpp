#include <doctest.h>

#include "heckecount/cli/report.hpp"
#include "heckecount/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hc;
using namespace hc::cli;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    auto out = std::filesystem::temp_directory_path() / "heckecount_cli_out.txt";
    std::string cmd = env + " " + HC_CLI_PATH + " " + args + " > " + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

} // namespace

TEST_CASE("rendering keeps big integers as strings")
{
    Table t{{"q", "trace"}, {}};
    t.add({"7", "-10370198954152041951342796400"});
    t.add({"11", "a, \"quoted\""});
    auto j = nlohmann::json::parse(render(t, Format::json));
    REQUIRE(j.is_array());
    CHECK(j[0]["trace"] == "-10370198954152041951342796400");
    CHECK(j[0]["q"].is_string());
    auto csv = render(t, Format::csv);
    CHECK(csv.rfind("q,trace\n", 0) == 0);
    CHECK(csv.find("\"a, \"\"quoted\"\"\"") != std::string::npos);
    CHECK(render(t, Format::text).find("-10370198954152041951342796400") != std::string::npos);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("command line exit codes")
{
    CHECK(run("census --family g1 --q 6").code == ExitCode::unsupported);
    CHECK(run("verify").code == ExitCode::usage);
    CHECK(run("frobnicate").code == ExitCode::usage);
    CHECK(run("trace --degree 1 --k 13 --q 2").code == ExitCode::usage);
    CHECK(run("congruence --degree 3 --table /nonexistent/t.txt").code == ExitCode::io);
    CHECK(run("verify --suite congruences").code == ExitCode::ok);
}

TEST_CASE("trace output formats")
{
    auto r = run("trace --degree 1 --k 12 --q 2 --format json");
    REQUIRE(r.code == ExitCode::ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump().find("\"-24\"") != std::string::npos);
    auto c = run("trace --degree 2 --j 14 --k 7 --q 2 --format csv");
    CHECK(c.code == ExitCode::ok);
    CHECK(c.out.find("-3696") != std::string::npos);
}

TEST_CASE("census cache directory comes from the environment")
{
    auto dir = std::filesystem::temp_directory_path() / "heckecount_cli_cache";
    std::filesystem::remove_all(dir);
    auto r = run("census --family g1 --q 5", "HECKECOUNT_CACHE=" + dir.string());
    CHECK(r.code == ExitCode::ok);
    CHECK(std::filesystem::exists(dir));
    CHECK_FALSE(std::filesystem::is_empty(dir));
    // second run reads and verifies the stored census
    CHECK(run("census --family g1 --q 5", "HECKECOUNT_CACHE=" + dir.string()).code == ExitCode::ok);
    std::filesystem::remove_all(dir);
}
