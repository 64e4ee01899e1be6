#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixture_60_3.hpp"
#include "subprocess.hpp"

namespace {

const std::string cli = MARY_CLI_PATH;
const std::string golden_dir = MARY_GOLDEN_DIR;

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string mults_line(const fixture::Mults& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(m[i]);
    }
    return s + "]";
}

} // namespace

TEST_CASE("count lines")
{
    auto r = run_command(cli + " count 60 --base 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "b=117 simple=9 nonsimple=108 q=36\n");

    r = run_command(cli + " count 8 --base 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "b=10 simple=2 nonsimple=8 q=4\n");

    r = run_command(cli + " count 0 --base 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "b=1 simple=1 nonsimple=0 q=0\n");
}

TEST_CASE("enumerate matches the listed partitions of 8")
{
    const auto r = run_command(cli + " enumerate 8 --base 2");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 10);
    std::set<std::string> expected;
    for (const fixture::Mults& m : fixture::kPartitions8)
        expected.insert(mults_line(m));
    CHECK(std::set<std::string>(lines.begin(), lines.end()) == expected);
    /* canonical order: greedy partition first, all ones last */
    CHECK(lines.front() == "[0,0,0,1]");
    CHECK(lines.back() == "[8,0,0,0]");
}

TEST_CASE("enumerate filters and nops")
{
    auto r = run_command(cli + " enumerate 60 --base 3 --filter simple");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 9);
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(lines[i] == mults_line(fixture::kSimple60[i]));

    r = run_command(cli + " enumerate 8 --base 2 --filter nonsimple");
    CHECK(lines_of(r.output).size() == 8);

    r = run_command(cli + " enumerate 8 --base 2 --with-nops");
    const auto with_nops = lines_of(r.output);
    CHECK(with_nops.front() == "[0,0,0,1] 1");
    CHECK(with_nops.back() == "[8,0,0,0] 8");

    r = run_command(cli + " enumerate 0 --base 2");
    CHECK(r.output == "[]\n");
}

TEST_CASE("stratify json matches the golden transcription")
{
    const std::string golden = read_file(golden_dir + "/stratify_60_3.json");
    CHECK(golden == fixture::expected_stratify_60_3_json().dump(2) + "\n");

    const auto r = run_command(cli + " stratify 60 --base 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden);

    /* byte determinism */
    const auto again = run_command(cli + " stratify 60 --base 3 --format json");
    CHECK(again.output == r.output);
}

TEST_CASE("stratify text report")
{
    const auto r = run_command(cli + " stratify 60 --base 3 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[*,*,5,0]: [0,5,5,0] [3,4,5,0] [6,3,5,0]") != std::string::npos);
    CHECK(r.output.find("f^-1(6); 6=(0,2,0,0)_3; size=69") != std::string::npos);

    const auto empty = run_command(cli + " stratify 2 --base 3");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("N is empty") != std::string::npos);
}

TEST_CASE("verify sweeps")
{
    auto r = run_command(cli + " verify --claims afs --base 2..3 --n 0..300");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("claim=afs checked=602 held=602 failed=0 skipped=0") != std::string::npos);

    r = run_command(cli + " verify --claims nmc --base 2 --n 8..8 --c 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("claim=nmc checked=1 held=1 failed=0 skipped=0") != std::string::npos);

    r = run_command(cli
                    + " verify --claims equidist_N,digit_criterion,equidist_S --base 2..3"
                      " --n 0..40 --cap 100000 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("claim=equidist_N checked=82 held=82 failed=0") != std::string::npos);

    r = run_command(cli + " verify --claims afs --base 2 --n 0..10 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["claims"][0]["held"] == 11);
    CHECK(doc["failures"].empty());
}

TEST_CASE("skips are recorded when the count exceeds the cap")
{
    const auto r = run_command(cli
                               + " verify --claims equidist_N --base 2 --n 0..40 --cap 100"
                                 " 2>/dev/null");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].find("skipped=") != std::string::npos);
    CHECK(lines[0].find("skipped=0") == std::string::npos);
    CHECK(lines[0].find("failed=0") != std::string::npos);
}

TEST_CASE("exit codes")
{
    /* usage errors */
    CHECK(run_command(cli + " count 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli + " count 5 --base 1 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli + " enumerate 5 --base 2 --filter bogus 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli + " verify --claims bogus --base 2 --n 0..5 2>/dev/null").exit_code == 2);
    CHECK(run_command(cli + " verify --claims afs --base 9..2 --n 0..5 2>/dev/null").exit_code == 2);

    /* cap breaches */
    CHECK(run_command(cli + " enumerate 200 --base 2 --cap 10 2>/dev/null").exit_code == 1);
    CHECK(run_command(cli + " stratify 200 --base 2 --cap 10 2>/dev/null").exit_code == 1);

    /* env var override */
    CHECK(run_command("MARY_CAP=10 " + cli + " enumerate 200 --base 2 2>/dev/null").exit_code == 1);
    CHECK(run_command("MARY_CAP=10 " + cli + " enumerate 8 --base 2 2>/dev/null").exit_code == 0);

    /* help is not an error */
    CHECK(run_command(cli + " --help").exit_code == 0);
}
