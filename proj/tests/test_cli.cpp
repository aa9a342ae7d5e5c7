#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "testutil.hpp"

using namespace testutil;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string &args, bool merge_stderr = false) {
    std::string command = std::string(UMRSCORE_BIN) + " " + args;
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, n);
    int status = pclose(pipe);
    RunResult result;
    result.output = std::move(output);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string quoted_fixture(const std::string &name) {
    return "'" + fixture_path(name) + "'";
}

const std::string kGold = quoted_fixture("vesmir_gold.umr");
const std::string kConv = quoted_fixture("vesmir_conv.umr");

} // namespace

TEST_CASE("compare text output") {
    RunResult result = run("compare " + kGold + " " + kConv);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("overall") != std::string::npos);
    CHECK(result.output.find("61.54") != std::string::npos);
    CHECK(result.output.find("41.03") != std::string::npos);
    CHECK(result.output.find("49.23") != std::string::npos);
    CHECK(result.output.find("alignment") != std::string::npos);
    CHECK(result.output.find("mapping") != std::string::npos);
}

TEST_CASE("compare json output") {
    RunResult result = run("compare --output-format json " + kGold + " " + kConv);
    REQUIRE(result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(result.output);
    REQUIRE(parsed["pairs"].size() == 1);
    const nlohmann::json &pair = parsed["pairs"][0];
    CHECK(pair["overall"]["matched"] == 16);
    CHECK(pair["overall"]["f1"] == 49.23);
    CHECK(pair["concepts"]["matched"] == 6);
    CHECK(pair["mapping"]["precision"] == 88.89);
    CHECK(pair["sentences"].size() == 1);
    CHECK(parsed.count("aggregate") == 0);
}

TEST_CASE("compare tsv output") {
    RunResult result = run("compare --output-format tsv " + kGold + " " + kConv);
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.rfind("pair\tsentence\tcategory", 0) == 0);
    CHECK(result.output.find("\tall\toverall\t61.54\t41.03\t49.23\t16\t39\t26") !=
          std::string::npos);
    CHECK(result.output.find("\t1\tconcepts\t") != std::string::npos);
}

TEST_CASE("compare with the search baseline") {
    RunResult result =
        run("compare --matcher smatch --output-format json " + kGold + " " + kConv);
    REQUIRE(result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(result.output);
    CHECK(parsed["pairs"][0]["overall"]["matched"] == 17);
    CHECK(parsed["pairs"][0]["mapping"]["matched"] == 9);
}

TEST_CASE("document-level scoring flag") {
    std::string files =
        quoted_fixture("multisent_a.umr") + " " + quoted_fixture("multisent_b.umr");
    RunResult without = run("compare --output-format json " + files);
    REQUIRE(without.exit_code == 0);
    CHECK(nlohmann::json::parse(without.output)["pairs"][0].count("doc_level") == 0);

    RunResult with = run("compare --include-doc --output-format json " + files);
    REQUIRE(with.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(with.output);
    CHECK(parsed["pairs"][0]["doc_level"]["matched"] == 4);
    CHECK(parsed["pairs"][0]["doc_level"]["gold_total"] == 5);
    CHECK(parsed["pairs"][0]["sentences"].size() == 2);
}

TEST_CASE("mapped-only flag") {
    RunResult result =
        run("compare --mapped-only --output-format json " + kGold + " " + kConv);
    REQUIRE(result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(result.output);
    CHECK(parsed["pairs"][0]["overall"]["matched"] == 16);
    CHECK(parsed["pairs"][0]["overall"]["gold_total"] == 26);
    CHECK(parsed["pairs"][0]["overall"]["pred_total"] == 22);
}

TEST_CASE("several pairs aggregate") {
    std::string files = kGold + " " + quoted_fixture("multisent_a.umr") + " " + kConv +
                        " " + quoted_fixture("multisent_b.umr");
    RunResult result = run("compare --output-format json " + files);
    REQUIRE(result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(result.output);
    REQUIRE(parsed["pairs"].size() == 2);
    CHECK(parsed["aggregate"]["overall"]["matched"] == 16 + 9);
    CHECK(parsed["aggregate"]["overall"]["gold_total"] == 39 + 15);

    RunResult text = run("compare " + files);
    CHECK(text.output.find("aggregate (2 pairs)") != std::string::npos);
    CHECK(text.output.find("pair 1:") != std::string::npos);
}

TEST_CASE("stats command") {
    RunResult result = run("stats " + kGold);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("aligned 8 (72.73%)") != std::string::npos);
    CHECK(result.output.find("unaligned 3 (27.27%)") != std::string::npos);

    RunResult json_result = run("stats --output-format json " + kGold + " " + kConv);
    REQUIRE(json_result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(json_result.output);
    CHECK(parsed["files"].size() == 2);
    CHECK(parsed["total"]["nodes"] == 20);
    CHECK(parsed["total"]["aligned"] == 17);
}

TEST_CASE("diff command") {
    RunResult result = run("diff " + kGold + " " + kConv);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("33 mismatches") != std::string::npos);
    CHECK(result.output.find("UNMAPPED") != std::string::npos);
    CHECK(result.output.find("slt1") != std::string::npos);

    RunResult json_result = run("diff --output-format json " + kGold + " " + kConv);
    REQUIRE(json_result.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(json_result.output);
    CHECK(parsed["pairs"][0]["sentences"][0]["mismatch_count"] == 33);
}

TEST_CASE("identical runs, identical bytes") {
    std::string args = "compare --matcher smatch --output-format json " + kGold + " " + kConv;
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    std::string diff_args = "diff " + kGold + " " + kConv;
    CHECK(run(diff_args).output == run(diff_args).output);
}

TEST_CASE("failure exit codes") {
    CHECK(run("compare " + kGold + " /nonexistent.umr").exit_code == 1);
    CHECK(run("compare " + kGold + " " + quoted_fixture("multisent_b.umr")).exit_code == 1);
    CHECK(run("compare " + kGold).exit_code == 2);
    CHECK(run("compare --matcher bogus " + kGold + " " + kConv).exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("warnings go to stderr") {
    std::filesystem::path temp =
        std::filesystem::temp_directory_path() / "umr_cli_warn_test.umr";
    {
        std::ofstream out(temp);
        out << "# :: snt1\nIndex: 1 2 3\nWords: a b\n"
            << "# sentence level graph:\n(s1a / thing)\n";
    }
    RunResult quiet = run("stats '" + temp.string() + "'");
    CHECK(quiet.exit_code == 0);
    CHECK(quiet.output.find("warning") == std::string::npos);

    RunResult loud = run("stats '" + temp.string() + "'", true);
    CHECK(loud.output.find("warning:") != std::string::npos);
    CHECK(loud.output.find("Index") != std::string::npos);
    std::filesystem::remove(temp);
}
