#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
};

fs::path cache_dir() {
    static const fs::path d = [] {
        // ctest runs each case in its own process, possibly in parallel.
        fs::path p = fs::temp_directory_path() /
                     ("frieze_mod_cli_test_cache_" + std::to_string(::getpid()));
        fs::remove_all(p);
        return p;
    }();
    return d;
}

CliRun run(const std::string& args) {
    const std::string cmd = "FRIEZE_MOD_CACHE_DIR='" + cache_dir().string() + "' '" FRIEZE_MOD_CLI "' " +
                            args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(CliSize, Examples) {
    EXPECT_EQ(run("size 35 23").out, "70, Id\n");
    EXPECT_EQ(run("size 5 0").out, "2, -Id\n");
    EXPECT_EQ(run("size 12 4").out.substr(0, 3), "12,");
    EXPECT_EQ(run("size 90 -7").out, run("size 90 83").out);
    EXPECT_EQ(run("size 35 23").code, 0);
}

TEST(CliSize, UsageErrors) {
    EXPECT_EQ(run("size 1 0").code, 2);
    EXPECT_EQ(run("size 5").code, 2);
    EXPECT_EQ(run("size five 1").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(CliClassify, Examples) {
    EXPECT_EQ(run("classify 9 3").out, "reducible; witness size 4: (6,3,3,6)\n");
    EXPECT_EQ(run("classify 62 3").out, "irreducible; size 15\n");
    EXPECT_EQ(run("classify 80 50").out, "irreducible; size 16\n");
    EXPECT_EQ(run("classify 4 0").out, "zero-convention; size 2\n");
    EXPECT_EQ(run("classify 0 0").code, 2);
}

TEST(CliOplus, Examples) {
    EXPECT_EQ(run("oplus 10 1,1,3 -2,0,2").out, "3,1,1,0\n");
    EXPECT_EQ(run("oplus 7 2,2,1,0 1,-1,1").out, "3,2,1,1,6\n");
    EXPECT_EQ(run("oplus 5 1,2 0,0").out, "1,2\n");
}

TEST(CliOplus, Errors) {
    EXPECT_EQ(run("oplus 5 1,x 0,0").code, 2);
    EXPECT_EQ(run("oplus 5 1 0,0").code, 2);
    EXPECT_EQ(run("oplus 1 1,2 0,0").code, 2);
}

TEST(CliWitness, DefaultAndScan) {
    EXPECT_EQ(run("witness 9 3").out, "size 4: (6,3,3,6), Id\n");
    EXPECT_EQ(run("witness 62 3").out, "none\n");
    const CliRun scan = run("witness 9 3 --scan");
    EXPECT_EQ(scan.code, 0);
    EXPECT_EQ(scan.out.substr(0, 23), "size 4: (6,3,3,6), Id\n");
    EXPECT_EQ(run("witness 2003 2 --scan").code, 2);
}

TEST(CliVerify, PassAndReportFile) {
    const fs::path out =
        fs::temp_directory_path() / ("frieze_mod_cli_verify_" + std::to_string(::getpid()) + ".json");
    fs::remove(out);
    const CliRun r = run("verify size-bound --max 100 --out '" + out.string() + "'");
    EXPECT_EQ(r.code, 0);
    const std::string json = slurp(out);
    EXPECT_NE(json.find("\"theorem_id\": \"size-bound\""), std::string::npos);
    EXPECT_NE(json.find("\"status\": \"pass\""), std::string::npos);
    EXPECT_EQ(json.back(), '\n');
}

TEST(CliVerify, SizeNNotesNinety) {
    const CliRun r = run("verify size-n --max 90");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"status\": \"pass\""), std::string::npos);
    EXPECT_NE(r.out.find("\"N\": 90"), std::string::npos);
}

TEST(CliVerify, Errors) {
    const CliRun bad = run("verify nonsense 2>&1");
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(run("verify size-bound --max 10 --out /nonexistent-dir/x.json").code, 1);
}

TEST(CliVerify, VacuousIsSuccess) {
    const CliRun r = run("verify eight-divides --min 9 --max 15");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"status\": \"vacuous\""), std::string::npos);
}

TEST(CliSurvey, CsvRows) {
    const CliRun r = run("survey --min 5 --max 5 --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "N,k,size,sign,verdict,witness_size,witness_x,witness_y\n"
              "5,0,2,-1,zero-convention,,,\n"
              "5,1,3,-1,irreducible,,,\n"
              "5,2,5,1,irreducible,,,\n"
              "5,3,5,-1,irreducible,,,\n"
              "5,4,3,1,irreducible,,,\n");
}

TEST(CliSurvey, ModTwoAndEmpty) {
    const CliRun two = run("survey --min 2 --max 2");
    EXPECT_EQ(two.out,
              "N,k,size,sign,verdict,witness_size,witness_x,witness_y\n"
              "2,0,2,1,zero-convention,,,\n"
              "2,1,3,1,irreducible,,,\n");
    EXPECT_EQ(run("survey --min 10 --max 9").out,
              "N,k,size,sign,verdict,witness_size,witness_x,witness_y\n");
}

TEST(CliSurvey, JsonLines) {
    const CliRun r = run("survey --min 9 --max 9 --format json");
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 9);
    EXPECT_NE(r.out.find(R"({"N":9,"k":3,"size":6,"sign":-1,"verdict":"reducible","witness_size":4,"witness_x":6,"witness_y":6})"),
              std::string::npos);
}

TEST(CliSurvey, Errors) {
    EXPECT_EQ(run("survey --format xml").code, 2);
    EXPECT_EQ(run("survey --min 2 --max 3 --out /nonexistent-dir/s.csv").code, 1);
}

TEST(CliCache, OutputIdenticalWithAndWithout) {
    for (const char* args : {"survey --min 2 --max 12", "size 70 23", "classify 90 83"}) {
        const std::string cold = run(std::string("--no-cache ") + args).out;
        const std::string warm1 = run(args).out;
        const std::string warm2 = run(args).out;
        EXPECT_EQ(cold, warm1) << args;
        EXPECT_EQ(cold, warm2) << args;
    }
    EXPECT_TRUE(fs::exists(cache_dir() / "cells.json"));
}
