#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <set>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("wheelfree_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run cli(const std::string& args, const std::string& stdin_text = "") {
    const auto out = scratch() / "stdout.txt";
    std::string cmd = std::string(WHEELFREE_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
    if (!stdin_text.empty()) {
        const auto in = scratch() / "stdin.txt";
        std::ofstream(in) << stdin_text;
        cmd += " < " + in.string();
    } else {
        cmd += " < /dev/null";
    }
    const int status = std::system(cmd.c_str());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write(const std::string& name, const std::string& text) {
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST(Cli, ConstructGraph6) {
    const auto r = cli("construct --family hn --n 7 --format graph6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "F`~v_\n");
    EXPECT_EQ(cli("construct --family f").out, "FUzro\n");
    EXPECT_EQ(cli("construct --family complete --n 3").out, "Bw\n");
}

TEST(Cli, ConstructThenCheckIsWheelFree) {
    std::string lines;
    for (int n = 4; n <= 20; ++n) lines += cli("construct --family hn --n " + std::to_string(n)).out;
    lines += cli("construct --family f").out;
    lines += cli("construct --family matching --a 3 --b 1 --c 5").out;
    lines += cli("construct --family k2join --n 9").out;
    const auto r = cli("check", lines);
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 20U);
    for (const auto& e : j) {
        EXPECT_TRUE(e["wheel_free"].get<bool>()) << e["graph6"];
        EXPECT_TRUE(e["witness"].is_null());
        EXPECT_EQ(e["fact2_violations"], 0);
    }
}

TEST(Cli, CheckReportsWitness) {
    const auto r = cli("check --in " + write("w.g6", "C~\n"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j[0]["wheel_free"].get<bool>());
    EXPECT_EQ(j[0]["witness"]["rim"], nlohmann::json::parse("[1,2,3]"));
}

TEST(Cli, SpectraSignlessLaplacian) {
    const auto r = cli("spectra --matrix q", cli("construct --family k2join --n 4").out);
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j[0]["radius"].get<double>(), 5.2360679, 1e-7);
    EXPECT_EQ(j[0]["closed_form"], "(6+sqrt(20))/2");
    EXPECT_TRUE(j[0]["closed_form"].is_string());
}

TEST(Cli, Tables) {
    const auto t1 = cli("spectra --table 1 --n 11 --format csv");
    EXPECT_EQ(t1.code, 0);
    EXPECT_NE(t1.out.find("11,6,H_11,6,true"), std::string::npos);
    const auto t2 = cli("spectra --table 2 --n 8 --format csv");
    EXPECT_EQ(t2.out.rfind("n,d_u,family,radius,wheel_free\n8,4,H_8,4.531128874,true\n", 0), 0U);
    EXPECT_EQ(cli("spectra --table 3 --n 8").code, 2);
}

TEST(Cli, QuotientAndApex) {
    const auto r = cli("quotient", cli("construct --family hn --n 9").out);
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j[0]["quotient"], nlohmann::json::parse(R"([["1","5"],["4","0"]])"));
    EXPECT_EQ(j[0]["char_poly"], "x^2 - x - 20");
    EXPECT_EQ(cli("quotient --apex 13,7,2").code, 0);
    EXPECT_EQ(cli("quotient --apex 13,7,9").code, 2);
    const auto bad = cli("quotient --cells '0;1,2'", "Bg\n");  // path 0-1-2 is not equitable for {0},{1,2}
    EXPECT_EQ(bad.code, 0);
    EXPECT_FALSE(nlohmann::json::parse(bad.out)[0]["equitable"].get<bool>());
}

TEST(Cli, EnumerateAndBudget) {
    const auto r = cli("enumerate --n 6 --filter wheel-free --threads 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 110);
    EXPECT_EQ(cli("enumerate --n 6 --filter all --threads 2").out, cli("enumerate --n 6 --filter all --threads 1").out);
    EXPECT_EQ(cli("enumerate --n 8 --max-graphs 5").code, 3);
    EXPECT_EQ(cli("enumerate --n 8 --filter bogus").code, 2);
    EXPECT_EQ(cli("enumerate --n 10").code, 2);
}

TEST(Cli, EnumerateResumesFromCheckpoint) {
    const auto out = (scratch() / "resume.g6").string();
    const auto ckpt = (scratch() / "resume.ckpt").string();
    fs::remove(out);
    fs::remove(ckpt);
    EXPECT_EQ(cli("enumerate --n 8 --filter all --max-graphs 2000 --out " + out + " --checkpoint " + ckpt).code, 3);
    EXPECT_EQ(cli("enumerate --n 8 --filter all --out " + out + " --checkpoint " + ckpt).code, 0);
    std::ifstream f(out);
    std::set<std::string> lines;
    std::size_t total = 0;
    for (std::string line; std::getline(f, line); ++total) lines.insert(line);
    EXPECT_EQ(total, 12346U);
    EXPECT_EQ(lines.size(), 12346U);
}

TEST(Cli, SearchAndVerify) {
    const auto s = cli("search --n 7 --matrix a");
    ASSERT_EQ(s.code, 0);
    const auto j = nlohmann::json::parse(s.out);
    EXPECT_EQ(j["max_radius"], 4.0);
    EXPECT_EQ(j["extremal"].size(), 2U);
    EXPECT_EQ(j["tie_confirmation"], "exact_integer_root");

    const auto v = cli("verify --theorem 1 --from 4 --to 8 --format json");
    ASSERT_EQ(v.code, 0);
    for (const auto& e : nlohmann::json::parse(v.out)) EXPECT_EQ(e["verdict"], "PASS");
    const auto c = cli("verify --theorem 2 --from 4 --to 6 --format csv");
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "n,verdict,max_radius,expected_radius,class_count,extremal_count");
    EXPECT_EQ(cli("verify --theorem 1 --from 6 --to 8 --max-graphs 3").code, 3);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("construct --bogus").code, 2);
    EXPECT_EQ(cli("construct --family nope --n 4").code, 2);
    EXPECT_EQ(cli("construct --family hn --n 2").code, 2);
    EXPECT_EQ(cli("check --in /nonexistent/file.g6").code, 2);
    EXPECT_EQ(cli("check", "not graph6 at all\n").code, 2);
    EXPECT_EQ(cli("spectra --matrix z", "Bw\n").code, 2);
    EXPECT_EQ(cli("verify --theorem 3").code, 2);
    EXPECT_EQ(cli("search --n 4 --format xml").code, 2);
    EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, GoldenJson) {
    auto golden = [](const std::string& name) {
        std::ifstream f(std::string(WHEELFREE_GOLDEN_DIR) + "/" + name);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    EXPECT_EQ(cli("spectra --table 1 --n 11 --format json").out, golden("table1_n11.json"));
    EXPECT_EQ(cli("quotient", cli("construct --family hn --n 10").out).out, golden("quotient_h10.json"));
    EXPECT_EQ(cli("construct --family hn --n 8 --format json").out, golden("construct_h8.json"));
}
