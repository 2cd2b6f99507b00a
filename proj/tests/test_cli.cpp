#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {
struct Run {
    int code;
    std::string out;
};
Run run(const std::string& args) {
    std::string cmd = std::string(WICK_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}
std::string fx(const std::string& name) { return std::string(WICK_FIXTURES) + "/" + name; }
}  // namespace

TEST(Cli, FrameExample) {
    auto r = run("frame " + fx("one_leaf.json") + " --point 1,0,0.3");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "frame");
    EXPECT_EQ(j["seed"], 0);
    auto res = j["results"];
    EXPECT_NEAR(res["T"].get<double>(), 1, 1e-12);
    std::vector<double> N = res["N"], rr = res["r"];
    EXPECT_NEAR(N[0], 1, 1e-12);
    EXPECT_NEAR(N[1], 0, 1e-12);
    EXPECT_NEAR(N[2], 0, 1e-12);
    EXPECT_NEAR(rr[0], 0, 1e-12);
    EXPECT_NEAR(rr[1], 0, 1e-12);
    EXPECT_NEAR(rr[2], 0.3, 1e-12);
}

TEST(Cli, VerifyPullbackExample) {
    auto r = run("verify " + fx("five_leaves.json") + " --suite pullback --kind all --samples 200 --seed 7");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["seed"], 7);
    ASSERT_EQ(j["results"].size(), 4u);
    for (const auto& s : j["results"]) {
        EXPECT_LT(s["value"].get<double>(), 1e-5);
        EXPECT_TRUE(s["pass"].get<bool>());
    }
}

TEST(Cli, VolumeExample) {
    auto r = run("volume --kappa 0 --b 1 --chi -2 --lamlength 3");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out)["results"];
    EXPECT_NEAR(j["A"].get<double>(), 4 * M_PI + 3, 1e-12);
    EXPECT_NEAR(j["V"].get<double>(), 4 * M_PI / 3 + 1.5, 1e-12);
    auto csv = run("volume --kappa 0 --b 1 --chi -2 --lamlength 3 --format csv");
    EXPECT_EQ(csv.out.substr(0, 4), "A,V\n");
}

TEST(Cli, DeterministicVerify) {
    std::string args = "verify " + fx("five_leaves.json") + " --suite decomposition --samples 100 --seed 5";
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run("verify " + fx("five_leaves.json") + " --suite decomposition --samples 100 --seed 6").out);
}

TEST(Cli, ExitCodes) {
    for (const auto& e : fs::directory_iterator(fx("corpus"))) {
        std::string name = e.path().filename().string();
        int expected = name.rfind("ok_", 0) == 0 ? 0 : name.rfind("invalid_", 0) == 0 ? 1 : 2;
        EXPECT_EQ(run("validate " + e.path().string()).code, expected) << name;
    }
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("frame " + fx("one_leaf.json")).code, 2);
    EXPECT_EQ(run("frame " + fx("one_leaf.json") + " --point 1,0").code, 2);
    EXPECT_EQ(run("frame " + fx("missing.json") + " --point 1,0,0").code, 2);
    EXPECT_EQ(run("frame " + fx("corpus/invalid_overlap.json") + " --point 1,0,0").code, 1);
    EXPECT_EQ(run("verify " + fx("one_leaf.json") + " --suite nonsense").code, 2);
    EXPECT_EQ(run("verify " + fx("one_leaf.json") + " --suite klein --samples 20").code, 1);
}

TEST(Cli, OtherVerbs) {
    auto d = run("develop " + fx("five_leaves.json") + " --point 2,0,0.5 --target antidesitter");
    ASSERT_EQ(d.code, 0);
    auto m = nlohmann::json::parse(d.out)["results"][0];
    EXPECT_NEAR(m["det"].get<double>(), 1, 1e-12);
    auto s = run("sample-surface " + fx("five_leaves.json") + " --level 1.5 --samples 10 --target hyperbolic --format csv");
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 11);
    EXPECT_EQ(run("sample-surface " + fx("five_leaves.json") + " --level 0.5 --target hyperbolic").code, 2);
    auto t = run("tree " + fx("five_leaves.json"));
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(nlohmann::json::parse(t.out)["results"]["edges"].size(), 5u);
    auto q = run("qd --kerr 1,0.5 --radius 0.790569415");
    ASSERT_EQ(q.code, 0);
    EXPECT_NEAR(nlohmann::json::parse(q.out)["results"]["f"].get<double>(), -0.225, 1e-8);
    auto l = run("qd --lattice \"1,0;0,1\"");
    EXPECT_EQ(nlohmann::json::parse(l.out)["results"]["type"], "torus");
    auto sp = run("spectra " + fx("five_leaves.json") + " --gamma 2,1,1,1");
    ASSERT_EQ(sp.code, 0);
    auto der = nlohmann::json::parse(sp.out)["results"]["derivative"];
    EXPECT_NEAR(der["d_em_ds"].get<double>(), der["margulis0"].get<double>(), 1e-3);
    auto tmp = fs::temp_directory_path() / "wick_cli_out.json";
    EXPECT_EQ(run("volume --kappa 1 --b 0.5 --chi -2 --lamlength 1 -o " + tmp.string()).code, 0);
    EXPECT_TRUE(fs::exists(tmp));
    fs::remove(tmp);
}
