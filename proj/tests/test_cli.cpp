#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "")
{
    const std::string command = env + " " + RGREC_CLI_PATH + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, ComputeFJson)
{
    const Result r = run("compute-f --g 0 --n 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind(R"({"nvars":3,"terms":[{"exp":[-1,-1,-1],"coeff":"-1/16"})", 0), 0u);
}

TEST(Cli, ComputeFLatexZForm)
{
    const Result r = run("compute-f --g 2 --n 1 --format latex");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("= -\\frac{35}{6}\\,z^{9} + \\frac{105}{4}\\,z^{8} - \\frac{93}{2}\\,z^{7} + \\frac{161}{4}\\,z^{6} - "
                         "\\frac{84}{5}\\,z^{5} + \\frac{21}{8}\\,z^{4}"),
              std::string::npos);
}

TEST(Cli, UnstableExitsTwo)
{
    EXPECT_EQ(run("compute-f --g 0 --n 2").code, 2);
    EXPECT_EQ(run("compute-n --g 0 --n 2 --p 1,1").code, 2);
}

TEST(Cli, ComputeN)
{
    EXPECT_EQ(run("compute-n --g 1 --n 1 --p 6").out, "2/3\n");
    EXPECT_EQ(run("compute-n --g 1 --n 1 --p 3").out, "0\n");
    EXPECT_EQ(run("compute-n --g 1 --n 1 --p 0").code, 2);
    EXPECT_EQ(run("compute-n --g 0 --n 3 --p 1,x,2").code, 2);
    EXPECT_EQ(run("compute-n --g 1 --n 1 --p 6 --format json").out, "{\n  \"key\": \"1:1:6\",\n  \"value\": \"2/3\"\n}\n");
}

TEST(Cli, ComputeNBox)
{
    const Result r = run("compute-n --g 0 --n 3 --box 4");
    EXPECT_EQ(r.code, 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n' ? 1 : 0;
    EXPECT_EQ(lines, 64u);
    EXPECT_NE(r.out.find("0\t3\t2\t2\t2\t1\n"), std::string::npos);
}

TEST(Cli, VerifyAllPasses)
{
    const Result r = run("verify --g 1 --n 2 --suite all");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("\"fail\""), std::string::npos);
    EXPECT_NE(r.out.find("\"oracle_F\""), std::string::npos);
}

TEST(Cli, VerifyEuler)
{
    const Result r = run("verify --g 2 --n 1 --suite euler");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"detail\": \"-1/120\""), std::string::npos);
}

TEST(Cli, VerifyOracleGuard)
{
    EXPECT_EQ(run("verify --g 3 --n 1 --suite oracle").code, 4);
    EXPECT_EQ(run("graphs --g 2 --n 1").code, 4);
}

TEST(Cli, Intersections)
{
    EXPECT_EQ(run("intersections --g 1 --n 1").out, "1 1 | 1/24\n");
    EXPECT_EQ(run("intersections --g 0 --n 3").out, "0 0 0 0 | 1\n");
    EXPECT_EQ(run("intersections --g 2 --n 1").out, "2 4 | 1/1152\n");
    EXPECT_EQ(run("intersections --g 2 --n 1 --format tsv").out, "2\t4\t1/1152\n");
}

TEST(Cli, GraphDump)
{
    const Result r = run("graphs --g 1 --n 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "e=2 sigma=(0 1 2 3) alpha=(0 2)(1 3) faces=1:(0 3 2 1) aut=4\n"
              "e=3 sigma=(0 1 3)(2 4 5) alpha=(0 2)(1 4)(3 5) faces=1:(0 4 3 2 1 5) aut=6\n");
}

TEST(Cli, CacheDirFlagAndEnvironment)
{
    const auto base = std::filesystem::temp_directory_path();
    const auto flag_dir = base / "rgrec_cli_flag";
    const auto env_dir = base / "rgrec_cli_env";
    std::filesystem::remove_all(flag_dir);
    std::filesystem::remove_all(env_dir);

    const Result a = run("compute-f --g 1 --n 2", "RGREC_CACHE_DIR=" + env_dir.string());
    EXPECT_EQ(a.code, 0);
    EXPECT_TRUE(std::filesystem::exists(env_dir / "F_g1_n2.json"));

    const Result b = run("compute-f --g 1 --n 2 --cache-dir " + flag_dir.string(), "RGREC_CACHE_DIR=" + env_dir.string());
    EXPECT_TRUE(std::filesystem::exists(flag_dir / "F_g1_n2.json"));
    EXPECT_EQ(a.out, b.out);

    const Result c = run("compute-f --g 1 --n 2", "RGREC_CACHE_DIR=" + env_dir.string());
    EXPECT_EQ(a.out, c.out);
    std::filesystem::remove_all(flag_dir);
    std::filesystem::remove_all(env_dir);
}

TEST(Cli, BadArguments)
{
    EXPECT_EQ(run("compute-f --g 1").code, 2);
    EXPECT_EQ(run("compute-f --g 1 --n 1 --format xml").code, 2);
    EXPECT_EQ(run("verify --g 1 --n 1 --suite nothing").code, 2);
    EXPECT_EQ(run("no-such-command").code, 2);
}
