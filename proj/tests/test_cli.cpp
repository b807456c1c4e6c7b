// Drives the tkplex executable end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
};

Result run(const std::string& args)
{
    const std::string command = std::string(TKPLEX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    for (size_t n; (n = fread(buffer, 1, sizeof buffer, pipe)) > 0;) {
        out.append(buffer, n);
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("tkplex_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    [[nodiscard]] std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

const std::string kTriangle = std::string(TKPLEX_FIXTURE_DIR) + "/triangle.txt";
const std::string kEdgeless = std::string(TKPLEX_FIXTURE_DIR) + "/edgeless.txt";

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("enumerate writes plexes and stats")
    {
        Scratch tmp;
        const auto r = run("enumerate " + kTriangle + " --delta 1 --k 2 --output " + tmp.path("out.txt") +
                           " --stats " + tmp.path("stats.txt") + " --degeneracy --bound");
        CHECK(r.status == 0);
        const std::string out = slurp(tmp.path("out.txt"));
        CHECK(out.find("a b c 4 5\n") != std::string::npos);
        const std::string stats = slurp(tmp.path("stats.txt"));
        CHECK(stats.find("plexes=" + std::to_string(count_lines(out)) + "\n") != std::string::npos);
        CHECK(stats.find("degeneracy=2\n") != std::string::npos);
        CHECK(stats.find("timed_out=false\n") != std::string::npos);
        CHECK(stats.find("dataset=triangle.txt\n") != std::string::npos);
        CHECK(r.out.find("recursive_calls") != std::string::npos);
    }

    TEST_CASE("runs are byte-identical")
    {
        Scratch tmp;
        for (const char* name : {"one.txt", "two.txt"}) {
            REQUIRE(run("enumerate " + kTriangle + " --delta 1 --k 1 --pivoting --output " + tmp.path(name)).status ==
                    0);
        }
        CHECK(slurp(tmp.path("one.txt")) == slurp(tmp.path("two.txt")));
        CHECK(!slurp(tmp.path("one.txt")).empty());
    }

    TEST_CASE("plexes go to stdout without --output")
    {
        const auto r = run("enumerate " + kTriangle + " --delta 1 --k 2");
        CHECK(r.status == 0);
        CHECK(r.out.find("a b c 4 5\n") != std::string::npos);
        CHECK(r.out.find("recursive_calls") == std::string::npos);
    }

    TEST_CASE("exit codes")
    {
        CHECK(run("enumerate " + kTriangle + " --delta 6 --k 1").status == 2);
        CHECK(run("enumerate " + kTriangle + " --delta 1 --k 0").status == 2);
        CHECK(run("enumerate " + kTriangle + " --k 1").status == 2);
        CHECK(run("enumerate /nonexistent --delta 1").status == 3);
        CHECK(run("enumerate " + kEdgeless + " --delta 1").status == 3);
        CHECK(run("bogus").status == 2);
        CHECK(run("").status == 2);
    }

    TEST_CASE("scaled delta")
    {
        Scratch tmp;
        // 5^2 * 6 / (5 * 7) = 4.29 -> 4
        REQUIRE(run("enumerate " + kTriangle + " --delta-exp 2 --k 1 --stats " + tmp.path("s.txt") + " --output " +
                    tmp.path("o.txt"))
                    .status == 0);
        CHECK(slurp(tmp.path("s.txt")).find("delta=4\n") != std::string::npos);
        // --delta wins over --delta-exp.
        REQUIRE(run("enumerate " + kTriangle + " --delta 1 --delta-exp 2 --k 1 --stats " + tmp.path("s.txt") +
                    " --output " + tmp.path("o.txt"))
                    .status == 0);
        CHECK(slurp(tmp.path("s.txt")).find("delta=1\n") != std::string::npos);
    }

    TEST_CASE("timeout exits 4 with partial stats")
    {
        Scratch tmp;
        {
            std::ofstream big(tmp.path("big.txt"));
            std::uint64_t state = 99;
            for (int u = 0; u < 40; ++u) {
                for (int v = u + 1; v < 40; ++v) {
                    for (int t = 1; t <= 200; ++t) {
                        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                        if ((state >> 33) % 2 == 0) {
                            big << t << " v" << u << " v" << v << "\n";
                        }
                    }
                }
            }
        }
        const auto r = run("enumerate " + tmp.path("big.txt") + " --delta 3 --k 3 --time-limit 0.05 --output " +
                           tmp.path("o.txt") + " --stats " + tmp.path("s.txt"));
        CHECK(r.status == 4);
        const std::string stats = slurp(tmp.path("s.txt"));
        CHECK(stats.find("timed_out=true\n") != std::string::npos);
        CHECK(stats.find("plexes=" + std::to_string(count_lines(slurp(tmp.path("o.txt")))) + "\n") !=
              std::string::npos);
    }

    TEST_CASE("degeneracy")
    {
        auto r = run("degeneracy " + kTriangle + " --delta 0,1,5");
        CHECK(r.status == 0);
        CHECK(r.out.find("static 2\n") != std::string::npos);
        CHECK(r.out.find("delta=1 2\n") != std::string::npos);
        CHECK(r.out.find("delta=5 2\n") != std::string::npos);

        r = run("degeneracy " + kEdgeless + " --skip-self-loops --delta 0,1,2,5");
        CHECK(r.status == 0);
        CHECK(r.out.find("static 0\n") != std::string::npos);
        for (const char* d : {"delta=0 0\n", "delta=1 0\n", "delta=2 0\n", "delta=5 0\n"}) {
            CHECK(r.out.find(d) != std::string::npos);
        }
        CHECK(run("degeneracy " + kTriangle + " --delta 6").status == 2);
    }

    TEST_CASE("oracle check")
    {
        Scratch tmp;
        REQUIRE(run("enumerate " + kTriangle + " --delta 1 --k 2 --output " + tmp.path("out.txt")).status == 0);
        CHECK(run("oracle " + kTriangle + " --delta 1 --k 2 --plexes " + tmp.path("out.txt")).status == 0);

        const std::string full = slurp(tmp.path("out.txt"));
        const auto cut = full.find("a b c 4 5\n");
        REQUIRE(cut != std::string::npos);
        {
            std::ofstream missing(tmp.path("missing.txt"));
            missing << full.substr(0, cut) << full.substr(cut + 10);
        }
        auto r = run("oracle " + kTriangle + " --delta 1 --k 2 --plexes " + tmp.path("missing.txt"));
        CHECK(r.status == 5);
        CHECK(r.out.find("missing a b c 4 5\n") != std::string::npos);

        {
            std::ofstream extra(tmp.path("extra.txt"));
            extra << full << "c a 2 3\n";
        }
        r = run("oracle " + kTriangle + " --delta 1 --k 2 --plexes " + tmp.path("extra.txt"));
        CHECK(r.status == 5);
        CHECK(r.out.find("extra a c 2 3\n") != std::string::npos);

        {
            std::ofstream bad(tmp.path("bad.txt"));
            bad << "a b\n";
        }
        CHECK(run("oracle " + kTriangle + " --delta 1 --k 2 --plexes " + tmp.path("bad.txt")).status == 3);

        REQUIRE(run("enumerate " + kTriangle + " --delta 0 --k 1 --connected --output " + tmp.path("c.txt")).status ==
                0);
        CHECK(run("oracle " + kTriangle + " --delta 0 --k 1 --connected --plexes " + tmp.path("c.txt")).status == 0);
    }

    TEST_CASE("flag matrix agrees with the oracle on the fixture")
    {
        Scratch tmp;
        for (int delta = 0; delta <= 2; ++delta) {
            for (int k = 1; k <= 3; ++k) {
                for (const char* flags : {"", " --pivoting", " --connected", " --pivoting --connected"}) {
                    const std::string base = kTriangle + " --delta " + std::to_string(delta) + " --k " +
                                             std::to_string(k);
                    REQUIRE(run("enumerate " + base + flags + " --output " + tmp.path("m.txt")).status == 0);
                    const bool connected = std::string(flags).find("connected") != std::string::npos;
                    CHECK(run("oracle " + base + (connected ? " --connected" : "") + " --plexes " + tmp.path("m.txt"))
                              .status == 0);
                }
            }
        }
    }
}
