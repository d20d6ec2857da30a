// End-to-end tests that drive the installed binary through a shell, checking
// stdout, stderr, and exit codes. The build passes the binary location in
// KROBUST_CLI.

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "krobust_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream out(p);
    out << content;
    REQUIRE(out.good());
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path errfile = work_dir() / ("stderr_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(KROBUST_CLI) + " " + args + " 2>" + errfile.string();
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = read_file(errfile);
    return r;
}

const std::string kC4Text = "4 4\n0 1\n0 3\n1 2\n2 3\n";
const std::string kC6Text = "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n";

}  // namespace

TEST_CASE("cli generate", "[cli]") {
    auto r = run_cli("generate cycle 4");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == kC4Text);

    r = run_cli("generate complete_bipartite 2 3");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");

    r = run_cli("generate cycle 2");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("cycle needs n >= 3") != std::string::npos);

    r = run_cli("generate cycle x");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("bad family parameter") != std::string::npos);

    r = run_cli("generate moebius 4");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("unknown family 'moebius'") != std::string::npos);
}

TEST_CASE("cli verify", "[cli]") {
    fs::path g = write_file("c4.graph", kC4Text);
    fs::path good = write_file("c4_mis.sol", "0 2\n");
    fs::path bad = write_file("c4_bad.sol", "0\n");

    auto r = run_cli("verify --problem mis --graph " + g.string() + " --solution " +
                     good.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "VALID\n");

    r = run_cli("verify --problem mis --graph " + g.string() + " --solution " + bad.string());
    REQUIRE(r.code == 1);
    REQUIRE(r.out == "INVALID\n");

    fs::path oob = write_file("c4_oob.sol", "9\n");
    r = run_cli("verify --problem mis --graph " + g.string() + " --solution " + oob.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("out of range") != std::string::npos);

    r = run_cli("verify --problem mis --graph " + (work_dir() / "missing.graph").string() +
                " --solution " + good.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("cli robust", "[cli]") {
    fs::path g = write_file("c6.graph", kC6Text);
    fs::path perfect = write_file("c6_perfect.sol", "0 1\n2 3\n4 5\n");
    fs::path near = write_file("c6_near.sol", "0 1\n3 4\n");

    auto r = run_cli("robust --problem mm --k 1 --graph " + g.string() + " --solution " +
                     perfect.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "ROBUST\n");

    r = run_cli("robust --problem mm --k inf --graph " + g.string() + " --solution " +
                perfect.string());
    REQUIRE(r.code == 0);

    r = run_cli("robust --problem mm --k 1 --graph " + g.string() + " --solution " +
                near.string());
    REQUIRE(r.code == 1);
    REQUIRE(r.out == "NOT-ROBUST\nREMOVE: (0,1)\nWITNESS: (0,5)\n");

    fs::path p3 = write_file("p3.graph", "3 2\n0 1\n1 2\n");
    fs::path mid = write_file("p3_mid.sol", "1\n");
    r = run_cli("robust --problem mis --k inf --graph " + p3.string() + " --solution " +
                mid.string());
    REQUIRE(r.code == 0);

    r = run_cli("robust --problem mis --k=-3 --graph " + p3.string() + " --solution " +
                mid.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("bad budget") != std::string::npos);
}

TEST_CASE("cli classify", "[cli]") {
    fs::path c4 = write_file("c4c.graph", kC4Text);

    auto r = run_cli("classify --problem mds --k 1 --method theorem --graph " + c4.string());
    REQUIRE(r.code == 1);
    REQUIRE(r.out == "NON-MEMBER\nMETHOD: theorem\n");

    r = run_cli("classify --problem mds --k 1 --method bruteforce --graph " + c4.string());
    REQUIRE(r.code == 1);
    REQUIRE(r.out ==
            "NON-MEMBER\nMETHOD: bruteforce\nSOLUTION: 0 1\nREMOVE: (0,3)\nWITNESS: 3\n");

    r = run_cli("classify --problem mis --k 1 --graph " + c4.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "MEMBER\nMETHOD: oracle (no known characterization)\n");

    r = run_cli("classify --problem mm --k 2 --method theorem --graph " + c4.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "MEMBER\nMETHOD: theorem\n");

    fs::path c5 = write_file("c5c.graph", "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    r = run_cli("classify --problem mis --k 1 --mode existential --graph " + c5.string());
    REQUIRE(r.code == 1);
    REQUIRE(r.out == "NON-MEMBER\nMETHOD: bruteforce\n");

    r = run_cli("classify --problem mis --k 1 --mode existential --graph " + c4.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "MEMBER\nMETHOD: bruteforce\nSOLUTION: 0 2\n");

    r = run_cli("classify --problem mis --k 1 --mode existential --method theorem --graph " +
                c4.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("no theorem method") != std::string::npos);

    r = run_cli("classify --problem mis --k 1 --method theorem --graph " + c4.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("no closed-form characterization") != std::string::npos);
}

TEST_CASE("cli find", "[cli]") {
    fs::path c4 = write_file("c4f.graph", kC4Text);
    fs::path c5 = write_file("c5f.graph", "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    fs::path p3 = write_file("p3f.graph", "3 2\n0 1\n1 2\n");

    auto r = run_cli("find --problem mis --k 1 --graph " + c4.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0 2\n");

    r = run_cli("find --problem mis --k 1 --graph " + c5.string());
    REQUIRE(r.code == 1);
    REQUIRE(r.out == "NONE\n");

    r = run_cli("find --problem mis --k 1 --via-2domination --graph " + c4.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0 2\n");

    r = run_cli("find --problem mis --k 1 --via-2domination --graph " + p3.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("2-edge-connected") != std::string::npos);

    r = run_cli("find --problem mds --k 1 --via-2domination --graph " + c4.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("--problem mis --k 1 only") != std::string::npos);

    fs::path k3 = write_file("k3f.graph", "3 3\n0 1\n0 2\n1 2\n");
    r = run_cli("find --problem mm --k 1 --graph " + k3.string());
    REQUIRE(r.code == 1);
    REQUIRE(r.out == "NONE\n");

    r = run_cli("find --problem mm --k 1 --graph " + c4.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0 1\n2 3\n");
}

TEST_CASE("cli enumerate", "[cli]") {
    fs::path p3 = write_file("p3e.graph", "3 2\n0 1\n1 2\n");
    auto r = run_cli("enumerate --problem mds --graph " + p3.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0 2\n1\n");

    fs::path k3 = write_file("k3e.graph", "3 3\n0 1\n0 2\n1 2\n");
    r = run_cli("enumerate --problem mm --graph " + k3.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "0 1\n0 2\n1 2\n");

    fs::path p21 = write_file("p21e.graph", [] {
        std::string text = "21 20\n";
        for (int v = 0; v + 1 < 21; ++v)
            text += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
        return text;
    }());
    r = run_cli("enumerate --problem mis --graph " + p21.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("guard: n <= 20") != std::string::npos);
    r = run_cli("enumerate --problem mis --override-guards --graph " + p21.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out.size() > 1000);  // plenty of independent sets on a long path
}

TEST_CASE("cli construct", "[cli]") {
    auto r = run_cli("construct gk 1");
    REQUIRE(r.code == 0);
    REQUIRE(r.out ==
            "7 10\n0 3\n0 4\n0 5\n0 6\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n# u=0 v=6 A=0..2 B=3..5\n");

    // The emitted file parses back (the trailer is a comment) and classifies
    // as a member at k = 1.
    fs::path gk1 = write_file("gk1.graph", r.out);
    r = run_cli("classify --problem mis --k 1 --graph " + gk1.string());
    REQUIRE(r.code == 0);
    r = run_cli("classify --problem mis --k 2 --graph " + gk1.string());
    REQUIRE(r.code == 1);

    fs::path k2 = write_file("k2.graph", "2 1\n0 1\n");
    r = run_cli("construct blowup " + k2.string() + " 2");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == kC4Text);

    fs::path p3 = write_file("p3c.graph", "3 2\n0 1\n1 2\n");
    r = run_cli("construct universal " + p3.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "4 5\n0 1\n0 3\n1 2\n1 3\n2 3\n");

    fs::path k3 = write_file("k3c.graph", "3 3\n0 1\n0 2\n1 2\n");
    r = run_cli("construct sputnikify " + k3.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "6 6\n0 1\n0 2\n0 3\n1 2\n1 4\n2 5\n");

    fs::path e2 = write_file("e2.graph", "2 0\n");
    r = run_cli("construct join " + e2.string() + " " + e2.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "4 4\n0 2\n0 3\n1 2\n1 3\n");

    r = run_cli("construct gk");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("takes 1 argument") != std::string::npos);

    r = run_cli("construct pyramid 3");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("unknown construction 'pyramid'") != std::string::npos);
}

TEST_CASE("cli usage errors", "[cli]") {
    auto r = run_cli("");
    REQUIRE(r.code == 2);

    r = run_cli("robust --problem mm --k 1");
    REQUIRE(r.code == 2);  // --graph and --solution are required

    r = run_cli("--help");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("generate") != std::string::npos);

    fs::path c4 = write_file("c4u.graph", kC4Text);
    r = run_cli("classify --problem mis --k 1 --mode sideways --graph " + c4.string());
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("unknown mode 'sideways'") != std::string::npos);
}

TEST_CASE("cli sweep smoke run", "[cli]") {
    auto r = run_cli("sweep --max-n 3");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("FAIL") == std::string::npos);
    // One line per criterion, all passing.
    int passes = 0;
    std::size_t at = 0;
    while ((at = r.out.find("PASS ", at)) != std::string::npos) {
        ++passes;
        at += 5;
    }
    REQUIRE(passes == 10);

    r = run_cli("sweep --max-n 11");
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("between 1 and 7") != std::string::npos);
}
