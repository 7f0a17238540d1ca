#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ek/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("ek_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    const fs::path out_file = work_dir() / "stdout.txt";
    const std::string cmd =
        std::string(EK_CLI_PATH) + " " + args + " >" + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = ek::read_text_file(out_file);
    return r;
}

fs::path write(const std::string& name, const std::string& content) {
    const fs::path p = work_dir() / name;
    ek::write_text_file(p, content);
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("construct, derive, kemeny, plot chain") {
    const fs::path tour = write("triangle.tour", "n 3\n0 1 2\n1 2 2\n2 0 2\n");
    const fs::path emb = work_dir() / "triangle.l2.json";
    const fs::path prof = work_dir() / "triangle.prof";
    const fs::path svg = work_dir() / "triangle.svg";

    const RunResult c =
        run("construct --norm l2 --in " + tour.string() + " --out " + emb.string());
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("voters: 6") != std::string::npos);

    const RunResult d = run("derive --in " + emb.string() + " --out " + prof.string());
    CHECK(d.exit_code == 0);

    const RunResult k = run("kemeny --in " + prof.string());
    CHECK(k.exit_code == 0);
    CHECK(k.out.find("cost: 8") != std::string::npos);

    const RunResult kb = run("kemeny --in " + prof.string() + " --brute-force");
    CHECK(kb.exit_code == 0);
    CHECK(kb.out.find("optima:") != std::string::npos);

    const RunResult pl = run("plot --in " + emb.string() + " --out " + svg.string() + " --labels");
    CHECK(pl.exit_code == 0);
    CHECK(ek::read_text_file(svg).find("<svg") != std::string::npos);

    // identical invocations produce byte-identical files
    const fs::path emb2 = work_dir() / "triangle2.l2.json";
    run("construct --norm l2 --in " + tour.string() + " --out " + emb2.string());
    CHECK(ek::read_text_file(emb) == ek::read_text_file(emb2));
}

TEST_CASE("derive on the hand-placed three points") {
    // v at the origin, candidates at (4,4) and (7,0): l1 ranks c2 first
    const fs::path emb = write("fig.json", R"({"norm":"l1",
        "candidates":[{"id":0,"x":"4/1","y":"4/1"},{"id":1,"x":"7/1","y":"0/1"}],
        "voters":[{"label":"v","x":"0/1","y":"0/1","multiplicity":1}]})");
    const fs::path prof = work_dir() / "fig.prof";
    CHECK(run("derive --in " + emb.string() + " --out " + prof.string()).exit_code == 0);
    CHECK(ek::read_text_file(prof) == "candidates 2\n1 : 1 > 0\n");
}

TEST_CASE("kemeny output on a hand profile") {
    const fs::path prof =
        write("cycle.prof", "candidates 3\n1 : 0 > 1 > 2\n1 : 1 > 2 > 0\n1 : 2 > 0 > 1\n");
    const RunResult k = run("kemeny --in " + prof.string() + " --brute-force");
    CHECK(k.exit_code == 0);
    CHECK(k.out.find("ranking: 0 > 1 > 2") != std::string::npos);
    CHECK(k.out.find("cost: 4") != std::string::npos);
    CHECK(k.out.find("optima: 3") != std::string::npos);
}

TEST_CASE("slater on a transitive tournament") {
    const fs::path tour = write("trans.tour", "n 3\n0 1 2\n0 2 2\n1 2 2\n");
    const RunResult s = run("slater --in " + tour.string());
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("ranking: 0 > 1 > 2") != std::string::npos);
    CHECK(s.out.find("cost: 0") != std::string::npos);
}

TEST_CASE("verify and pipeline report PASS") {
    const fs::path tour = write("bip.tour", "n 3\n0 2 4\n1 2 2\n");
    for (const std::string norm : {"l1", "l2", "linf"}) {
        const RunResult v = run("verify --norm " + norm + " --in " + tour.string());
        CHECK(v.exit_code == 0);
        CHECK(v.out.find("PASS") != std::string::npos);
    }

    const fs::path fas = write("tri.fas", "n 3\n0 1\n1 2\n2 0\n");
    const RunResult p = run("pipeline --norm l2 --in " + fas.string());
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("implied fas: 1") != std::string::npos);
    CHECK(p.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit code contract") {
    // 2: parse errors
    const fs::path bad = write("bad.tour", "n 3\n0 1\n");
    CHECK(run("construct --norm l2 --in " + bad.string() + " --out /dev/null").exit_code == 2);
    CHECK(run("slater --in " + work_dir().string() + "/does_not_exist").exit_code == 2);

    // 2: planar l2 is not a supported embedding format
    const fs::path planar_l2 = write(
        "planarl2.json",
        R"({"norm":"l2","candidates":[{"id":0,"x":"0/1","y":"0/1"}],"voters":[]})");
    CHECK(run("derive --in " + planar_l2.string() + " --out /dev/null").exit_code == 2);

    // 2: deriving an embedding with no voters cannot produce a profile
    const fs::path empty = write(
        "empty.json",
        R"({"norm":"l1","candidates":[{"id":0,"x":"0/1","y":"0/1"}],"voters":[]})");
    CHECK(run("derive --in " + empty.string() + " --out /dev/null").exit_code == 2);

    // 3: parity violation (odd weights on the square constructions)
    const fs::path odd = write("odd.tour", "n 2\n0 1 1\n");
    const RunResult o = run("construct --norm l1 --in " + odd.string() + " --out /dev/null");
    CHECK(o.exit_code == 3);
    CHECK(o.out.find("parity") != std::string::npos);

    // 3: non-bipartite tournament on the square constructions
    const fs::path tri = write("tri.tour", "n 3\n0 1 2\n1 2 2\n2 0 2\n");
    CHECK(run("construct --norm linf --in " + tri.string() + " --out /dev/null").exit_code == 3);
    CHECK(run("pipeline --norm l1 --in " + write("tri2.fas", "n 3\n0 1\n1 2\n2 0\n").string())
              .exit_code == 3);

    // 4: tie in a hand-edited embedding
    const fs::path tie = write("tie.json", R"({"norm":"l1",
        "candidates":[{"id":0,"x":"1/1","y":"1/1"},{"id":1,"x":"2/1","y":"0/1"}],
        "voters":[{"label":"v","x":"0/1","y":"0/1","multiplicity":1}]})");
    const RunResult t = run("derive --in " + tie.string() + " --out /dev/null");
    CHECK(t.exit_code == 4);
    CHECK(t.out.find("equidistant") != std::string::npos);

    // 5: capacity guard
    std::string big = "candidates 11\n1 :";
    for (int i = 0; i < 11; ++i) big += (i ? " > " : " ") + std::to_string(i);
    big += "\n";
    const fs::path bigp = write("big.prof", big);
    CHECK(run("kemeny --in " + bigp.string() + " --brute-force").exit_code == 5);

    // 6: verification failure (mixed parity cannot be constructed)
    const fs::path mixed = write("mixed.tour", "n 3\n0 1 1\n0 2 2\n1 2 1\n");
    const RunResult m = run("verify --norm l2 --in " + mixed.string());
    CHECK(m.exit_code == 6);
    CHECK(m.out.find("FAIL") != std::string::npos);
}

TEST_CASE("gen honors EK_SEED") {
    const fs::path a = work_dir() / "gen_a.tour";
    const fs::path b = work_dir() / "gen_b.tour";
    const fs::path c = work_dir() / "gen_c.tour";
    const std::string base = "gen --kind even-bipartite --n 6 --max-weight 10 --out ";
    CHECK(std::system(("EK_SEED=7 " + std::string(EK_CLI_PATH) + " " + base + a.string() +
                       " >/dev/null 2>&1")
                          .c_str()) == 0);
    CHECK(std::system(("EK_SEED=7 " + std::string(EK_CLI_PATH) + " " + base + b.string() +
                       " >/dev/null 2>&1")
                          .c_str()) == 0);
    CHECK(std::system(("EK_SEED=8 " + std::string(EK_CLI_PATH) + " " + base + c.string() +
                       " >/dev/null 2>&1")
                          .c_str()) == 0);
    CHECK(ek::read_text_file(a) == ek::read_text_file(b));
    CHECK(ek::read_text_file(a) != ek::read_text_file(c));

    // generated tournaments are valid inputs downstream
    const RunResult v = run("verify --norm l1 --in " + a.string());
    CHECK(v.exit_code == 0);
}

TEST_SUITE_END();
