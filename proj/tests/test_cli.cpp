// drives the installed binary end to end: golden output lines, exit codes,
// record determinism

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TRIAS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const char* name) {
    return std::string(TRIAS_FIXTURE_DIR) + "/" + name;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

bool has_line_with(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string temp_file(const char* name, const std::string& body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("a clean file checks out in one line per block") {
    auto r = run_cli("check " + fixture("abelian2.trias"));
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(!ls.empty());
    CHECK(ls[0] == "11/11 axioms hold");
    CHECK(has_line_with(r.out, "rep zero: ok"));
    CHECK(has_line_with(r.out, "corep trivial: ok"));
}

TEST_CASE("the tree listing matches the catalogue") {
    auto r3 = run_cli("trees --n 3");
    CHECK(r3.code == 0);
    auto ls = lines_of(r3.out);
    REQUIRE(!ls.empty());
    CHECK(ls[0] == "T_3: 11 trees");
    CHECK(ls.size() == 13);  // banner, header, 11 rows

    auto r0 = run_cli("trees 0");
    CHECK(r0.code == 0);
    CHECK(has_line_with(r0.out, "T_0: 1 tree"));
    CHECK(lines_of(r0.out).size() == 3);

    auto r4 = run_cli("trees 4");
    CHECK(r4.code == 0);
    CHECK(has_line_with(r4.out, "T_4: 45 trees"));

    // positional and flag spellings agree
    CHECK(run_cli("trees 3").out == r3.out);
}

TEST_CASE("degrees beyond the cap exit with the resource code") {
    auto r = run_cli("trees --n 5 --n-max 4");
    CHECK(r.code == 2);
    CHECK(has_line_with(r.out, "resource limit"));
    auto rc = run_cli("cohomology " + fixture("assoc1.trias") + " adjoint --n 5 --n-max 4");
    CHECK(rc.code == 2);
}

TEST_CASE("the enveloping summary is a single golden line") {
    auto r = run_cli("uea " + fixture("abelian2.trias"));
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(!ls.empty());
    CHECK(ls[0] == "gr: 1, 12, 28; total 41; pbw: true");
}

TEST_CASE("cohomology and homology tables carry the computed ranks") {
    auto r = run_cli("cohomology " + fixture("assoc1.trias") + " adjoint --n 1");
    CHECK(r.code == 0);
    CHECK(has_line_with(r.out, "dim C^n"));
    CHECK(lines_of(r.out).size() == 3);

    auto rec = run_cli("--records cohomology " + fixture("dual.trias") + " adjoint --n 2");
    CHECK(rec.code == 0);
    CHECK(has_line_with(rec.out, "n=0 dim=2 rank=0 h=2"));
    CHECK(has_line_with(rec.out, "n=1 dim=4 rank=3 h=1"));
    CHECK(has_line_with(rec.out, "n=2 dim=24 rank=20 h=1"));

    auto hom = run_cli("--records homology " + fixture("assoc1.trias") + " trivial --n 1");
    CHECK(hom.code == 0);
    CHECK(has_line_with(hom.out, "n=0 dim=1 rank=0 h=1"));
    CHECK(has_line_with(hom.out, "n=1 dim=1 rank=0 h=0"));
}

TEST_CASE("record runs are byte-identical") {
    const std::string args = "--records check " + fixture("dual.trias");
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    REQUIRE(!a.out.empty());
    CHECK(lines_of(a.out)[0] == "run cmd=check field=q n-max=6 seed=0 budget=4000000");

    // the seed is recorded but never alters a computation
    auto c = run_cli("--seed 7 --records check " + fixture("dual.trias"));
    auto als = lines_of(a.out);
    auto cls = lines_of(c.out);
    REQUIRE(als.size() == cls.size());
    for (std::size_t i = 1; i < als.size(); ++i) CHECK(als[i] == cls[i]);
}

TEST_CASE("parse failures name the offending line") {
    auto path = temp_file("cli_bad_keyword.trias", "nonsense 1 2 3\n");
    auto r = run_cli("check " + path);
    CHECK(r.code == 1);
    CHECK(has_line_with(r.out, "line 1"));
}

TEST_CASE("validation failures name the violated axiom") {
    auto path = temp_file("cli_left_only.trias",
                          "field q\ndim 1\nleft 0 0 0 1\n");
    auto r = run_cli("check " + path);
    CHECK(r.code == 1);
    CHECK(has_line_with(r.out, "axiom 2"));

    // downstream commands refuse an invalid algebra before computing
    auto ru = run_cli("uea " + path);
    CHECK(ru.code == 1);
    CHECK(has_line_with(ru.out, "axiom"));
}

TEST_CASE("deform actions report the ladder in plain words") {
    const auto dual = fixture("dual.trias");
    auto chk = run_cli("deform " + dual + " check");
    CHECK(chk.code == 0);
    CHECK(has_line_with(chk.out, "identities hold through t^1"));

    auto inf = run_cli("deform " + dual + " infinitesimal");
    CHECK(inf.code == 0);
    CHECK(has_line_with(inf.out, "first nonzero term at t^1"));
    CHECK(has_line_with(inf.out, "two-cocycle: yes"));
    CHECK(has_line_with(inf.out, "lambda 1 1 0 1"));

    auto ob = run_cli("deform " + dual + " obstruct");
    CHECK(ob.code == 0);
    CHECK(has_line_with(ob.out, "obstruction at t^2: zero"));

    auto ext = run_cli("deform " + dual + " extend");
    CHECK(ext.code == 0);
    CHECK(has_line_with(ext.out, "extends to order 2: yes"));

    auto rig = run_cli("deform " + dual + " rigidity");
    CHECK(rig.code == 0);
    CHECK(has_line_with(rig.out, "dim H^2 = 1"));
    CHECK(has_line_with(rig.out, "rigid: no"));
    CHECK(has_line_with(rig.out, "(complete)"));

    auto rigid = run_cli("deform " + fixture("assoc1.trias") + " rigidity");
    CHECK(rigid.code == 0);
    CHECK(has_line_with(rigid.out, "dim H^2 = 0"));
    CHECK(has_line_with(rigid.out, "rigid: yes"));

    auto missing = run_cli("deform " + dual + " check --name nope");
    CHECK(missing.code == 1);
}

TEST_CASE("prime fields reproduce the rational dimensions") {
    auto q = run_cli("--records cohomology " + fixture("dual.trias") + " adjoint --n 2");
    auto p = run_cli("--field p:1009 --records cohomology " + fixture("dual.trias") +
                     " adjoint --n 2");
    CHECK(p.code == 0);
    auto ql = lines_of(q.out), pl = lines_of(p.out);
    REQUIRE(ql.size() == pl.size());
    for (std::size_t i = 1; i < ql.size(); ++i) {
        auto tail = [](const std::string& s) { return s.substr(s.find(" h=")); };
        CHECK(tail(ql[i]) == tail(pl[i]));
    }

    auto bad = run_cli("--field p:4 uea " + fixture("dual.trias"));
    CHECK(bad.code == 1);
}
