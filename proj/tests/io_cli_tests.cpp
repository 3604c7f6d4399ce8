#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xmodlink/builtins.hpp"
#include "xmodlink/cli.hpp"
#include "xmodlink/invariant.hpp"
#include "xmodlink/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

using namespace xmodlink;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("xmodlink_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        auto p = (path / name).string();
        std::ofstream out(p);
        out << content;
        return p;
    }
};

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

struct CliRun {
    int exit;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("group files round trip") {
    TempDir tmp;
    auto s3 = symmetric_group(3);
    auto path = (tmp.path / "s3.grp").string();
    save_group(path, s3, "S3");
    auto back = load_group(path);
    REQUIRE(back->order() == 6);
    for (int a = 0; a < 6; ++a) {
        CHECK(back->name(a) == s3->name(a));
        for (int b = 0; b < 6; ++b) CHECK(back->mult(a, b) == s3->mult(a, b));
    }
}

TEST_CASE("group file parse errors are line-numbered") {
    TempDir tmp;
    auto bad1 = tmp.file("dup.grp", "group G 2\nelements a a\na a\na a\n");
    try {
        load_group(bad1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("dup.grp:2") != std::string::npos);
    }
    auto bad2 = tmp.file("dim.grp", "group G 2\nelements a b\na b\nb\n");
    try {
        load_group(bad2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find(":4") != std::string::npos);
    }
    auto bad3 = tmp.file("tok.grp", "group G 2\nelements a b\na c\nb a\n");
    CHECK(code_of([&] { load_group(bad3); }) == "ParseError");
    CHECK(code_of([&] { load_group((tmp.path / "missing.grp").string()); }) ==
          "FileNotFound");
}

TEST_CASE("xmod files") {
    TempDir tmp;
    save_group((tmp.path / "z3.grp").string(), cyclic_group(3), "Z3");
    auto xmod_path = tmp.file("conj.xmod",
                              "xmod conj-z3\n"
                              "base z3.grp\n"
                              "fiber z3.grp\n"
                              "boundary:\n0 -> 0\n1 -> 1\n2 -> 2\n"
                              "action:\ndefault: trivial\n");
    auto xm = load_xmod(xmod_path);
    CHECK(xm->base()->order() == 3);
    for (int g = 0; g < 3; ++g)
        for (int e = 0; e < 3; ++e) CHECK(xm->act(g, e) == e);

    // missing action entries without a default are rejected
    auto bad = tmp.file("bad.xmod",
                        "xmod bad\nbase z3.grp\nfiber z3.grp\n"
                        "boundary:\n0 -> 0\n1 -> 1\n2 -> 2\n"
                        "action:\n0 0 -> 0\n");
    CHECK(code_of([&] { load_xmod(bad); }) == "ParseError");
    // Peiffer failures propagate with the validating code
    save_group((tmp.path / "s3.grp").string(), symmetric_group(3), "S3");
    auto peif = tmp.file("peif.xmod",
                         "xmod peif\nbase s3.grp\nfiber s3.grp\n"
                         "boundary:\nid -> id\n(12) -> id\n(13) -> id\n(23) -> id\n"
                         "(123) -> id\n(132) -> id\n"
                         "action:\ndefault: trivial\n");
    CHECK(code_of([&] { load_xmod(peif); }) == "Peiffer2Violation");
}

TEST_CASE("rack, cocycle and pair files") {
    TempDir tmp;
    auto rck = tmp.file("d3.rck", "rack dihedral3 3\nelements 0 1 2\n0 2 1\n2 1 0\n1 0 2\n");
    auto rack = load_rack(rck);
    CHECK(rack->is_quandle());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(rack->lop(x, y) == dihedral_quandle(3)->lop(x, y));

    auto badrck = tmp.file("bad.rck", "rack r 3\nelements 0 1 2\n0 1 2\n0 1 2\n0 1 2\n");
    CHECK(code_of([&] { load_rack(badrck); }) == "NotBijective");

    save_group((tmp.path / "z3.grp").string(), cyclic_group(3), "Z3");
    auto coc = tmp.file("zero.coc",
                        "cocycle zero\nrack d3.rck\nvalues z3.grp\nw:\n0 0 0\n0 0 0\n0 0 0\n");
    auto c = load_cocycle(coc);
    CHECK(is_quandle_cocycle(c));

    // pair file: the dihedral rack pair written out longhand
    auto z3 = cyclic_group(3);
    auto p = pair_from_rack(dihedral_quandle(3), z3);
    std::ostringstream pf;
    pf << "pair d3\nxmod conjz3.xmod\npsi:\n";
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) pf << x << " " << y << " -> " << p->psi(x, y) << "\n";
    pf << "phi:\n";
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) pf << x << " " << y << " -> " << p->phi(x, y) << "\n";
    tmp.file("conjz3.xmod", "xmod conj-z3\nbase z3.grp\nfiber z3.grp\n"
                            "boundary:\n0 -> 0\n1 -> 1\n2 -> 2\naction:\ndefault: trivial\n");
    auto pair_path = tmp.file("d3.pair", pf.str());
    auto loaded = load_pair(pair_path);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            CHECK(loaded->psi(x, y) == p->psi(x, y));
            CHECK(loaded->phi(x, y) == p->phi(x, y));
        }
    CHECK(check_unframed(*loaded).passed);

    auto short_pair = tmp.file("short.pair", "pair p\nxmod conjz3.xmod\npsi:\n0 0 -> 0\n");
    CHECK(code_of([&] { load_pair(short_pair); }) == "ParseError");
}

TEST_CASE("diagram files") {
    TempDir tmp;
    auto tng = tmp.file("trefoil.tng", diagram_serialize(trefoil_plus_string()));
    CHECK(load_diagram(tng) == trefoil_plus_string());
    auto bad = tmp.file("bad.tng", "top: v\nx+\n");
    try {
        load_diagram(bad);
        FAIL("expected SignatureMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == "SignatureMismatch");
        CHECK(std::string(e.what()).find("bad.tng") != std::string::npos);
    }
}

TEST_CASE("invariant TSV format") {
    auto z3 = cyclic_group(3);
    auto rp = pair_from_rack(dihedral_quandle(3), z3);
    auto r = state_sum(closure(trefoil_plus_string()), rp, {z3, {}}, {z3, {}});
    CHECK(invariant_tsv(r, rp->fiber()) == "source:\t\ntarget:\t\n9\t0\n");

    auto s3 = symmetric_group(3);
    auto p = eisermann_pair(s3, {s3, s3->element("(12)")}, false);
    EnhancedWord one{s3, {{s3->identity(), false}}};
    auto m = invariant_matrix(trefoil_plus_string(), p, one);
    std::string all;
    for (const auto& [bw, res] : m) all += invariant_tsv(res, p->fiber());
    CHECK(all.find("source:\tid\n") != std::string::npos);
}

TEST_CASE("cli basics") {
    auto r = cli({"builtins"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("eisermann") != std::string::npos);

    r = cli({"check-pair", "--builtin", "eisermann:S4:x=(12)"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = cli({"check-pair", "--builtin", "rackpair:cyclic:3"});
    CHECK(r.exit == 1);
    CHECK(r.out.find("R1") != std::string::npos);

    r = cli({"check-pair", "--builtin", "rackpair:cyclic:3", "--framed"});
    CHECK(r.exit == 0);

    r = cli({"check-pair", "--builtin", "eisermann:S3:x=(123)", "--r3prime"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("R3'") != std::string::npos);
}

TEST_CASE("cli moves") {
    auto r = cli({"moves", "--builtin", "rackpair:dihedral:3"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("15/15 relations hold") != std::string::npos);
    CHECK(r.out.find("framed set 15/15") != std::string::npos);

    r = cli({"moves", "--builtin", "rackpair:cyclic:3"});
    CHECK(r.exit == 1);
    CHECK(r.out.find("R1 FAILED") != std::string::npos);
    CHECK(r.out.find("13/15 relations hold") != std::string::npos);
    CHECK(r.out.find("framed set 15/15") != std::string::npos);

    r = cli({"moves", "--builtin", "rackpair:cyclic:3", "--framed"});
    CHECK(r.exit == 0);
}

TEST_CASE("cli invariant and rack-count") {
    TempDir tmp;
    auto out_path = (tmp.path / "result.tsv").string();
    auto r = cli({"invariant", "--builtin", "eisermann:S3:x=(12)", "--diagram",
                  "diagram:trefoil+string", "--top", "id", "--bottom", "id",
                  "--output", out_path});
    CHECK(r.exit == 0);
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("source:\tid\n") == 0);

    r = cli({"invariant", "--builtin", "eisermann:S3:x=(12)", "--diagram",
             "diagram:trefoil+closed", "--top", ""});
    CHECK(r.exit == 0);

    r = cli({"rack-count", "--builtin", "rack:dihedral:3", "--diagram",
             "diagram:trefoil+closed", "--top", ""});
    CHECK(r.exit == 0);
    CHECK(r.out.find("9") != std::string::npos);

    r = cli({"rack-count", "--builtin", "rack:dihedral:3", "--diagram",
             "diagram:fig8closed", "--top", ""});
    CHECK(r.out.find("3") != std::string::npos);
}

TEST_CASE("cli error paths exit with 2 and a located message") {
    TempDir tmp;
    auto r = cli({"frobnicate"});
    CHECK(r.exit == 2);

    r = cli({"check-pair", "--builtin", "nosuch:pair"});
    CHECK(r.exit == 2);
    CHECK(r.err.find("UnknownBuiltin") != std::string::npos);

    r = cli({"check-pair", "--pair", (tmp.path / "missing.pair").string()});
    CHECK(r.exit == 2);
    CHECK(r.err.find("missing.pair") != std::string::npos);

    auto bad = tmp.file("bad.tng", "top: v\nx+\n");
    r = cli({"invariant", "--builtin", "eisermann:S3:x=(12)", "--diagram", bad, "--top",
             "id", "--bottom", "id"});
    CHECK(r.exit == 2);
    CHECK(r.err.find("bad.tng") != std::string::npos);

    r = cli({"invariant", "--builtin", "eisermann:S3:x=(12)", "--diagram",
             "diagram:trefoil+string", "--top", "nosuchelement", "--bottom", "id"});
    CHECK(r.exit == 2);

    r = cli({"tables", "--which", "nonsense"});
    CHECK(r.exit == 2);

    r = cli({"check-pair"});
    CHECK(r.exit == 2);
    CHECK(r.err.find("MissingOption") != std::string::npos);

    // starred entry on a downward strand
    r = cli({"invariant", "--builtin", "eisermann:S3:x=(12)", "--diagram",
             "diagram:trefoil+string", "--top", "id*", "--bottom", "id"});
    CHECK(r.exit == 2);
    CHECK(r.err.find("WordSignatureMismatch") != std::string::npos);
}

TEST_CASE("cli tables determinism across workers") {
    TempDir tmp;
    auto p1 = (tmp.path / "t1.tsv").string();
    auto p8 = (tmp.path / "t8.tsv").string();
    auto r1 = cli({"tables", "--which", "eisermann-s5", "--workers", "1", "--output", p1});
    auto r8 = cli({"tables", "--which", "eisermann-s5", "--workers", "8", "--output", p8});
    CHECK(r1.exit == 0);
    CHECK(r8.exit == 0);
    CHECK(r1.out == r8.out);
    std::ifstream f1(p1), f8(p8);
    std::stringstream s1, s8;
    s1 << f1.rdbuf();
    s8 << f8.rdbuf();
    CHECK(s1.str() == s8.str());
    CHECK(!s1.str().empty());
    CHECK(r1.out.find("id + 5(12345)") != std::string::npos);
}
