// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from the published tables, with the
// cross-checked corrections at the (12345)-type column of the lifted table
// (see the README notes on conventions).

#include "xmodlink/builtins.hpp"
#include "xmodlink/invariant.hpp"
#include "xmodlink/io.hpp"
#include "xmodlink/tables.hpp"
#include "xmodlink/wirtinger.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using namespace xmodlink;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::ostringstream detail;

void report(int number, const std::string& name, bool ok, double secs) {
    std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL")
              << "  [" << secs << " s]\n";
    if (!ok) {
        ++failures;
        std::cout << detail.str();
    }
    detail.str("");
}

template <typename F> void criterion(int number, const std::string& name, F&& body) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail << "  exception: " << e.what() << "\n";
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(number, name, ok, secs);
}

bool expect_cell(const GroupAlgebraElement& got, const std::string& want,
                 const std::string& where) {
    if (ga_to_string(got) == want) return true;
    detail << "  " << where << ": got " << ga_to_string(got) << ", want " << want << "\n";
    return false;
}

std::map<int, Integer> nonzero(const std::map<int, Integer>& m) {
    std::map<int, Integer> out;
    for (const auto& [k, v] : m)
        if (v != 0) out[k] = v;
    return out;
}

bool criterion1() {
    auto t = eisermann_s5_table();
    const std::vector<std::string> minus = {"id",       "7id", "5id", "7id",
                                            "id",       "id + 4(13)(24)",
                                            "id + 5(12345)"};
    const std::vector<std::string> plus = {"id",       "7id", "5id", "7id",
                                           "id",       "id + 4(13)(24)",
                                           "id + 5(15432)"};
    bool ok = t.columns.size() == 7;
    for (size_t i = 0; i < 7 && ok; ++i) {
        ok = expect_cell(t.k_minus[i], minus[i], "K- at x=" + t.columns[i]) &&
             expect_cell(t.k_plus[i], plus[i], "K+ at x=" + t.columns[i]);
    }
    return ok;
}

bool criterion2() {
    auto lifted = lifted_gl25_table();
    auto unlifted = unlifted_pgl25_table();
    const std::string I = "[1,0;0,1]";
    const std::vector<std::string> lifted_plus = {
        I, "7" + I, "5" + I, I + " + 6[4,0;0,4]", I, I + " + 4[3,0;0,2]",
        I + " + 5[4,0;1,4]"};
    const std::vector<std::string> lifted_minus = {
        I, "7" + I, "5" + I, I + " + 6[4,0;0,4]", I, I + " + 4[2,0;0,3]",
        I + " + 5[4,0;4,4]"};
    const std::string J = "~[1,0;0,1]";
    const std::vector<std::string> unl_plus = {
        J, "7" + J, "5" + J, "7" + J, J, J + " + 4~[1,0;0,4]", J + " + 5~[1,0;4,1]"};
    const std::vector<std::string> unl_minus = {
        J, "7" + J, "5" + J, "7" + J, J, J + " + 4~[1,0;0,4]", J + " + 5~[1,0;1,1]"};
    bool ok = lifted.columns.size() == 7 && unlifted.columns.size() == 7;
    for (size_t i = 0; i < 7 && ok; ++i) {
        ok = expect_cell(lifted.k_plus[i], lifted_plus[i],
                         "lifted K+ at x=" + lifted.columns[i]) &&
             expect_cell(lifted.k_minus[i], lifted_minus[i],
                         "lifted K- at x=" + lifted.columns[i]) &&
             expect_cell(unlifted.k_plus[i], unl_plus[i],
                         "unlifted K+ at x=" + unlifted.columns[i]) &&
             expect_cell(unlifted.k_minus[i], unl_minus[i],
                         "unlifted K- at x=" + unlifted.columns[i]);
    }
    // the discriminating entry: the lifting separates the trefoils at the
    // class of diag(2,1) while the unlifted invariant does not
    ok = ok && !ga_equal(lifted.k_plus[5], lifted.k_minus[5]) &&
         ga_equal(unlifted.k_plus[5], unlifted.k_minus[5]);
    return ok;
}

bool criterion3() {
    for (const char* gname : {"S3", "S4", "S5"}) {
        auto g = builtin_group(gname);
        for (int xi = 0; xi < g->order(); ++xi) {
            GroupElement x{g, xi};
            auto pair = eisermann_pair(g, x, false);
            EnhancedWord one{g, {{g->identity(), false}}};
            for (int sign : {+1, -1}) {
                auto d = sign > 0 ? trefoil_plus_string() : trefoil_minus_string();
                auto cf = nonzero(trefoil_closed_form(g, x, sign));
                auto orc = nonzero(eisermann_oracle(g, x, d));
                auto ss = open_sum(d, pair, one, PinnedSide::Top);
                std::map<int, Integer> ssm(ss.coeffs.begin(), ss.coeffs.end());
                if (cf != orc || orc != ssm) {
                    detail << "  mismatch at " << gname << ", x=" << g->name(xi)
                           << ", sign " << sign << "\n";
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::pair<std::string, PairPtr>> criterion4_pairs(bool include_cyclic) {
    std::vector<std::pair<std::string, PairPtr>> out;
    for (const char* gname : {"S3", "S4", "D4", "Q8"}) {
        auto g = builtin_group(gname);
        for (int x = 0; x < g->order(); ++x)
            out.push_back({std::string("eisermann:") + gname + ":x=" + g->name(x),
                           eisermann_pair(g, {g, x}, false)});
    }
    for (int n = 1; n <= 6; ++n)
        out.push_back({"rackpair:dihedral:" + std::to_string(n),
                       pair_from_rack(dihedral_quandle(n), cyclic_group(n))});
    auto d3 = dihedral_quandle(3);
    auto z3 = cyclic_group(3);
    auto cocycles = enumerate_quandle_cocycles(d3, z3);
    for (size_t i = 0; i < cocycles.size(); ++i)
        out.push_back({"cocyclepair:dihedral:3#" + std::to_string(i),
                       pair_from_rack_cocycle(cocycles[i], z3)});
    if (include_cyclic)
        for (int n = 1; n <= 6; ++n)
            out.push_back({"rackpair:cyclic:" + std::to_string(n),
                           pair_from_rack(cyclic_rack(n), cyclic_group(n))});
    return out;
}

bool criterion4() {
    bool ok = true;
    for (const auto& [name, pair] : criterion4_pairs(false)) {
        auto rep = check_unframed(*pair, true);
        if (!rep.passed) {
            detail << "  unframed axioms fail for " << name << "\n";
            ok = false;
        }
    }
    // framed axioms for all rack-derived pairs including cyclic racks
    for (int n = 1; n <= 6; ++n) {
        for (bool cyclic : {false, true}) {
            auto rack = cyclic ? cyclic_rack(n) : dihedral_quandle(n);
            auto pair = pair_from_rack(rack, cyclic_group(n));
            if (!check_framed(*pair).first.passed) {
                detail << "  framed axioms fail for " << (cyclic ? "cyclic " : "dihedral ")
                       << n << "\n";
                ok = false;
            }
        }
    }
    auto d3 = dihedral_quandle(3);
    auto z3 = cyclic_group(3);
    for (const auto& c : enumerate_quandle_cocycles(d3, z3))
        if (!check_framed(*pair_from_rack_cocycle(c, z3)).first.passed) {
            detail << "  framed axioms fail for a cocycle pair\n";
            ok = false;
        }
    return ok;
}

bool criterion5() {
    bool ok = true;
    auto fixtures = move_fixtures();
    for (const auto& [name, pair] : criterion4_pairs(false)) {
        for (const auto& f : fixtures) {
            auto res = check_move_invariance(pair, f);
            if (!res.ok) {
                detail << "  " << name << " fails " << move_name(f.id) << ": "
                       << res.detail << "\n";
                ok = false;
            }
        }
    }
    // framing sensitivity: cyclic racks must fail R1 (with a witness) and
    // pass everything else
    for (int n = 2; n <= 6; ++n) {
        auto pair = pair_from_rack(cyclic_rack(n), cyclic_group(n));
        for (const auto& f : fixtures) {
            auto res = check_move_invariance(pair, f);
            if (f.id == MoveId::R1) {
                if (res.ok || res.detail.empty()) {
                    detail << "  cyclic rack " << n << ": R1 unexpectedly holds\n";
                    ok = false;
                }
            } else if (!res.ok) {
                detail << "  cyclic rack " << n << " fails " << move_name(f.id) << ": "
                       << res.detail << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion6() {
    auto z3 = cyclic_group(3);
    auto d3 = dihedral_quandle(3);
    auto pair = pair_from_rack(d3, z3);
    EnhancedWord empty{z3, {}};
    bool ok = true;
    auto run = [&](const SlicedDiagram& closed, Integer want) {
        auto r = state_sum(closed, pair, empty, empty);
        std::map<int, Integer> expect = {{z3->identity(), want}};
        if (nonzero(r.terms) != expect) {
            detail << "  state sum differs from " << want.str() << " * identity\n";
            ok = false;
        }
        if (rack_colouring_count(closed, d3, {}, std::nullopt) != want) {
            detail << "  rack count differs from " << want.str() << "\n";
            ok = false;
        }
    };
    run(closure(trefoil_plus_string()), 9);
    run(closure(figure_eight_string()), 3);
    return ok;
}

bool criterion7() {
    const auto& ext = gl25_extension();
    auto pgl = ext.quotient();
    EnhancedWord one{pgl, {{pgl->identity(), false}}};
    bool ok = true;
    for (int x : pgl25_base_points()) {
        auto lifted = lifted_eisermann_pair(ext, {pgl, x});
        auto unlifted = eisermann_pair(pgl, {pgl, x}, false);
        for (const auto& d :
             {trefoil_plus_string(), trefoil_minus_string(), figure_eight_string()}) {
            auto lsum = open_sum(d, lifted, one, PinnedSide::Top);
            auto usum = open_sum(d, unlifted, one, PinnedSide::Top);
            if (!ga_equal(ga_map(ext.boundary(), lsum), usum)) {
                detail << "  projection fails at x=" << pgl->name(x) << "\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion8() {
    auto s3 = builtin_group("S3");
    bool ok = true;
    for (const auto& t : {trefoil_plus_string(), trefoil_minus_string()}) {
        for (int split : {1, 2, 3}) {
            std::vector<Slice> top_slices(t.slices().begin(), t.slices().begin() + split);
            std::vector<Slice> bottom_slices(t.slices().begin() + split, t.slices().end());
            auto d1 = SlicedDiagram::make(t.top(), top_slices);
            auto d2 = SlicedDiagram::make(t.level(split), bottom_slices);
            for (int x = 0; x < 6; ++x) {
                auto pair = eisermann_pair(s3, {s3, x}, false);
                for (int b = 0; b < 6; ++b) {
                    EnhancedWord top{s3, {{s3->identity(), false}}};
                    EnhancedWord bottom{s3, {{b, false}}};
                    if (!tqft_check(d1, d2, pair, top, bottom)) {
                        detail << "  split " << split << " fails at x=" << s3->name(x)
                               << ", bottom " << s3->name(b) << "\n";
                        ok = false;
                    }
                }
            }
        }
    }
    return ok;
}

bool criterion9() {
    bool ok = true;
    auto same = [&](const std::string& a, const std::string& b, const std::string& what) {
        if (a != b || a.empty()) {
            detail << "  " << what << " differs between worker counts\n";
            ok = false;
        }
    };
    same(table_tsv(eisermann_s5_table(1)), table_tsv(eisermann_s5_table(8)), "table 1");
    same(table_tsv(lifted_gl25_table(1)), table_tsv(lifted_gl25_table(8)), "table 2");
    same(table_tsv(unlifted_pgl25_table(1)), table_tsv(unlifted_pgl25_table(8)), "table 3");

    auto s5 = builtin_group("S5");
    GroupElement x{s5, s5->element("(12345)")};
    auto pair = eisermann_pair(s5, x, false);
    EnhancedWord one{s5, {{s5->identity(), false}}};
    for (const auto& d : {trefoil_plus_string(), trefoil_minus_string()}) {
        EnhancedWord bottom{s5, {{s5->element("(12345)"), false}}};
        auto r1 = state_sum(d, pair, one, bottom, 1);
        auto r8 = state_sum(d, pair, one, bottom, 8);
        same(invariant_tsv(r1, pair->fiber()), invariant_tsv(r8, pair->fiber()),
             "trefoil state sum TSV");
    }
    return ok;
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion(1, "S5 trefoil table, < 30 s", [] {
        auto start = Clock::now();
        bool ok = criterion1();
        return ok && std::chrono::duration<double>(Clock::now() - start).count() < 30.0;
    });
    criterion(2, "GL(2,5) lifted and PGL(2,5) tables, < 5 min", [] {
        auto start = Clock::now();
        bool ok = criterion2();
        return ok && std::chrono::duration<double>(Clock::now() - start).count() < 300.0;
    });
    criterion(3, "closed form = oracle = state sum on both trefoils", criterion3);
    criterion(4, "axiom suites over the construction families", criterion4);
    criterion(5, "move invariance on the twelve fixtures", criterion5);
    criterion(6, "rack correspondence on trefoil and figure-eight", criterion6);
    criterion(7, "lifting projects onto the unlifted invariant", criterion7);
    criterion(8, "tqft property on trefoil splits", criterion8);
    criterion(9, "deterministic TSV across worker counts", criterion9);
    double total = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (failures == 0 ? "all criteria PASS" : "FAILURES present") << "  [total "
              << total << " s]\n";
    return failures == 0 ? 0 : 1;
}
