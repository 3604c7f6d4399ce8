#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xmodlink/builtins.hpp"
#include "xmodlink/invariant.hpp"
#include "xmodlink/wirtinger.hpp"

#include <functional>
#include <random>

using namespace xmodlink;

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

EnhancedWord word_of(const GroupPtr& g, std::vector<WordEntry> entries) {
    return {g, std::move(entries)};
}

} // namespace

TEST_CASE("colouring enumeration") {
    auto s3 = symmetric_group(3);
    auto pair = eisermann_pair(s3, {s3, s3->element("(12)")}, false);

    // identity diagram: exactly one colouring per top colour
    for (int g = 0; g < 6; ++g) {
        auto cols = enumerate_colourings(unknot_string(), pair,
                                         word_of(s3, {{g, false}}), std::nullopt);
        CHECK(cols.size() == 1);
        CHECK(cols[0].arc_colour[0] == g);
    }

    // closed unknot: one free arc ranging over the whole group
    auto closed = closure(unknot_string());
    CHECK(enumerate_colourings(closed, pair, word_of(s3, {}), std::nullopt).size() == 6);

    // star pattern must match the signature
    CHECK(code_of([&] {
              enumerate_colourings(unknot_string(), pair, word_of(s3, {{0, true}}),
                                   std::nullopt);
          }) == "WordSignatureMismatch");
    CHECK(code_of([&] {
              enumerate_colourings(unknot_string(), pair, word_of(s3, {}), std::nullopt);
          }) == "WordSignatureMismatch");

    // string trefoil over S5: colourings with top id are the solutions of the
    // closed-form counting equations
    auto s5 = symmetric_group(5);
    GroupElement x{s5, s5->element("(12345)")};
    auto p5 = eisermann_pair(s5, x, false);
    auto cols = enumerate_colourings(trefoil_plus_string(), p5,
                                     word_of(s5, {{s5->identity(), false}}), std::nullopt);
    Integer total = 0;
    for (const auto& [g, k] : trefoil_closed_form(s5, x, +1)) total += k;
    CHECK(Integer(cols.size()) == total);
}

TEST_CASE("state sums") {
    auto s3 = symmetric_group(3);
    auto pair = eisermann_pair(s3, {s3, s3->element("(123)")}, false);

    // single strand: one term (g, 1)
    int g = s3->element("(12)");
    auto r = state_sum(unknot_string(), pair, word_of(s3, {{g, false}}),
                       word_of(s3, {{g, false}}));
    CHECK(r.terms.size() == 1);
    CHECK(r.terms.at(s3->identity()) == 1);

    // appending an identity slice never changes the state sum
    auto longer = compose(trefoil_plus_string(), unknot_string());
    for (int b = 0; b < 6; ++b) {
        auto lhs = state_sum(trefoil_plus_string(), pair,
                             word_of(s3, {{s3->identity(), false}}),
                             word_of(s3, {{b, false}}));
        auto rhs = state_sum(longer, pair, word_of(s3, {{s3->identity(), false}}),
                             word_of(s3, {{b, false}}));
        CHECK(invariant_equal(lhs, rhs));
    }

    // closed trefoil under the dihedral rack pair: nine colourings, all
    // evaluating to the identity
    auto z3 = cyclic_group(3);
    auto rp = pair_from_rack(dihedral_quandle(3), z3);
    auto closed = state_sum(closure(trefoil_plus_string()), rp, word_of(z3, {}),
                            word_of(z3, {}));
    CHECK(closed.terms.size() == 1);
    CHECK(closed.terms.at(z3->identity()) == 9);
}

TEST_CASE("invariant matrix") {
    auto s3 = symmetric_group(3);
    auto pair = eisermann_pair(s3, {s3, s3->element("(12)")}, false);

    auto m = invariant_matrix(unknot_string(), pair, word_of(s3, {{2, false}}));
    CHECK(m.size() == 1);

    // matrix entries partition the unfiltered colouring stream
    auto matrix = invariant_matrix(trefoil_plus_string(), pair,
                                   word_of(s3, {{s3->identity(), false}}));
    Integer total = 0;
    for (const auto& [bw, r] : matrix)
        for (const auto& [e, k] : r.terms) total += k;
    auto all = enumerate_colourings(trefoil_plus_string(), pair,
                                    word_of(s3, {{s3->identity(), false}}), std::nullopt);
    CHECK(total == Integer(all.size()));
}

TEST_CASE("rack colouring counts") {
    auto d3 = dihedral_quandle(3);
    CHECK(rack_colouring_count(closure(unknot_string()), d3, {}, std::nullopt) == 3);
    CHECK(rack_colouring_count(closure(trefoil_plus_string()), d3, {}, std::nullopt) == 9);
    CHECK(rack_colouring_count(closure(trefoil_minus_string()), d3, {}, std::nullopt) == 9);
    CHECK(rack_colouring_count(closure(figure_eight_string()), d3, {}, std::nullopt) == 3);
    auto d5 = dihedral_quandle(5);
    CHECK(rack_colouring_count(closure(figure_eight_string()), d5, {}, std::nullopt) == 25);
    CHECK(rack_colouring_count(closure(trefoil_plus_string()), d5, {}, std::nullopt) == 5);

    CHECK(code_of([&] {
              rack_colouring_count(unknot_string(), d3, {{0, true}}, std::nullopt);
          }) == "WordSignatureMismatch");

    // open trefoil: counts bucketed by the bottom colour sum to 3x3
    auto map = rack_colouring_map(trefoil_plus_string(), d3, {{0, false}});
    Integer total = 0;
    for (const auto& [w, n] : map) total += n;
    CHECK(total == 3); // one free arc beyond the pinned top
}

TEST_CASE("rack correspondence") {
    // for a rack-derived pair the state sum is the rack count times the
    // forced morphism (e(top), e(bottom) e(top)^-1)
    auto z3 = cyclic_group(3);
    auto d3 = dihedral_quandle(3);
    auto rp = pair_from_rack(d3, z3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            auto r = state_sum(trefoil_plus_string(), rp, word_of(z3, {{a, false}}),
                               word_of(z3, {{b, false}}));
            Integer count = rack_colouring_count(trefoil_plus_string(), d3, {{a, false}},
                                                 std::vector<WordEntry>{{b, false}});
            Integer total = 0;
            for (const auto& [e, k] : r.terms) {
                total += k;
                CHECK(e == z3->mult(b, z3->inv(a))); // label = e(bottom) e(top)^-1
            }
            CHECK(total == count);
        }
}

TEST_CASE("move invariance checks") {
    auto s3 = symmetric_group(3);
    for (int x = 0; x < 6; ++x) {
        auto p = eisermann_pair(s3, {s3, x}, false);
        for (const auto& f : move_fixtures()) CHECK(check_move_invariance(p, f).ok);
    }

    auto z3 = cyclic_group(3);
    auto cyc = pair_from_rack(cyclic_rack(3), z3);
    for (const auto& f : move_fixtures()) {
        auto res = check_move_invariance(cyc, f);
        if (f.id == MoveId::R1) {
            CHECK_FALSE(res.ok);
            CHECK(res.detail.find("R1") != std::string::npos);
        } else {
            CHECK(res.ok);
        }
    }
}

TEST_CASE("pairs failing R3 fail the R3 fixture") {
    // search tiny pairs over the conjugation module of Z3 that satisfy R2
    // but break R3, then confirm the move harness sees the break
    auto z3 = cyclic_group(3);
    auto xm = xmod_identity_conj(z3);
    MoveFixture r3_fixture = move_fixtures()[9];
    REQUIRE(r3_fixture.id == MoveId::R3);
    int found = 0;
    for (int code = 0; code < 19683 && found < 3; ++code) { // psi tables over Z3
        int c = code;
        std::vector<std::vector<int>> psi(3, std::vector<int>(3));
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                psi[x][y] = c % 3;
                c /= 3;
            }
        // phi forced by R2: phi(X,Y) = psi(X, zphi)^-1 needs solving; instead
        // take phi = -psi-transposed-in-the-second-slot via the zpsi table:
        // phi(X, Z') = inverse of psi(X, Y) where Z' = zpsi(X, Y)
        std::vector<std::vector<int>> phi(3, std::vector<int>(3, -1));
        bool ok = true;
        for (int x = 0; x < 3 && ok; ++x) {
            for (int y = 0; y < 3; ++y) {
                int zp = (psi[x][y] == 0 ? (y) : ((y + 0) % 3)); // zpsi for abelian base
                // abelian base: zpsi(X,Y) = -psi + Y
                zp = ((y - psi[x][y]) % 3 + 3) % 3;
                if (phi[x][zp] >= 0 && phi[x][zp] != (3 - psi[x][y]) % 3) {
                    ok = false;
                    break;
                }
                phi[x][zp] = (3 - psi[x][y]) % 3;
            }
            for (int z = 0; z < 3; ++z) ok = ok && phi[x][z] >= 0;
        }
        if (!ok) continue;
        auto p = ReidemeisterPair::make(xm, psi, phi);
        auto rep = check_unframed(*p);
        bool has_r2 = false, has_r3 = false;
        for (const auto& v : rep.violations) {
            has_r2 = has_r2 || v.axiom == AxiomId::R2;
            has_r3 = has_r3 || v.axiom == AxiomId::R3;
        }
        if (has_r2 || !has_r3) continue;
        ++found;
        CHECK_FALSE(check_move_invariance(p, r3_fixture).ok);
    }
    CHECK(found > 0);
}

TEST_CASE("tqft property") {
    auto s3 = symmetric_group(3);
    // splitting the identity diagram
    auto two = compose(unknot_string(), unknot_string());
    auto p = eisermann_pair(s3, {s3, s3->element("(12)")}, false);
    CHECK(tqft_check(unknot_string(), unknot_string(), p,
                     word_of(s3, {{2, false}}), word_of(s3, {{2, false}})));
    (void)two;

    // trefoil split after its first crossing for every x and a few ends
    auto t = trefoil_plus_string();
    for (int x = 0; x < 6; ++x) {
        auto pe = eisermann_pair(s3, {s3, x}, false);
        auto top_part = SlicedDiagram::make(t.top(), {t.slice(0), t.slice(1)});
        auto bottom_part =
            SlicedDiagram::make(t.level(2), {t.slice(2), t.slice(3), t.slice(4)});
        for (int b = 0; b < 6; b += 2)
            CHECK(tqft_check(top_part, bottom_part, pe,
                             word_of(s3, {{s3->identity(), false}}),
                             word_of(s3, {{b, false}})));
    }

    // random width-2 stacks over the dihedral rack pair
    auto z3 = cyclic_group(3);
    auto rp = pair_from_rack(dihedral_quandle(3), z3);
    std::mt19937 rng(17);
    auto random_stack = [&](int slices) {
        std::vector<Slice> s;
        for (int i = 0; i < slices; ++i) {
            switch (rng() % 3) {
            case 0: s.push_back(Slice{{GenKind::XPlus}}); break;
            case 1: s.push_back(Slice{{GenKind::XMinus}}); break;
            default: s.push_back(Slice{{GenKind::IdDown, GenKind::IdDown}}); break;
            }
        }
        return SlicedDiagram::make({Dir::Down, Dir::Down}, std::move(s));
    };
    for (int t2 = 0; t2 < 100; ++t2) {
        auto d1 = random_stack(1 + t2 % 3);
        auto d2 = random_stack(1 + (t2 / 3) % 3);
        EnhancedWord top = word_of(z3, {{static_cast<int>(rng() % 3), false},
                                        {static_cast<int>(rng() % 3), false}});
        EnhancedWord bottom = word_of(z3, {{static_cast<int>(rng() % 3), false},
                                           {static_cast<int>(rng() % 3), false}});
        CHECK(tqft_check(d1, d2, rp, top, bottom));
    }
}

TEST_CASE("derived and full eisermann pairs agree on derived boundaries") {
    for (const char* gname : {"S3", "S4"}) {
        auto g = builtin_group(gname);
        GroupElement x{g, g->element("(12)")};
        auto full = eisermann_pair(g, x, false);
        auto derived = eisermann_pair(g, x, true);
        auto [dg, incl] = commutator_subgroup(g);
        REQUIRE(same_group(derived->base(), derived->base()));
        for (int a = 0; a < dg->order(); ++a)
            for (int b = 0; b < dg->order(); ++b) {
                auto rd = state_sum(trefoil_plus_string(), derived,
                                    word_of(derived->base(), {{a, false}}),
                                    word_of(derived->base(), {{b, false}}));
                auto rf = state_sum(trefoil_plus_string(), full,
                                    word_of(g, {{incl.apply(a), false}}),
                                    word_of(g, {{incl.apply(b), false}}));
                // compare multiplicities through the inclusion
                std::map<int, Integer> pushed;
                for (const auto& [e, k] : rd.terms) pushed[incl.apply(e)] += k;
                CHECK(pushed == rf.terms);
            }
    }
}

TEST_CASE("lifting projection on a small extension") {
    // Z4 -> Z2: pushing the lifted invariant along the boundary reproduces
    // the unlifted one
    auto z4 = cyclic_group(4);
    auto z2 = cyclic_group(2);
    auto ext = central_extension_new(z4, GroupHom(z4, z2, {0, 1, 0, 1}));
    for (int xi = 0; xi < 2; ++xi) {
        auto lifted = lifted_eisermann_pair(ext, {z2, xi});
        auto unl = eisermann_pair(z2, {z2, xi}, false);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                auto rl = state_sum(figure_eight_string(), lifted,
                                    word_of(z2, {{a, false}}), word_of(z2, {{b, false}}));
                auto ru = state_sum(figure_eight_string(), unl, word_of(z2, {{a, false}}),
                                    word_of(z2, {{b, false}}));
                std::map<int, Integer> pushed;
                for (const auto& [e, k] : rl.terms)
                    pushed[ext.boundary().apply(e)] += k;
                CHECK(pushed == ru.terms);
            }
    }
}

TEST_CASE("worker counts do not change results") {
    auto s5 = symmetric_group(5);
    auto p = eisermann_pair(s5, {s5, s5->element("(12345)")}, false);
    ColouringSolver solver(trefoil_plus_string(), p);
    EnhancedWord top = word_of(s5, {{s5->identity(), false}});
    auto cols1 = solver.solve(top, std::nullopt, 1);
    auto cols8 = solver.solve(top, std::nullopt, 8);
    REQUIRE(cols1.size() == cols8.size());
    for (size_t i = 0; i < cols1.size(); ++i)
        CHECK(cols1[i].arc_colour == cols8[i].arc_colour);
    CHECK(solver.state_terms(top, std::nullopt, 1) ==
          solver.state_terms(top, std::nullopt, 8));
}

TEST_CASE("wirtinger data") {
    auto wd = diagram_to_wirtinger(unknot_string());
    CHECK(wd.arc_count == 1);
    CHECK(wd.crossings.empty());
    CHECK(wd.longitude.empty());

    auto wt = diagram_to_wirtinger(trefoil_plus_string());
    CHECK(wt.arc_count == 4);
    CHECK(wt.crossings.size() == 3);
    for (const auto& c : wt.crossings) CHECK(c.sign == +1);

    auto wm = diagram_to_wirtinger(trefoil_minus_string());
    for (const auto& c : wm.crossings) CHECK(c.sign == -1);

    auto w8 = diagram_to_wirtinger(figure_eight_string());
    CHECK(w8.arc_count == 5);
    int s = 0;
    for (const auto& c : w8.crossings) s += c.sign;
    CHECK(s == 0);

    CHECK(code_of([] { diagram_to_wirtinger(closure(trefoil_plus_string())); }) ==
          "NotAStringKnot");
    // a split unknot next to the strand is a second component
    auto split = diagram_parse("top: v\nid+ cup<\nid+ cap>\n");
    CHECK(code_of([&] { diagram_to_wirtinger(split); }) == "MultipleComponents");
}

TEST_CASE("wirtinger colourings respect the partial longitude recursion") {
    // the colour of the arc entered at the i-th undercrossing equals
    // l_i^-1 x l_i for every valid colouring
    for (const auto& d : {trefoil_plus_string(), figure_eight_string()}) {
        auto wd = diagram_to_wirtinger(d);
        auto s4 = symmetric_group(4);
        GroupElement x{s4, s4->element("(123)")};
        // enumerate colourings with the independent solver inside the oracle
        // by bucketing over a throwaway: instead walk all assignments directly
        const int n = s4->order();
        std::vector<int> col(wd.arc_count, -1);
        col[0] = x.index;
        std::function<void(int)> rec = [&](int arc) {
            if (arc == wd.arc_count) {
                for (const auto& c : wd.crossings) {
                    int o = col[c.over_arc];
                    int expect = c.sign > 0
                                     ? s4->mult(s4->mult(s4->inv(o), col[c.under_in_arc]), o)
                                     : s4->mult(s4->mult(o, col[c.under_in_arc]), s4->inv(o));
                    if (expect != col[c.under_out_arc]) return;
                }
                // valid colouring: check the partial longitude relation
                for (int i = 0; i < static_cast<int>(wd.crossings.size()); ++i) {
                    auto li = wd.partial_longitude(i);
                    int l = s4->identity();
                    for (const auto& f : li) {
                        int v = col[f.arc];
                        l = s4->mult(l, f.exponent > 0 ? v : s4->inv(v));
                    }
                    CHECK(col[wd.crossings[i].under_in_arc] ==
                          s4->mult(s4->mult(s4->inv(l), x.index), l));
                }
                return;
            }
            for (int v = 0; v < n; ++v) {
                col[arc] = v;
                rec(arc + 1);
            }
            col[arc] = -1;
        };
        rec(1);
    }
}

TEST_CASE("longitudes are zero-framed") {
    // colour every arc with the same element of a cyclic group: the
    // longitude exponents cancel exactly when the framing correction is in
    for (const auto& d : {trefoil_plus_string(), trefoil_minus_string(),
                          figure_eight_string()}) {
        auto wd = diagram_to_wirtinger(d);
        auto z12 = cyclic_group(12);
        std::vector<int> col(wd.arc_count, 5);
        int l = z12->identity();
        for (const auto& f : wd.longitude)
            l = z12->mult(l, f.exponent > 0 ? col[f.arc] : z12->inv(col[f.arc]));
        CHECK(l == z12->identity());
    }
}

TEST_CASE("eisermann oracle") {
    auto s5 = symmetric_group(5);
    GroupElement x5{s5, s5->element("(12345)")};
    auto unk = eisermann_oracle(s5, x5, unknot_string());
    CHECK(unk.size() == 1);
    CHECK(unk.at(s5->identity()) == 1);

    auto plus = eisermann_oracle(s5, x5, trefoil_plus_string());
    CHECK(plus.at(s5->identity()) == 1);
    CHECK(plus.at(s5->element("(15432)")) == 5);
    auto minus = eisermann_oracle(s5, x5, trefoil_minus_string());
    CHECK(minus.at(s5->element("(12345)")) == 5);

    // oracle equals closed form equals state sum for S3 and every x
    auto s3 = symmetric_group(3);
    for (int xi = 0; xi < 6; ++xi) {
        GroupElement x{s3, xi};
        auto p = eisermann_pair(s3, x, false);
        for (int sign : {+1, -1}) {
            auto d = sign > 0 ? trefoil_plus_string() : trefoil_minus_string();
            auto cf = trefoil_closed_form(s3, x, sign);
            auto orc = eisermann_oracle(s3, x, d);
            CHECK(cf == orc);
            auto ss = open_sum(d, p, word_of(s3, {{s3->identity(), false}}),
                               PinnedSide::Top);
            std::map<int, Integer> ssm;
            for (const auto& [e, k] : ss.coeffs) ssm[e] = k;
            std::map<int, Integer> orc_nz;
            for (const auto& [e, k] : orc)
                if (k != 0) orc_nz[e] = k;
            CHECK(ssm == orc_nz);
        }
    }

    // x = 1 forces the trivial bucket for both signs
    GroupElement one{s5, s5->identity()};
    for (int sign : {+1, -1}) {
        auto cf = trefoil_closed_form(s5, one, sign);
        CHECK(cf.size() == 1);
        CHECK(cf.at(s5->identity()) == 1);
    }
}
