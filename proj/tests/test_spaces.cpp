#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "confspace/errors.hpp"
#include "confspace/symop.hpp"

using namespace confspace;

namespace {

ManifoldSpec s1xd3(int L) { return ManifoldSpec::s1xd3(L); }

ManifoldSpec r1_spec(int L, bool with_p3 = true, bool with_p4 = false) {
    ManifoldSpec m;
    m.group.hat_rank = 1;
    m.window = L;
    if (with_p3) m.p3.push_back(Primitive3{"x1", false});
    if (with_p4) m.p4.push_back("y1");
    return m;
}

Word w(const ManifoldSpec& m, const std::string& s) { return word_parse(m.group, s); }

} // namespace

TEST_CASE("build_space matches the hand counts") {
    SUBCASE("S1xD3 preset, L=1, pi3C2 has the three w-classes") {
        const ModuleSpace sp = build_space(s1xd3(1), SpaceKind::pi3C2);
        REQUIRE(sp.dim() == 3);
        const ManifoldSpec& m = sp.spec;
        CHECK(symbol_str(sp.symbols[0], m) == "W(1,2;e)");
        CHECK(symbol_str(sp.symbols[1], m) == "W(1,2;s)");
        CHECK(symbol_str(sp.symbols[2], m) == "W(1,2;s^-1)");
    }
    SUBCASE("S1xD3 preset, L=1, pi5C3 has 9 squares and 9 mixed classes") {
        const ModuleSpace sp = build_space(s1xd3(1), SpaceKind::pi5C3);
        CHECK(sp.dim() == 18);
        int sq = 0, mix = 0;
        for (const auto& s : sp.symbols) {
            if (s.kind == SymKind::Sq) ++sq;
            if (s.kind == SymKind::Mix) ++mix;
        }
        CHECK(sq == 9);
        CHECK(mix == 9);
    }
    SUBCASE("r=1, L=1, pi4C3 is slots x words x primitives") {
        const ModuleSpace sp = build_space(r1_spec(1, false, true), SpaceKind::pi4C3);
        CHECK(sp.dim() == 3 * 5 * 1);
    }
    SUBCASE("r=1, L=1, pi5C2 mixes decorated pairs and squares") {
        const ModuleSpace sp = build_space(r1_spec(1), SpaceKind::pi5C2);
        CHECK(sp.dim() == 25 + 10);  // WhWT over 5x5 words, Sq over C(5,2) pairs
    }
    SUBCASE("empty p4 gives an empty chart") {
        CHECK(build_space(s1xd3(2), SpaceKind::pi4C1).dim() == 0);
    }
    SUBCASE("fiber primitives get T-symbols but no WhWT symbols") {
        ManifoldSpec m = r1_spec(1);
        m.p3.push_back(Primitive3{"f", true});
        CHECK(build_space(m, SpaceKind::pi3C1).dim() == 10);
        const ModuleSpace p52 = build_space(m, SpaceKind::pi5C2);
        for (const auto& s : p52.symbols)
            if (s.kind == SymKind::WhWT) CHECK_FALSE(m.p3[s.prim].fiber);
    }
}

TEST_CASE("smaller windows enumerate prefixes of larger ones") {
    for (SpaceKind k : {SpaceKind::pi3C2, SpaceKind::pi4C2, SpaceKind::pi5C3}) {
        const ModuleSpace small = build_space(r1_spec(1, true, true), k);
        ManifoldSpec big = r1_spec(1, true, true);
        const ModuleSpace wide = build_space(big, k, 2);
        REQUIRE(small.dim() <= wide.dim());
        for (std::uint32_t i = 0; i < small.dim(); ++i) CHECK(small.symbols[i] == wide.symbols[i]);
    }
}

TEST_CASE("symbol text round-trips") {
    const ManifoldSpec m = r1_spec(2, true, true);
    for (const char* text : {"W(1,2;s h1)", "T3(2;s;x1)", "Sq(1,3;s;s s)", "Mix(s;s^-1)",
                             "WhWT(1,2;s;e;x1)", "T4(3;h1^-1;y1)", "Mix(e;e)"}) {
        CHECK(symbol_str(symbol_parse(m, text), m) == text);
    }
    CHECK_THROWS_AS(symbol_parse(m, "Sq(1,3;s s;s)"), ParseError);  // decorations out of order
    CHECK_THROWS_AS(symbol_parse(m, "T3(2;s;zz)"), ParseError);
    CHECK_THROWS_AS(symbol_parse(m, "Q(1;s)"), ParseError);
}

TEST_CASE("normalize_w moves decorations to the canonical slot") {
    const ManifoldSpec m = r1_spec(1);
    const Word a = w(m, "s h1");
    // right-slot decoration inverts
    CHECK(normalize_w(1, 2, 2, a) == sym_w(1, 2, inverse(a)));
    // swapped indices with a left decoration also invert
    CHECK(normalize_w(2, 1, 2, a) == sym_w(1, 2, inverse(a)));
    // undecorated w_13
    CHECK(normalize_w(1, 3, 1, word_identity()) == sym_w(1, 3, word_identity()));
    CHECK(normalize_w(3, 1, 3, a) == sym_w(1, 3, inverse(a)));
}

TEST_CASE("t-action on the stated examples") {
    const ManifoldSpec m = r1_spec(2);
    SUBCASE("slot j acts by the inverse on the right") {
        SymVec v = apply_t(2, w(m, "s"), sym_single(sym_w(1, 2, w(m, "h1"))));
        CHECK(v == sym_single(sym_w(1, 2, w(m, "h1 s^-1"))));
    }
    SUBCASE("spectator slots act trivially") {
        SymVec v = apply_t(3, w(m, "s h1"), sym_single(sym_w(1, 2, w(m, "h1"))));
        CHECK(v == sym_single(sym_w(1, 2, w(m, "h1"))));
        SymVec t = apply_t(1, w(m, "s"), sym_single(sym_t(3, 2, w(m, "h1"), 0)));
        CHECK(t == sym_single(sym_t(3, 2, w(m, "h1"), 0)));
    }
    SUBCASE("matching slot multiplies on the left") {
        SymVec t = apply_t(2, w(m, "s"), sym_single(sym_t(3, 2, w(m, "h1"), 0)));
        CHECK(t == sym_single(sym_t(3, 2, w(m, "s h1"), 0)));
    }
}

TEST_CASE("t-actions compose and commute across slots") {
    const ManifoldSpec m = r1_spec(2);
    const auto words = enumerate_words(m.group, 1);
    const ModuleSpace p33 = build_space(m, SpaceKind::pi3C3);
    for (const auto& a : words) {
        for (const auto& b : words) {
            for (const BasisSymbol& s : p33.symbols) {
                const SymVec v = sym_single(s);
                CHECK(apply_t(1, a, apply_t(1, b, v)) == apply_t(1, multiply(a, b), v));
                CHECK(apply_t(1, a, apply_t(2, b, v)) == apply_t(2, b, apply_t(1, a, v)));
                CHECK(apply_t(2, a, apply_t(3, b, v)) == apply_t(3, b, apply_t(2, a, v)));
            }
        }
    }
}

TEST_CASE("diagonal action on the stated examples") {
    const ManifoldSpec m = r1_spec(3);
    CHECK(diagonal_t(w(m, "s"), sym_single(sym_w(1, 2, w(m, "h1"))), 2) ==
          sym_single(sym_w(1, 2, w(m, "s h1 s^-1"))));
    CHECK(diagonal_t(w(m, "s s"), sym_single(sym_w(1, 2, w(m, "s"))), 2) ==
          sym_single(sym_w(1, 2, w(m, "s"))));
    CHECK(diagonal_t(w(m, "s"), sym_single(sym_t(3, 2, w(m, "h1"), 0)), 2) ==
          sym_single(sym_t(3, 2, w(m, "s h1"), 0)));
}

TEST_CASE("tau pushforward relabels primitives") {
    const ManifoldSpec m = r1_spec(1, true, true);
    const SymVec prim3 = sym_single(sym_t(3, 1, w(m, "s"), 0));
    CHECK(tau_push(2, prim3) == sym_single(sym_t(3, 2, w(m, "s"), 0)));
    const SymVec prim4 = sym_single(sym_t(4, 1, w(m, "h1"), 0));
    CHECK(tau_push(3, prim4) == sym_single(sym_t(4, 3, w(m, "h1"), 0)));
    CHECK_THROWS_AS(tau_push(2, sym_single(sym_w(1, 2, w(m, "s")))), LevelMismatch);
}

TEST_CASE("codegeneracy on the stated examples") {
    const ManifoldSpec m = r1_spec(1);
    CHECK(codegeneracy(2, 1, sym_single(sym_w(1, 2, w(m, "s")))).empty());
    CHECK(codegeneracy(2, 2, sym_single(sym_w(1, 2, w(m, "s")))).empty());
    CHECK(codegeneracy(3, 1, sym_single(sym_w(2, 3, w(m, "h1")))) ==
          sym_single(sym_w(1, 2, w(m, "h1"))));
    CHECK(codegeneracy(2, 2, sym_single(sym_t(3, 1, w(m, "s"), 0))) ==
          sym_single(sym_t(3, 1, w(m, "s"), 0)));
    CHECK(codegeneracy(2, 1, sym_single(sym_t(3, 1, w(m, "s"), 0))).empty());
}

TEST_CASE("coface on the stated examples") {
    const ManifoldSpec m = r1_spec(1);
    const Word a = w(m, "h1");
    const SymVec w12 = sym_single(sym_w(1, 2, a));
    CHECK(coface_tw(2, 0, w12, m) == sym_single(sym_w(2, 3, a)));
    CHECK(coface_tw(2, 1, w12, m) ==
          sym_sum(sym_single(sym_w(1, 3, a)), sym_single(sym_w(2, 3, a))));
    CHECK(coface_tw(2, 2, w12, m) ==
          sym_sum(sym_single(sym_w(1, 2, a)), sym_single(sym_w(1, 3, a))));
    CHECK(coface_tw(2, 3, w12, m) == w12);

    const SymVec prim = sym_single(sym_t(3, 1, w(m, "s"), 0));
    CHECK(coface_tw(1, 1, prim, m) ==
          sym_sum(sym_single(sym_t(3, 1, w(m, "s"), 0)), sym_single(sym_t(3, 2, w(m, "s"), 0))));
    CHECK(coface_tw(1, 0, prim, m) == sym_single(sym_t(3, 2, w(m, "s"), 0)));
    CHECK(coface_tw(1, 2, prim, m) == sym_single(sym_t(3, 1, w(m, "s"), 0)));
}

TEST_CASE("configured corrections extend equivariantly and land in N_0") {
    ManifoldSpec m = r1_spec(2);
    m.c3["x1"] = {C3Term{Rat(1), w(m, "h1")}};
    m.validate();
    const SymVec img = coface_tw(1, 1, sym_single(sym_t(3, 1, w(m, "s"), 0)), m);
    bool found = false;
    for (const auto& [s, c] : img)
        if (s.kind == SymKind::W) {
            CHECK(s.w1 == w(m, "s h1 s^-1"));
            CHECK(retract_rho(s.w1).is_identity());
            found = true;
        }
    CHECK(found);

    ManifoldSpec bad = r1_spec(2);
    bad.c3["x1"] = {C3Term{Rat(1), w(bad, "s")}};
    CHECK_THROWS_AS(bad.validate(), ParseError);
}

TEST_CASE("space-resolved actions overflow past the working window") {
    const ManifoldSpec m = r1_spec(2);
    const ModuleSpace working = build_space(m, SpaceKind::pi3C2, 2 * m.window);
    const QVector v = resolve(sym_single(sym_w(1, 2, w(m, "h1"))), working);
    // s h1 s^-1 fits the 2L working window, conjugating by a longer word does not
    CHECK(unresolve(diagonal_t(w(m, "s"), v, working), working) ==
          sym_single(sym_w(1, 2, w(m, "s h1 s^-1"))));
    CHECK_THROWS_AS(diagonal_t(w(m, "s s"), v, working), TruncationOverflow);
    CHECK_THROWS_AS(apply_t(1, w(m, "s s s s"), v, working), TruncationOverflow);
}

TEST_CASE("resolution enforces the window") {
    const ManifoldSpec m = s1xd3(1);
    const ModuleSpace sp = build_space(m, SpaceKind::pi3C2);
    CHECK_THROWS_AS(resolve(sym_single(sym_w(1, 2, w(m, "s s"))), sp), TruncationOverflow);
    CHECK_THROWS_AS(resolve(sym_single(sym_w(1, 3, w(m, "s"))), sp), SpaceMismatch);
    const QVector q = resolve(sym_single(sym_w(1, 2, w(m, "s")), Rat(3, 2)), sp);
    CHECK(unresolve(q, sp) == sym_single(sym_w(1, 2, w(m, "s")), Rat(3, 2)));
}
