#include "confspace/verify.hpp"

#include <atomic>
#include <random>
#include <set>
#include <sstream>

#include "confspace/config.hpp"
#include "confspace/errors.hpp"
#include "confspace/theta.hpp"
#include "confspace/tower.hpp"
#include "confspace/whitehead.hpp"

namespace confspace {

namespace {

SymVec wv(int i, int j, const Word& w) { return sym_single(sym_w(i, j, w)); }

bool sym_eq(const SymVec& a, const SymVec& b) { return a == b; }

// eqn_linear_rel_wh_prod and the zero form behind it, over all window pairs
SuiteReport suite_relations(const ManifoldSpec& spec) {
    SuiteReport r;
    r.suite = "relations";
    const auto words = enumerate_words(spec.group, spec.window);
    for (const Word& a : words) {
        for (const Word& b : words) {
            const Word abinv = multiply(a, inverse(b));
            SymVec zero_form = whitehead(sym_sum(wv(1, 3, a), wv(1, 2, abinv)), wv(2, 3, b), 3,
                                         WhMode::exact, spec);
            if (!sym_is_zero(zero_form)) {
                r.detail = "nonzero expansion at (" + word_str(a) + ", " + word_str(b) +
                           "): " + sym_vec_str(zero_form, spec);
                return r;
            }
            SymVec lhs1 = whitehead(wv(1, 3, a), wv(2, 3, b), 3, WhMode::exact, spec);
            SymVec rhs1 =
                sym_scaled(whitehead(wv(1, 2, abinv), wv(2, 3, b), 3, WhMode::exact, spec), Rat(-1));
            if (!sym_eq(lhs1, rhs1)) {
                r.detail = "first displayed relation fails at (" + word_str(a) + ", " + word_str(b) + ")";
                return r;
            }
            SymVec lhs2 = whitehead(wv(1, 2, a), wv(1, 3, b), 3, WhMode::exact, spec);
            SymVec rhs2 = sym_scaled(
                whitehead(wv(1, 2, a), wv(2, 3, multiply(inverse(a), b)), 3, WhMode::exact, spec),
                Rat(-1));
            if (!sym_eq(lhs2, rhs2)) {
                r.detail = "second displayed relation fails at (" + word_str(a) + ", " + word_str(b) + ")";
                return r;
            }
            r.checks += 3;
        }
    }
    r.pass = true;
    std::ostringstream os;
    os << words.size() << "x" << words.size() << " decoration pairs, exact";
    r.detail = os.str();
    return r;
}

SymVec coface_any(int n, int i, const BasisSymbol& s, const ManifoldSpec& spec) {
    if (s.degree() == 5 && n == 2 &&
        (s.kind == SymKind::WhWT || s.kind == SymKind::Sq || s.kind == SymKind::Mix))
        return coface5(i, sym_single(s), spec, WhMode::exact);
    return coface_tw(n, i, sym_single(s), spec);
}

SuiteReport suite_cofaces(const ManifoldSpec& spec) {
    SuiteReport r;
    r.suite = "cofaces";
    const bool zero_corrections = spec.c3.empty() && spec.c4.empty();

    const SpaceKind lvl1[] = {SpaceKind::pi3C1, SpaceKind::pi4C1, SpaceKind::pi5C1};
    const SpaceKind lvl2[] = {SpaceKind::pi3C2, SpaceKind::pi4C2, SpaceKind::pi5C2};

    auto fail = [&r, &spec](const std::string& what, const BasisSymbol& s) {
        r.detail = what + " at " + symbol_str(s, spec);
        return r;
    };

    // sigma-delta identities and coface-coface identities
    for (int d = 0; d < 3; ++d) {
        const ModuleSpace s1 = build_space(spec, lvl1[d]);
        const ModuleSpace s2 = build_space(spec, lvl2[d]);
        for (const BasisSymbol& b : s1.symbols) {
            for (int i = 0; i <= 2; ++i) {
                SymVec img = coface_any(1, i, b, spec);
                if (i >= 1 && !sym_eq(codegeneracy(2, i, img), sym_single(b)))
                    return fail("sigma^i delta^i != id (n=1, i=" + std::to_string(i) + ")", b);
                if (i <= 1 && !sym_eq(codegeneracy(2, i + 1, img), sym_single(b)))
                    return fail("sigma^{i+1} delta^i != id (n=1, i=" + std::to_string(i) + ")", b);
                r.checks += 2;
            }
            for (int i = 0; i <= 3; ++i) {
                for (int j = i + 1; j <= 3; ++j) {
                    SymVec left;
                    for (const auto& [t, c] : coface_any(1, i, b, spec))
                        for (const auto& [u, cu] : coface_any(2, j, t, spec))
                            sym_add(left, u, c * cu);
                    SymVec right;
                    for (const auto& [t, c] : coface_any(1, j - 1, b, spec))
                        for (const auto& [u, cu] : coface_any(2, i, t, spec))
                            sym_add(right, u, c * cu);
                    if (!sym_eq(left, right))
                        return fail("delta^j delta^i != delta^i delta^{j-1} (i=" +
                                        std::to_string(i) + ", j=" + std::to_string(j) + ")",
                                    b);
                    ++r.checks;
                }
            }
        }
        for (const BasisSymbol& b : s2.symbols) {
            for (int i = 0; i <= 3; ++i) {
                SymVec img = coface_any(2, i, b, spec);
                if (i >= 1 && !sym_eq(codegeneracy(3, i, img), sym_single(b)))
                    return fail("sigma^i delta^i != id (n=2, i=" + std::to_string(i) + ")", b);
                if (i <= 2 && !sym_eq(codegeneracy(3, i + 1, img), sym_single(b)))
                    return fail("sigma^{i+1} delta^i != id (n=2, i=" + std::to_string(i) + ")", b);
                r.checks += 2;
            }
        }
    }

    // alternating cancellation into N_0^{(2)}
    {
        const ModuleSpace p31 = build_space(spec, SpaceKind::pi3C1);
        for (const BasisSymbol& b : p31.symbols) {
            SymVec alt = coface_tw(1, 0, sym_single(b), spec);
            alt = sym_sum(alt, sym_scaled(coface_tw(1, 1, sym_single(b), spec), Rat(-1)));
            alt = sym_sum(alt, coface_tw(1, 2, sym_single(b), spec));
            for (const auto& [s, c] : alt)
                if (s.kind != SymKind::W || !retract_rho(s.w1).is_identity())
                    return fail("alternating coface sum leaves N_0^{(2)}", b);
            if (spec.c3.empty() && !sym_is_zero(alt))
                return fail("alternating coface sum nonzero with zero correction", b);
            ++r.checks;
        }
        const ModuleSpace p41 = build_space(spec, SpaceKind::pi4C1);
        for (const BasisSymbol& b : p41.symbols) {
            SymVec alt = coface_tw(1, 0, sym_single(b), spec);
            alt = sym_sum(alt, sym_scaled(coface_tw(1, 1, sym_single(b), spec), Rat(-1)));
            alt = sym_sum(alt, coface_tw(1, 2, sym_single(b), spec));
            if (spec.c4.empty() && !sym_is_zero(alt))
                return fail("pi4 alternating coface sum nonzero with zero correction", b);
            ++r.checks;
        }
    }

    // N_0 functoriality under the four level-2 cofaces
    {
        const auto n03 = build_N0(spec, 3);
        const std::set<BasisSymbol> n03set(n03.begin(), n03.end());
        for (const BasisSymbol& b : build_N0(spec, 2)) {
            for (int i = 0; i <= 3; ++i) {
                for (const auto& [s, c] : coface_tw(2, i, sym_single(b), spec))
                    if (!n03set.count(s))
                        return fail("coface " + std::to_string(i) + " leaves span(N_0^{(3)})", b);
                ++r.checks;
            }
        }
    }

    // decoration preservation: window charts are closed under the maps
    if (zero_corrections) {
        const SpaceKind lvl3[] = {SpaceKind::pi3C3, SpaceKind::pi4C3, SpaceKind::pi5C3};
        for (int d = 0; d < 3; ++d) {
            const ModuleSpace s1 = build_space(spec, lvl1[d]);
            const ModuleSpace s2 = build_space(spec, lvl2[d]);
            const ModuleSpace s3 = build_space(spec, lvl3[d]);
            for (const BasisSymbol& b : s1.symbols)
                for (int i = 0; i <= 2; ++i)
                    for (const auto& [s, c] : coface_any(1, i, b, spec)) {
                        if (s.max_dec_len() > b.max_dec_len())
                            return fail("coface grew a decoration", b);
                        (void)s2.index_of(s);
                        ++r.checks;
                    }
            for (const BasisSymbol& b : s2.symbols) {
                if (b.kind == SymKind::WhWT || b.kind == SymKind::Sq) continue;  // products multiply words
                for (int i = 0; i <= 3; ++i)
                    for (const auto& [s, c] : coface_any(2, i, b, spec)) {
                        if (s.max_dec_len() > b.max_dec_len())
                            return fail("coface grew a decoration", b);
                        (void)s3.index_of(s);
                        ++r.checks;
                    }
            }
        }
    }

    r.pass = true;
    r.detail = "cosimplicial identities, cancellation, N_0 functoriality";
    return r;
}

SuiteReport suite_n_membership(const ManifoldSpec& spec) {
    SuiteReport r;
    r.suite = "n-membership";
    const NSpan n = build_N(spec);
    const ModuleSpace src = build_space(spec, SpaceKind::pi5C2);

    struct Task {
        BasisSymbol sym;
        int face;
    };
    std::vector<Task> tasks;
    for (const BasisSymbol& b : src.symbols)
        for (int i = 0; i <= 3; ++i) tasks.push_back({b, i});

    std::vector<std::uint8_t> ok(tasks.size(), 0);
    parallel_for(tasks.size(), [&](std::size_t k) {
        SymVec img = coface5(tasks[k].face, sym_single(tasks[k].sym), spec, WhMode::exact);
        ok[k] = reduce_mod_N(img, n).is_zero() ? 1 : 0;
    });
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (!ok[k]) {
            r.detail = "coface " + std::to_string(tasks[k].face) + " of " +
                       symbol_str(tasks[k].sym, spec) + " is not in span(N)";
            r.checks = static_cast<long>(k);
            return r;
        }
    }
    r.pass = true;
    r.checks = static_cast<long>(tasks.size());
    std::ostringstream os;
    os << tasks.size() << " coface images reduced to 0 mod N";
    r.detail = os.str();
    return r;
}

SuiteReport suite_dual_basis(const ManifoldSpec& spec) {
    SuiteReport r;
    r.suite = "dual-basis";
    const ModuleSpace p53 = build_space(spec, SpaceKind::pi5C3);
    const bool s1xd3 =
        spec.group.hat_rank == 0 && spec.p3.empty() && spec.p4.empty() && spec.p5.empty();

    std::vector<BasisSymbol> pair_symbols;
    for (const BasisSymbol& b : p53.symbols)
        if (b.kind == SymKind::Sq || b.kind == SymKind::Mix) pair_symbols.push_back(b);

    if (!s1xd3) {
        // deck-collapse consistency: theta only sees the Z-shadow
        for (const BasisSymbol& b : pair_symbols) {
            SymVec collapsed;
            if (b.kind == SymKind::Mix) {
                sym_add(collapsed, sym_mix(word_s_power(deck_zeta(b.w1)), word_s_power(deck_zeta(b.w2))),
                        Rat(1));
            } else {
                const Word u = word_s_power(deck_zeta(b.w1));
                const Word v = word_s_power(deck_zeta(b.w2));
                if (u == v) {
                    // collapses to a repeated decoration, hence to zero
                } else if (u < v) {
                    sym_add(collapsed, sym_sq(b.a, b.b, u, v), Rat(1));
                } else {
                    sym_add(collapsed, sym_sq(b.a, b.b, v, u), Rat(-1));
                }
            }
            if (theta_vector(sym_single(b)) != theta_vector(collapsed)) {
                r.detail = "theta differs from its deck collapse at " + symbol_str(b, spec);
                return r;
            }
            ++r.checks;
        }
        r.pass = true;
        r.detail = "deck-collapse consistency on " + std::to_string(r.checks) + " pair symbols";
        return r;
    }

    // S^1 x D^3 preset: the evaluation matrix is a signed permutation
    std::vector<ThetaIndex> indices;
    std::set<ThetaIndex> seen;
    for (const BasisSymbol& b : pair_symbols) {
        auto tv = theta_vector(sym_single(b));
        if (tv.size() != 1) {
            r.detail = "theta vector of " + symbol_str(b, spec) + " is not a single coordinate";
            return r;
        }
        const auto& [idx, val] = *tv.begin();
        if (b.kind == SymKind::Mix && val != 1) {
            r.detail = "Mix column without a +1 at " + symbol_str(b, spec);
            return r;
        }
        if (val != 1 && val != -1) {
            r.detail = "entry not in {+1,-1} at " + symbol_str(b, spec);
            return r;
        }
        if (!seen.insert(idx).second) {
            r.detail = "two symbols share the coordinate " + idx.str();
            return r;
        }
        indices.push_back(idx);
    }
    // entrywise: each collected functional meets each symbol in at most one +-1
    for (const ThetaIndex& idx : indices) {
        int hits = 0;
        for (const BasisSymbol& b : pair_symbols) {
            const Rat v = theta(idx, sym_single(b));
            if (v == 0) continue;
            if (v != 1 && v != -1) {
                r.detail = "entry not in {+1,-1} for " + idx.str();
                return r;
            }
            ++hits;
        }
        if (hits != 1) {
            r.detail = "coordinate " + idx.str() + " hits " + std::to_string(hits) + " symbols";
            return r;
        }
        ++r.checks;
    }
    r.pass = true;
    std::ostringstream os;
    os << pair_symbols.size() << "x" << indices.size() << " signed permutation verified entrywise";
    r.detail = os.str();
    return r;
}

SuiteReport suite_equivariance(const ManifoldSpec& spec) {
    SuiteReport r;
    r.suite = "equivariance";
    const auto words = enumerate_words(spec.group, spec.window);
    std::mt19937 rng(42);
    std::vector<Word> gammas;
    for (int k = 0; k < 20; ++k)
        gammas.push_back(words[std::uniform_int_distribution<std::size_t>(0, words.size() - 1)(rng)]);

    const SpaceKind lvl1[] = {SpaceKind::pi3C1, SpaceKind::pi4C1};
    const SpaceKind lvl2[] = {SpaceKind::pi3C2, SpaceKind::pi4C2};
    const SpaceKind lvl3[] = {SpaceKind::pi3C3, SpaceKind::pi4C3};

    const NSpan n = build_N(spec);
    std::vector<SymVec> n_generators;
    {
        const ModuleSpace p53 = build_space(spec, SpaceKind::pi5C3);
        for (const BasisSymbol& b : p53.symbols)
            if (n_aligned(b)) n_generators.push_back(sym_single(b));
        for (const QVector& g : n.item6) n_generators.push_back(unresolve(g, n.space));
    }

    for (const Word& g : gammas) {
        for (int d = 0; d < 2; ++d) {
            const ModuleSpace s1 = build_space(spec, lvl1[d]);
            const ModuleSpace s2 = build_space(spec, lvl2[d]);
            for (const BasisSymbol& b : s1.symbols) {
                for (int i = 0; i <= 2; ++i) {
                    SymVec lhs = diagonal_t(g, coface_tw(1, i, sym_single(b), spec), 2);
                    SymVec rhs = coface_tw(1, i, diagonal_t(g, sym_single(b), 1), spec);
                    if (!sym_eq(lhs, rhs)) {
                        r.detail = "coface does not commute with the diagonal action at " +
                                   symbol_str(b, spec) + ", gamma=" + word_str(g);
                        return r;
                    }
                    ++r.checks;
                }
            }
            const ModuleSpace s3 = build_space(spec, lvl3[d]);
            for (const BasisSymbol& b : s2.symbols) {
                for (int i = 0; i <= 3; ++i) {
                    SymVec lhs = diagonal_t(g, coface_tw(2, i, sym_single(b), spec), 3);
                    SymVec rhs = coface_tw(2, i, diagonal_t(g, sym_single(b), 2), spec);
                    if (!sym_eq(lhs, rhs)) {
                        r.detail = "coface does not commute with the diagonal action at " +
                                   symbol_str(b, spec) + ", gamma=" + word_str(g);
                        return r;
                    }
                    ++r.checks;
                }
                for (int i = 1; i <= 2; ++i) {
                    SymVec lhs = diagonal_t(g, codegeneracy(2, i, sym_single(b)), 1);
                    SymVec rhs = codegeneracy(2, i, diagonal_t(g, sym_single(b), 2));
                    if (!sym_eq(lhs, rhs)) {
                        r.detail = "codegeneracy does not commute at " + symbol_str(b, spec);
                        return r;
                    }
                    ++r.checks;
                }
            }
            for (const BasisSymbol& b : s3.symbols) {
                for (int i = 1; i <= 3; ++i) {
                    SymVec lhs = diagonal_t(g, codegeneracy(3, i, sym_single(b)), 2);
                    SymVec rhs = codegeneracy(3, i, diagonal_t(g, sym_single(b), 3));
                    if (!sym_eq(lhs, rhs)) {
                        r.detail = "codegeneracy does not commute at " + symbol_str(b, spec);
                        return r;
                    }
                    ++r.checks;
                }
            }
        }

        // Whitehead naturality on a deterministic sample of supported pairs
        const std::size_t cap = std::min<std::size_t>(words.size(), 5);
        for (std::size_t x = 0; x < cap; ++x) {
            for (std::size_t y = 0; y < cap; ++y) {
                const SymVec pairs[][2] = {
                    {wv(1, 2, words[x]), wv(2, 3, words[y])},
                    {wv(1, 3, words[x]), wv(2, 3, words[y])},
                    {wv(1, 2, words[x]), wv(1, 3, words[y])},
                    {wv(1, 2, words[x]), wv(1, 2, words[y])},
                };
                for (const auto& p : pairs) {
                    SymVec lhs = diagonal_t(g, whitehead(p[0], p[1], 3, WhMode::exact, spec), 3);
                    SymVec rhs = whitehead(diagonal_t(g, p[0], 3), diagonal_t(g, p[1], 3), 3,
                                           WhMode::exact, spec);
                    if (!sym_eq(lhs, rhs)) {
                        r.detail = "whitehead naturality fails, gamma=" + word_str(g);
                        return r;
                    }
                    ++r.checks;
                }
            }
        }

        // descent to the quotient chart: the diagonal action preserves ker(reduce)
        for (const SymVec& gen : n_generators) {
            if (!reduce_mod_N(diagonal_t(g, gen, 3), n).is_zero()) {
                r.detail = "diagonal action leaves span(N), gamma=" + word_str(g) + " on " +
                           sym_vec_str(gen, spec);
                return r;
            }
            ++r.checks;
        }
    }
    r.pass = true;
    r.detail = "20 diagonal actions commute and descend";
    return r;
}

SuiteReport suite_kernel_diagonal(const ManifoldSpec& spec) {
    SuiteReport r;
    r.suite = "kernel-diagonal";
    Tower tower(spec);
    const auto info = tower.e2_31_kernel();
    const long expected =
        spec.c4.empty()
            ? static_cast<long>(enumerate_words(spec.group, spec.window).size() * spec.p4.size())
            : -1;
    const long dim = static_cast<long>(info.basis.size());
    if (!info.is_diagonal) {
        r.detail = "kernel of d1(3,1) is not the diagonal (dim " + std::to_string(dim) + ")";
        return r;
    }
    if (expected >= 0 && dim != expected) {
        r.detail = "kernel dim " + std::to_string(dim) + " != expected " + std::to_string(expected);
        return r;
    }
    r.pass = true;
    r.checks = dim;
    r.detail = "kernel = diagonal, dim " + std::to_string(dim);
    return r;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"relations", "cofaces", "n-membership", "dual-basis", "equivariance", "kernel-diagonal"};
}

SuiteReport run_suite(const std::string& name, const ManifoldSpec& spec) {
    spec.validate();
    if (name == "relations") return suite_relations(spec);
    if (name == "cofaces") return suite_cofaces(spec);
    if (name == "n-membership") return suite_n_membership(spec);
    if (name == "dual-basis") return suite_dual_basis(spec);
    if (name == "equivariance") return suite_equivariance(spec);
    if (name == "kernel-diagonal") return suite_kernel_diagonal(spec);
    throw ParseError("unknown suite '" + name + "'");
}

} // namespace confspace
