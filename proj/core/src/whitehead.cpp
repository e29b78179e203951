#include "confspace/whitehead.hpp"

#include "confspace/errors.hpp"

namespace confspace {

namespace {

void add_sq(SymVec& out, int i, int j, const Word& u, const Word& v, const Rat& c) {
    if (u == v) return;
    if (u < v) sym_add(out, sym_sq(i, j, u, v), c);
    else sym_add(out, sym_sq(i, j, v, u), -c);
}

int pair_rank(const BasisSymbol& w) { return w.a * 4 + w.b; }

// [t_i^a w_ij, t_k^b w_kl] for distinct index pairs at level 3, with the
// first pair ranked before the second. Values:
//   [t_1^a w_12, t_2^b w_23] =  Mix(a, b)
//   [t_1^a w_13, t_2^b w_23] = -Mix(a b^-1, b)
//   [t_1^a w_12, t_1^b w_13] = -Mix(a, a^-1 b)
void add_cross_w(SymVec& out, const BasisSymbol& x, const BasisSymbol& y, const Rat& c) {
    const Word& a = x.w1;
    const Word& b = y.w1;
    if (x.a == 1 && x.b == 2 && y.a == 2 && y.b == 3) {
        sym_add(out, sym_mix(a, b), c);
    } else if (x.a == 1 && x.b == 3 && y.a == 2 && y.b == 3) {
        sym_add(out, sym_mix(multiply(a, inverse(b)), b), -c);
    } else if (x.a == 1 && x.b == 2 && y.a == 1 && y.b == 3) {
        sym_add(out, sym_mix(a, multiply(inverse(a), b)), -c);
    } else {
        throw UnsupportedProduct("unreachable W-pair case");
    }
}

// Product of two pure degree-3 symbols; result is a degree-5 vector.
SymVec pair_product(const BasisSymbol& x, const BasisSymbol& y, int level, WhMode mode,
                    const ManifoldSpec& spec) {
    SymVec out;
    const bool xw = x.kind == SymKind::W;
    const bool yw = y.kind == SymKind::W;

    if (xw && yw) {
        if (x.a == y.a && x.b == y.b) {
            add_sq(out, x.a, x.b, x.w1, y.w1, Rat(1));
            return out;
        }
        if (level < 3) throw LevelMismatch("distinct w-pairs need level 3");
        if (pair_rank(x) <= pair_rank(y)) add_cross_w(out, x, y, Rat(1));
        else add_cross_w(out, y, x, Rat(-1));
        return out;
    }

    if (xw != yw) {
        const BasisSymbol& w = xw ? x : y;
        const BasisSymbol& t = xw ? y : x;
        const Rat sign = xw ? Rat(1) : Rat(-1);  // [t, w] = -[w, t]
        if (t.kind != SymKind::T3)
            throw UnsupportedProduct("whitehead products pair degree-3 classes only");
        const bool fiber = spec.p3.at(t.prim).fiber;
        if (t.a != w.a && t.a != w.b) return out;  // [t_i^a w_ij, Im tau_k] = 0
        if (t.a == w.b) {
            if (fiber)
                throw UnsupportedProduct("no formula for products with the fiber class");
            sym_add(out, sym_whwt(w.a, w.b, w.w1, t.w1, t.prim), sign);
            return out;
        }
        // t sits in the left slot of the rotating pair
        if (mode == WhMode::mod_n5 && !fiber) return out;  // lands in N, derived rule
        throw UnsupportedProduct("[t_i^a w_ij, tau_i x] has no exact canonical form");
    }

    throw UnsupportedProduct("no formula for [tau_a x, tau_b y] pairs");
}

} // namespace

SymVec whitehead(const SymVec& u, const SymVec& v, int level, WhMode mode,
                 const ManifoldSpec& spec) {
    if (level != 2 && level != 3) throw LevelMismatch("whitehead products at levels 2 and 3");
    for (const auto* vec : {&u, &v})
        for (const auto& [s, c] : *vec) {
            if (s.degree() != 3) throw UnsupportedProduct("whitehead expects degree-3 vectors");
            if (s.min_level() > level) throw LevelMismatch("symbol above requested level");
        }
    SymVec out;
    for (const auto& [x, cx] : u)
        for (const auto& [y, cy] : v)
            for (const auto& [s, c] : pair_product(x, y, level, mode, spec))
                sym_add(out, s, cx * cy * c);
    if (mode == WhMode::mod_n5 && level == 3) out = drop_n_aligned(out);
    return out;
}

bool n_aligned(const BasisSymbol& s) {
    switch (s.kind) {
        case SymKind::T5:
        case SymKind::WhWT: return true;
        case SymKind::Sq:
            if (s.a == 1 && s.b == 2) return true;
            if (s.a == 2 && s.b == 3) return true;
            return !(in_s_factor(s.w1) && in_s_factor(s.w2));
        case SymKind::Mix: {
            auto excluded = [](const Word& w) { return w.is_identity() || !in_s_factor(w); };
            return excluded(s.w1) || excluded(s.w2);
        }
        default:
            throw SpaceMismatch("n_aligned is defined on degree-5 level-3 symbols");
    }
}

SymVec drop_n_aligned(const SymVec& v) {
    SymVec out;
    for (const auto& [s, c] : v)
        if (!n_aligned(s)) sym_add(out, s, c);
    return out;
}

SymVec coface5(int i, const SymVec& v, const ManifoldSpec& spec, WhMode mode) {
    if (i < 0 || i > 3) throw LevelMismatch("level-2 coface index out of range");
    SymVec out;
    for (const auto& [s, c] : v) {
        if (s.degree() != 5) throw LevelMismatch("coface5 expects degree-5 vectors");
        if (s.min_level() > 2) throw LevelMismatch("coface5 sources live at level 2");
        switch (s.kind) {
            case SymKind::T5:
                for (const auto& [t, ct] : coface_tw(2, i, sym_single(s), spec))
                    sym_add(out, t, c * ct);
                break;
            case SymKind::WhWT: {
                SymVec du = coface_tw(2, i, sym_single(sym_w(s.a, s.b, s.w1)), spec);
                SymVec dv = coface_tw(2, i, sym_single(sym_t(3, s.b, s.w2, s.prim)), spec);
                for (const auto& [t, ct] : whitehead(du, dv, 3, mode, spec))
                    sym_add(out, t, c * ct);
                break;
            }
            case SymKind::Sq: {
                SymVec du = coface_tw(2, i, sym_single(sym_w(s.a, s.b, s.w1)), spec);
                SymVec dv = coface_tw(2, i, sym_single(sym_w(s.a, s.b, s.w2)), spec);
                for (const auto& [t, ct] : whitehead(du, dv, 3, mode, spec))
                    sym_add(out, t, c * ct);
                break;
            }
            default:
                throw LevelMismatch("coface5 sources live at level 2");
        }
    }
    if (mode == WhMode::mod_n5) out = drop_n_aligned(out);
    return out;
}

NSpan build_N(const ManifoldSpec& spec) {
    spec.validate();
    NSpan n;
    n.user_window = spec.window;
    n.space = build_space(spec, SpaceKind::pi5C3, 2 * spec.window);
    n.item6_echelon = Echelon(n.space.id);

    const ModuleSpace sources = build_space(spec, SpaceKind::pi5C2);
    for (const BasisSymbol& s : sources.symbols) {
        if (s.kind != SymKind::Sq) continue;
        if (!in_s_factor(s.w1) || !in_s_factor(s.w2)) continue;
        for (int i = 0; i <= 3; ++i) {
            SymVec img = coface5(i, sym_single(s), spec, WhMode::mod_n5);
            if (sym_is_zero(img)) continue;
            QVector q = resolve(img, n.space);
            n.item6.push_back(q);
            n.item6_echelon.insert(std::move(q));
        }
    }

    for (const BasisSymbol& s : n.space.symbols) {
        if (s.max_dec_len() > n.user_window) continue;
        if (n_aligned(s)) continue;
        if (n.item6_echelon.rows().count(n.space.index_of(s))) continue;
        n.chart.push_back(s);
    }
    return n;
}

QVector reduce_mod_N(const SymVec& v, const NSpan& n) {
    return n.item6_echelon.reduce(resolve(drop_n_aligned(v), n.space));
}

QVector reduce_mod_N(const QVector& v, const NSpan& n) {
    if (!(v.space == n.space.id)) throw SpaceMismatch("reduce_mod_N: vector from a different space");
    return reduce_mod_N(unresolve(v, n.space), n);
}

std::vector<BasisSymbol> build_N0(const ManifoldSpec& spec, int level) {
    if (level != 2 && level != 3) throw LevelMismatch("N_0 lives at levels 2 and 3");
    std::vector<BasisSymbol> out;
    for (const Word& a : enumerate_words(spec.group, spec.window)) {
        if (!retract_rho(a).is_identity()) continue;
        if (level == 2) {
            out.push_back(sym_w(1, 2, a));
        } else {
            out.push_back(sym_w(1, 2, a));
            out.push_back(sym_w(1, 3, a));
            out.push_back(sym_w(2, 3, a));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace confspace
