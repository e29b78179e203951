#include "confspace/symop.hpp"

#include <sstream>

#include "confspace/errors.hpp"

namespace confspace {

void sym_add(SymVec& v, const BasisSymbol& s, const Rat& c) {
    if (c == 0) return;
    auto it = v.find(s);
    if (it == v.end()) {
        v.emplace(s, c);
    } else {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

SymVec sym_single(const BasisSymbol& s, const Rat& c) {
    SymVec v;
    sym_add(v, s, c);
    return v;
}

SymVec sym_sum(const SymVec& a, const SymVec& b) {
    SymVec v = a;
    for (const auto& [s, c] : b) sym_add(v, s, c);
    return v;
}

SymVec sym_scaled(const SymVec& v, const Rat& c) {
    SymVec out;
    for (const auto& [s, x] : v) sym_add(out, s, c * x);
    return out;
}

bool sym_is_zero(const SymVec& v) { return v.empty(); }

std::string sym_vec_str(const SymVec& v, const ManifoldSpec& spec) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << rat_str(c) << "*";
        os << symbol_str(s, spec);
    }
    return os.str();
}

BasisSymbol normalize_w(int i, int j, int dec_slot, const Word& w) {
    if (i == j) throw ParseError("w_ij needs distinct indices");
    if (dec_slot != i && dec_slot != j) throw ParseError("decoration slot must be i or j");
    const int lo = i < j ? i : j;
    const int hi = i < j ? j : i;
    // w_ij = w_ji; t_hi^w w = t_lo^{w^-1} w
    return sym_w(lo, hi, dec_slot == lo ? w : inverse(w));
}

namespace {

// Sq decorations are stored strictly ordered; a swap contributes -1 and a
// repeated decoration is zero (graded antisymmetry of degree-3 products).
void add_sq(SymVec& out, int i, int j, const Word& u, const Word& v, const Rat& c) {
    if (u == v) return;
    if (u < v) sym_add(out, sym_sq(i, j, u, v), c);
    else sym_add(out, sym_sq(i, j, v, u), -c);
}

} // namespace

SymVec apply_t(int slot, const Word& alpha, const SymVec& v) {
    SymVec out;
    for (const auto& [s, c] : v) {
        switch (s.kind) {
            case SymKind::T3:
            case SymKind::T4:
            case SymKind::T5:
                if (slot == s.a) sym_add(out, sym_t(s.degree(), s.a, multiply(alpha, s.w1), s.prim), c);
                else sym_add(out, s, c);
                break;
            case SymKind::W:
                if (slot == s.a) sym_add(out, sym_w(s.a, s.b, multiply(alpha, s.w1)), c);
                else if (slot == s.b) sym_add(out, sym_w(s.a, s.b, multiply(s.w1, inverse(alpha))), c);
                else sym_add(out, s, c);
                break;
            case SymKind::WhWT:
                if (slot == s.a)
                    sym_add(out, sym_whwt(s.a, s.b, multiply(alpha, s.w1), s.w2, s.prim), c);
                else if (slot == s.b)
                    sym_add(out, sym_whwt(s.a, s.b, multiply(s.w1, inverse(alpha)),
                                          multiply(alpha, s.w2), s.prim), c);
                else sym_add(out, s, c);
                break;
            case SymKind::Sq:
                if (slot == s.a)
                    add_sq(out, s.a, s.b, multiply(alpha, s.w1), multiply(alpha, s.w2), c);
                else if (slot == s.b)
                    add_sq(out, s.a, s.b, multiply(s.w1, inverse(alpha)),
                           multiply(s.w2, inverse(alpha)), c);
                else sym_add(out, s, c);
                break;
            case SymKind::Mix:
                // Mix(u,v) = [t_1^u w_12, t_2^v w_23]
                if (slot == 1) sym_add(out, sym_mix(multiply(alpha, s.w1), s.w2), c);
                else if (slot == 2)
                    sym_add(out, sym_mix(multiply(s.w1, inverse(alpha)), multiply(alpha, s.w2)), c);
                else if (slot == 3)
                    sym_add(out, sym_mix(s.w1, multiply(s.w2, inverse(alpha))), c);
                else sym_add(out, s, c);
                break;
        }
    }
    return out;
}

SymVec diagonal_t(const Word& alpha, const SymVec& v, int level) {
    SymVec out = v;
    for (int slot = 1; slot <= level; ++slot) out = apply_t(slot, alpha, out);
    return out;
}

QVector apply_t(int slot, const Word& alpha, const QVector& v, const ModuleSpace& working) {
    return resolve(apply_t(slot, alpha, unresolve(v, working)), working);
}

QVector diagonal_t(const Word& alpha, const QVector& v, const ModuleSpace& working) {
    return resolve(diagonal_t(alpha, unresolve(v, working), space_level(working.kind)), working);
}

SymVec tau_push(int slot, const SymVec& v) {
    SymVec out;
    for (const auto& [s, c] : v) {
        if ((s.kind != SymKind::T3 && s.kind != SymKind::T4 && s.kind != SymKind::T5) || s.a != 1)
            throw LevelMismatch("tau_push expects level-1 T-symbols");
        sym_add(out, sym_t(s.degree(), slot, s.w1, s.prim), c);
    }
    return out;
}

SymVec codegeneracy(int n, int i, const SymVec& v) {
    if (i < 1 || i > n) throw LevelMismatch("codegeneracy index out of range");
    SymVec out;
    auto drop_index = [i](int j) { return j > i ? j - 1 : j; };
    for (const auto& [s, c] : v) {
        if (s.min_level() > n) throw LevelMismatch("symbol above source level");
        switch (s.kind) {
            case SymKind::T3:
            case SymKind::T4:
            case SymKind::T5:
                if (s.a != i) sym_add(out, sym_t(s.degree(), drop_index(s.a), s.w1, s.prim), c);
                break;
            case SymKind::W:
                if (i != s.a && i != s.b)
                    sym_add(out, sym_w(drop_index(s.a), drop_index(s.b), s.w1), c);
                break;
            case SymKind::WhWT:
                if (i != s.a && i != s.b)
                    sym_add(out, sym_whwt(drop_index(s.a), drop_index(s.b), s.w1, s.w2, s.prim), c);
                break;
            case SymKind::Sq:
                if (i != s.a && i != s.b)
                    sym_add(out, sym_sq(drop_index(s.a), drop_index(s.b), s.w1, s.w2), c);
                break;
            case SymKind::Mix:
                // forgetting any of the three points kills one rotating pair
                break;
        }
    }
    return out;
}

SymVec correction_c3(const ManifoldSpec& spec, const Word& g, int prim) {
    SymVec out;
    if (prim < 0 || prim >= static_cast<int>(spec.p3.size())) return out;
    auto it = spec.c3.find(spec.p3[prim].name);
    if (it == spec.c3.end()) return out;
    const Word ginv = inverse(g);
    for (const C3Term& t : it->second)
        sym_add(out, sym_w(1, 2, multiply(g, multiply(t.gamma, ginv))), t.coeff);
    return out;
}

SymVec correction_c4(const ManifoldSpec& spec, const Word& g, int prim) {
    SymVec out;
    if (prim < 0 || prim >= static_cast<int>(spec.p4.size())) return out;
    auto it = spec.c4.find(spec.p4[prim]);
    if (it == spec.c4.end()) return out;
    for (const C4Term& t : it->second)
        sym_add(out, sym_t(4, t.slot, multiply(g, t.g), spec.p4_index(t.prim)), t.coeff);
    return out;
}

namespace {

SymVec correction(const ManifoldSpec& spec, int degree, const Word& g, int prim) {
    if (degree == 3) return correction_c3(spec, g, prim);
    if (degree == 4) return correction_c4(spec, g, prim);
    return {};
}

} // namespace

SymVec coface_tw(int n, int i, const SymVec& v, const ManifoldSpec& spec) {
    if (n < 1 || n > 2) throw LevelMismatch("coface defined for source levels 1 and 2");
    if (i < 0 || i > n + 1) throw LevelMismatch("coface index out of range");
    SymVec out;
    for (const auto& [s, c] : v) {
        if (s.min_level() > n) throw LevelMismatch("symbol above source level");
        if (s.kind == SymKind::WhWT || s.kind == SymKind::Sq || s.kind == SymKind::Mix)
            throw LevelMismatch("degree-5 Whitehead symbols take coface5");
        if (s.kind == SymKind::W) {
            if (n != 2) throw LevelMismatch("W-symbols live at level >= 2");
            // the four level-2 coface formulas on t_1^a w_12
            switch (i) {
                case 0: sym_add(out, sym_w(2, 3, s.w1), c); break;
                case 1:
                    sym_add(out, sym_w(1, 3, s.w1), c);
                    sym_add(out, sym_w(2, 3, s.w1), c);
                    break;
                case 2:
                    sym_add(out, sym_w(1, 2, s.w1), c);
                    sym_add(out, sym_w(1, 3, s.w1), c);
                    break;
                case 3: sym_add(out, sym_w(1, 2, s.w1), c); break;
            }
            continue;
        }
        // T-symbols
        const int deg = s.degree();
        if (n == 1) {
            switch (i) {
                case 0: sym_add(out, sym_t(deg, 2, s.w1, s.prim), c); break;
                case 1: {
                    sym_add(out, sym_t(deg, 1, s.w1, s.prim), c);
                    sym_add(out, sym_t(deg, 2, s.w1, s.prim), c);
                    for (const auto& [cs, cc] : correction(spec, deg, s.w1, s.prim))
                        sym_add(out, cs, c * cc);
                    break;
                }
                case 2: sym_add(out, sym_t(deg, 1, s.w1, s.prim), c); break;
            }
        } else {
            switch (i) {
                case 0: sym_add(out, sym_t(deg, s.a + 1, s.w1, s.prim), c); break;
                case 3: sym_add(out, s, c); break;
                case 1:
                    if (s.a == 2) {
                        sym_add(out, sym_t(deg, 3, s.w1, s.prim), c);
                    } else {
                        // delta_2^1 o tau_1 = delta_2^3 o delta_1^1
                        sym_add(out, sym_t(deg, 1, s.w1, s.prim), c);
                        sym_add(out, sym_t(deg, 2, s.w1, s.prim), c);
                        for (const auto& [cs, cc] : correction(spec, deg, s.w1, s.prim))
                            sym_add(out, cs, c * cc);  // delta_2^3 fixes W(1,2) and T-slots
                    }
                    break;
                case 2:
                    if (s.a == 1) {
                        sym_add(out, s, c);
                    } else {
                        // delta_2^2 o tau_2 = delta_2^0 o delta_1^1
                        sym_add(out, sym_t(deg, 2, s.w1, s.prim), c);
                        sym_add(out, sym_t(deg, 3, s.w1, s.prim), c);
                        for (const auto& [cs, cc] : correction(spec, deg, s.w1, s.prim)) {
                            // push the correction through delta_2^0
                            if (cs.kind == SymKind::W)
                                sym_add(out, sym_w(2, 3, cs.w1), c * cc);
                            else
                                sym_add(out, sym_t(cs.degree(), cs.a + 1, cs.w1, cs.prim), c * cc);
                        }
                    }
                    break;
            }
        }
    }
    return out;
}

QVector resolve(const SymVec& v, const ModuleSpace& space) {
    QVector out{space.id, {}};
    for (const auto& [s, c] : v) out.set(space.index_of(s), c);
    return out;
}

SymVec unresolve(const QVector& v, const ModuleSpace& space) {
    if (!(v.space == space.id)) throw SpaceMismatch("unresolve: vector from a different space");
    SymVec out;
    for (const auto& [i, c] : v.entries) {
        if (i >= space.dim()) throw SpaceMismatch("unresolve: index beyond space dimension");
        sym_add(out, space.symbols[i], c);
    }
    return out;
}

} // namespace confspace
