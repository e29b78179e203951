#ifndef CONFSPACE_SYMBOL_HPP
#define CONFSPACE_SYMBOL_HPP

#include <compare>
#include <cstdint>

#include "confspace/word.hpp"

namespace confspace {

/// Canonical generator tags for the homotopy module bases.
///
///   T3/T4/T5  tau-pushforward of a decorated degree-3/4/5 primitive
///   W         decorated orbit class t_i^w w_ij, stored with i<j and the
///             decoration on the left slot
///   WhWT      [t_i^a w_ij, tau_j of decorated degree-3 base primitive]
///   Sq        [t_i^a w_ij, t_i^b w_ij] with a<b in the global word order
///   Mix       [t_1^a w_12, t_2^b w_23]
enum class SymKind : std::uint8_t { T3, T4, T5, W, WhWT, Sq, Mix };

struct BasisSymbol {
    SymKind kind = SymKind::T3;
    std::uint8_t a = 0;  // slot for T*, first index for W/WhWT/Sq
    std::uint8_t b = 0;  // second index for W/WhWT/Sq
    Word w1;             // T*: decoration; W: decoration; WhWT: w-decoration; Sq/Mix: first word
    Word w2;             // WhWT: primitive decoration; Sq/Mix: second word
    std::int16_t prim = -1;  // index into the spec's p3/p4/p5 list

    friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;

    int max_dec_len() const {
        int m = w1.length();
        if (w2.length() > m) m = w2.length();
        return m;
    }

    /// Homotopy degree of the class this symbol names.
    int degree() const {
        switch (kind) {
            case SymKind::T3:
            case SymKind::W: return 3;
            case SymKind::T4: return 4;
            default: return 5;
        }
    }

    /// Smallest configuration level the symbol makes sense at.
    int min_level() const {
        switch (kind) {
            case SymKind::T3:
            case SymKind::T4:
            case SymKind::T5: return a;
            case SymKind::W:
            case SymKind::WhWT:
            case SymKind::Sq: return b;
            case SymKind::Mix: return 3;
        }
        return 3;
    }

    /// Total order, graded by the longest decoration so that enumerating a
    /// space at a smaller window yields a prefix of the larger window's list.
    friend std::strong_ordering operator<=>(const BasisSymbol& x, const BasisSymbol& y) {
        if (auto c = x.max_dec_len() <=> y.max_dec_len(); c != 0) return c;
        if (auto c = x.kind <=> y.kind; c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        if (auto c = x.b <=> y.b; c != 0) return c;
        if (auto c = x.w1 <=> y.w1; c != 0) return c;
        if (auto c = x.w2 <=> y.w2; c != 0) return c;
        return x.prim <=> y.prim;
    }
};

inline BasisSymbol sym_t(int degree, int slot, Word dec, int prim) {
    BasisSymbol s;
    s.kind = degree == 3 ? SymKind::T3 : degree == 4 ? SymKind::T4 : SymKind::T5;
    s.a = static_cast<std::uint8_t>(slot);
    s.w1 = std::move(dec);
    s.prim = static_cast<std::int16_t>(prim);
    return s;
}

inline BasisSymbol sym_w(int i, int j, Word dec) {
    BasisSymbol s;
    s.kind = SymKind::W;
    s.a = static_cast<std::uint8_t>(i);
    s.b = static_cast<std::uint8_t>(j);
    s.w1 = std::move(dec);
    return s;
}

inline BasisSymbol sym_whwt(int i, int j, Word alpha, Word g, int prim) {
    BasisSymbol s;
    s.kind = SymKind::WhWT;
    s.a = static_cast<std::uint8_t>(i);
    s.b = static_cast<std::uint8_t>(j);
    s.w1 = std::move(alpha);
    s.w2 = std::move(g);
    s.prim = static_cast<std::int16_t>(prim);
    return s;
}

inline BasisSymbol sym_sq(int i, int j, Word lo, Word hi) {
    BasisSymbol s;
    s.kind = SymKind::Sq;
    s.a = static_cast<std::uint8_t>(i);
    s.b = static_cast<std::uint8_t>(j);
    s.w1 = std::move(lo);
    s.w2 = std::move(hi);
    return s;
}

inline BasisSymbol sym_mix(Word a, Word b) {
    BasisSymbol s;
    s.kind = SymKind::Mix;
    s.w1 = std::move(a);
    s.w2 = std::move(b);
    return s;
}

} // namespace confspace

#endif
