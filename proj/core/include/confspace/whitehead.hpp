#ifndef CONFSPACE_WHITEHEAD_HPP
#define CONFSPACE_WHITEHEAD_HPP

#include <vector>

#include "confspace/symop.hpp"

namespace confspace {

/// exact: only products the structure results determine; anything else throws.
/// mod_n5: additionally rewrites [W(i,j,a), T3(i,.)] to 0 and drops every
/// level-3 coordinate lying in N items (1)-(5).
enum class WhMode { exact, mod_n5 };

/// Bilinear Whitehead product pi3 x pi3 -> pi5 at configuration level 2 or 3.
SymVec whitehead(const SymVec& u, const SymVec& v, int level, WhMode mode,
                 const ManifoldSpec& spec);

/// True when a pi5C3 basis symbol lies in N items (1)-(5): every T5 and WhWT,
/// every Sq(1,2) and Sq(2,3), Sq(1,3,a,b) unless both words are s-only, and
/// Mix(a,b) when either word is the identity or leaves the s-factor.
bool n_aligned(const BasisSymbol& s);
SymVec drop_n_aligned(const SymVec& v);

/// Level-2 coface on degree-5 vectors, Whitehead symbols expanded by
/// naturality [delta u, delta v] = delta [u, v].
SymVec coface5(int i, const SymVec& v, const ManifoldSpec& spec, WhMode mode);

/// The subspace N of the degree-5 level-3 module, in truncated form: the
/// aligned symbols plus the span of the four coface images of the s-only
/// decorated level-2 square classes (the S^1 x D^3 sub-configuration).
struct NSpan {
    ModuleSpace space;       // pi5C3 chart at the 2L working window
    int user_window = 1;     // L
    std::vector<QVector> item6;  // mod-n5 reduced coface images, nonzero only
    Echelon item6_echelon;
    std::vector<BasisSymbol> chart;  // in-window survivors, canonical order

    NSpan() : item6_echelon(SpaceId{}) {}
};

NSpan build_N(const ManifoldSpec& spec);

/// Quotient coordinates of v: aligned coordinates dropped, then eliminated
/// against the row-reduced item6 span. Result lives in n.space coordinates,
/// supported on surviving (non-pivot) symbols.
QVector reduce_mod_N(const SymVec& v, const NSpan& n);
QVector reduce_mod_N(const QVector& v, const NSpan& n);

/// Window symbols of N_0 at level 2 or 3: W(i,j,a) with a in ker(rho).
std::vector<BasisSymbol> build_N0(const ManifoldSpec& spec, int level);

} // namespace confspace

#endif
