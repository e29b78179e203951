#ifndef CONFSPACE_SYMOP_HPP
#define CONFSPACE_SYMOP_HPP

#include <map>

#include "confspace/manifold.hpp"
#include "confspace/qlinalg.hpp"
#include "confspace/symbol.hpp"

namespace confspace {

/// Formal Q-linear combination of basis symbols. Operations on SymVec are
/// total: decorations may grow beyond any window; truncation is enforced only
/// when a vector is resolved into a concrete ModuleSpace.
using SymVec = std::map<BasisSymbol, Rat>;

void sym_add(SymVec& v, const BasisSymbol& s, const Rat& c);
SymVec sym_single(const BasisSymbol& s, const Rat& c = Rat(1));
SymVec sym_sum(const SymVec& a, const SymVec& b);
SymVec sym_scaled(const SymVec& v, const Rat& c);
bool sym_is_zero(const SymVec& v);
std::string sym_vec_str(const SymVec& v, const ManifoldSpec& spec);

/// Canonical form of the decorated orbit class t_{dec_slot}^w w_{ij}:
/// W(min,max, left decoration), coefficient +1 (both rewriting identities
/// are sign-free).
BasisSymbol normalize_w(int i, int j, int dec_slot, const Word& w);

/// Action of t_slot^alpha.
SymVec apply_t(int slot, const Word& alpha, const SymVec& v);
/// Simultaneous action of t_1^alpha ... t_level^alpha.
SymVec diagonal_t(const Word& alpha, const SymVec& v, int level);

/// Space-resolved variants over a working chart (built at twice the user
/// window); throw TruncationOverflow when a resulting decoration leaves it.
QVector apply_t(int slot, const Word& alpha, const QVector& v, const ModuleSpace& working);
QVector diagonal_t(const Word& alpha, const QVector& v, const ModuleSpace& working);

/// Relabels level-1 T-symbols to the given slot.
SymVec tau_push(int slot, const SymVec& v);

/// Codegeneracy (forget the i-th point), source level n, 1 <= i <= n.
/// Defined on all symbol kinds.
SymVec codegeneracy(int n, int i, const SymVec& v);

/// Coface (double the i-th point), source level n in {1,2}, 0 <= i <= n+1.
/// Handles T- and W-symbols; degree-5 Whitehead symbols go through
/// whitehead.hpp's coface5, which delegates back here for T-symbols.
SymVec coface_tw(int n, int i, const SymVec& v, const ManifoldSpec& spec);

/// delta_1^1 correction for a decorated primitive, extended equivariantly
/// from the configured identity-decoration seed.
SymVec correction_c3(const ManifoldSpec& spec, const Word& g, int prim);
SymVec correction_c4(const ManifoldSpec& spec, const Word& g, int prim);

QVector resolve(const SymVec& v, const ModuleSpace& space);
SymVec unresolve(const QVector& v, const ModuleSpace& space);

} // namespace confspace

#endif
