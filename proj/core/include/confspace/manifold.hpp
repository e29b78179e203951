#ifndef CONFSPACE_MANIFOLD_HPP
#define CONFSPACE_MANIFOLD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confspace/qlinalg.hpp"
#include "confspace/rational.hpp"
#include "confspace/symbol.hpp"
#include "confspace/word.hpp"

namespace confspace {

struct Primitive3 {
    std::string name;
    bool fiber = false;  // S^3-fiber summand; barred from Whitehead products
    friend bool operator==(const Primitive3&, const Primitive3&) = default;
};

/// One term of the delta_1^1 correction, configured at the identity
/// decoration and extended equivariantly under the diagonal action.
struct C3Term {
    Rat coeff;
    Word gamma;  // must lie in the kernel of the retraction rho
};

struct C4Term {
    Rat coeff;
    int slot = 1;  // 1 or 2
    Word g;
    std::string prim;  // p4 name
};

struct ManifoldSpec {
    GroupSpec group;
    std::vector<Primitive3> p3;
    std::vector<std::string> p4;
    std::vector<std::string> p5;
    int window = 1;  // truncation max word length L
    std::map<std::string, std::vector<C3Term>> c3;  // keyed by p3 name
    std::map<std::string, std::vector<C4Term>> c4;  // keyed by p4 name

    /// The S^1 x D^3 preset: hat_rank 0, no primitives.
    static ManifoldSpec s1xd3(int window);

    void validate() const;
    int p3_index(const std::string& name) const;
    int p4_index(const std::string& name) const;
    int p5_index(const std::string& name) const;
    /// Canonical serialization; feeds space ids and config hashes.
    std::string fingerprint() const;
};

enum class SpaceKind : std::uint8_t {
    pi3C1, pi3C2, pi3C3, pi4C1, pi4C2, pi4C3, pi5C1, pi5C2, pi5C3
};

int space_degree(SpaceKind k);
int space_level(SpaceKind k);
std::string space_kind_str(SpaceKind k);
std::optional<SpaceKind> space_kind_parse(const std::string& s);

/// A finite coordinate chart of one homotopy module: the canonical basis
/// truncated to decorations of length <= window, with a stable order.
struct ModuleSpace {
    SpaceKind kind = SpaceKind::pi3C1;
    ManifoldSpec spec;
    int window = 1;  // enumeration window; working spaces use 2L
    std::vector<BasisSymbol> symbols;
    std::map<BasisSymbol, std::uint32_t> index;
    SpaceId id;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(symbols.size()); }
    /// Index of a symbol; throws TruncationOverflow when the symbol is valid
    /// for this space but its decorations exceed the window, SpaceMismatch
    /// when it does not belong to this space at all.
    std::uint32_t index_of(const BasisSymbol& s) const;
    bool contains(const BasisSymbol& s) const { return index.count(s) != 0; }
};

/// Enumerates the canonical truncated basis. `window_override` widens the
/// chart (used for the 2L working window); the symbol order makes the
/// smaller-window basis a prefix of the larger one.
ModuleSpace build_space(const ManifoldSpec& spec, SpaceKind kind,
                        std::optional<int> window_override = std::nullopt);

/// Text forms, e.g. "W(1,2;s h1)", "T3(2;s;x1)", "Sq(1,3;s;s s)",
/// "Mix(s;s^-1)", "WhWT(1,2;s;e;x1)".
std::string symbol_str(const BasisSymbol& s, const ManifoldSpec& spec);
BasisSymbol symbol_parse(const ManifoldSpec& spec, const std::string& text);

} // namespace confspace

#endif
