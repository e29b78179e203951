#ifndef CONFSPACE_THETA_HPP
#define CONFSPACE_THETA_HPP

#include <map>
#include <string>
#include <vector>

#include "confspace/symop.hpp"

namespace confspace {

/// A coordinate of the map Theta: pi5 of the level-3 chart -> Q^infinity.
/// Composite indices pair with Mix symbols through the deck shadow; square
/// indices pair with Sq symbols. Restricted kinds are the same forms with
/// the index constraints of the covering-space variant: both integers
/// nonzero, and distinct for composites.
struct ThetaIndex {
    enum class Kind : std::uint8_t { composite, square, restricted_composite, restricted_square };
    Kind kind = Kind::composite;
    int i = 0, j = 0;  // square kinds only, i < j
    long a = 0, b = 0;

    bool is_square() const { return kind == Kind::square || kind == Kind::restricted_square; }
    bool is_restricted() const {
        return kind == Kind::restricted_composite || kind == Kind::restricted_square;
    }
    /// Index constraints; restricted kinds add the nonzero/distinct rules.
    bool legal() const;

    friend bool operator==(const ThetaIndex&, const ThetaIndex&) = default;
    friend std::strong_ordering operator<=>(const ThetaIndex& x, const ThetaIndex& y) {
        const int xs = x.is_square(), ys = y.is_square();
        if (auto c = xs <=> ys; c != 0) return c;
        if (auto c = x.i <=> y.i; c != 0) return c;
        if (auto c = x.j <=> y.j; c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }

    std::string str() const;
};

ThetaIndex theta_composite(long a, long b, bool restricted = false);
ThetaIndex theta_square(int i, int j, long a, long b, bool restricted = false);
ThetaIndex theta_index_parse(const std::string& text, bool restricted = false);

/// Evaluates one Theta coordinate on a degree-5 level-3 vector. Throws
/// IllegalIndex when a restricted index violates its constraints.
Rat theta(const ThetaIndex& index, const SymVec& v);

/// All nonzero Theta coordinates of v (unrestricted kinds).
std::map<ThetaIndex, Rat> theta_vector(const SymVec& v);

struct ThetaRankResult {
    int rank = 0;
    Certificate certificate;
};

/// Rank of Theta(classes) modulo Theta(relations), optionally in the
/// restricted coordinate set.
ThetaRankResult theta_rank(const std::vector<SymVec>& classes,
                           const std::vector<SymVec>& relations, bool restricted, int window,
                           const std::string& config_hash);

} // namespace confspace

#endif
