#ifndef CONFSPACE_WORD_HPP
#define CONFSPACE_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "confspace/errors.hpp"

namespace confspace {

/// The fundamental group is modeled as Z * F_r: one generator `s` for the
/// S^1 factor and free generators h1..hr for the other summand.
struct GroupSpec {
    int hat_rank = 0;  // r >= 0; r = 0 is the S^1 x D^3 case
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// One letter of a freely reduced word: generator id 0 = s, 1..r = h_i,
/// with exponent +1 or -1.
struct Letter {
    std::uint16_t gen = 0;
    std::int8_t exp = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
    /// Rank in the fixed generator order s < s^-1 < h1 < h1^-1 < ...
    int rank() const { return 2 * gen + (exp < 0 ? 1 : 0); }
};

/// Freely reduced word; the empty sequence is the identity.
struct Word {
    std::vector<Letter> letters;

    bool is_identity() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    friend bool operator==(const Word&, const Word&) = default;
    /// Length-lexicographic order with the fixed generator order. This is the
    /// one total order used everywhere (basis enumeration, Sq normal forms).
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() <=> b.letters.size();
        for (std::size_t i = 0; i < a.letters.size(); ++i) {
            if (a.letters[i].rank() != b.letters[i].rank())
                return a.letters[i].rank() <=> b.letters[i].rank();
        }
        return std::strong_ordering::equal;
    }
};

Word word_identity();
/// Word "s^k" for the S^1 generator.
Word word_s_power(long k);

/// Freely reduced concatenation.
Word multiply(const Word& a, const Word& b);
Word inverse(const Word& a);

/// Image under the retraction s -> s, h_i -> 1; always a pure power of s.
Word retract_rho(const Word& a);
/// True iff the reduced word uses only the generator s.
bool in_s_factor(const Word& a);
/// Exponent sum of s: the Z-valued deck shadow.
long deck_zeta(const Word& a);

/// All freely reduced words of length <= max_len over Z * F_r, sorted
/// length-lexicographically. Strictly increasing and duplicate-free.
std::vector<Word> enumerate_words(const GroupSpec& g, int max_len);

/// Validates that every generator of `w` exists in `g`.
void check_alphabet(const GroupSpec& g, const Word& w);

/// Text form: space-separated letters with caret exponents ("s h1^-1 s");
/// "e" (or the empty string) is the identity.
std::string word_str(const Word& w);
Word word_parse(const GroupSpec& g, const std::string& text);

} // namespace confspace

#endif
