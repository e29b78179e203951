#include "confspace/word.hpp"

#include <sstream>

namespace confspace {

Word word_identity() { return Word{}; }

Word word_s_power(long k) {
    Word w;
    const std::int8_t e = k >= 0 ? 1 : -1;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) w.letters.push_back(Letter{0, e});
    return w;
}

static void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) out.pop_back();
    else out.push_back(l);
}

Word multiply(const Word& a, const Word& b) {
    Word w;
    w.letters = a.letters;
    for (const Letter& l : b.letters) push_reduced(w.letters, l);
    return w;
}

Word inverse(const Word& a) {
    Word w;
    w.letters.reserve(a.letters.size());
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
        w.letters.push_back(Letter{it->gen, static_cast<std::int8_t>(-it->exp)});
    return w;
}

Word retract_rho(const Word& a) {
    long k = 0;
    for (const Letter& l : a.letters)
        if (l.gen == 0) k += l.exp;
    return word_s_power(k);
}

bool in_s_factor(const Word& a) {
    for (const Letter& l : a.letters)
        if (l.gen != 0) return false;
    return true;
}

long deck_zeta(const Word& a) {
    long k = 0;
    for (const Letter& l : a.letters)
        if (l.gen == 0) k += l.exp;
    return k;
}

std::vector<Word> enumerate_words(const GroupSpec& g, int max_len) {
    std::vector<Word> out;
    std::vector<Letter> alphabet;
    for (int gen = 0; gen <= g.hat_rank; ++gen) {
        alphabet.push_back(Letter{static_cast<std::uint16_t>(gen), 1});
        alphabet.push_back(Letter{static_cast<std::uint16_t>(gen), -1});
    }
    out.push_back(word_identity());
    std::vector<Word> frontier = {word_identity()};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (const Letter& l : alphabet) {
                if (!w.letters.empty() && w.letters.back().gen == l.gen &&
                    w.letters.back().exp == -l.exp)
                    continue;
                Word e = w;
                e.letters.push_back(l);
                next.push_back(std::move(e));
            }
        }
        // frontier words were generated in lex order and extensions preserve it
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

void check_alphabet(const GroupSpec& g, const Word& w) {
    for (const Letter& l : w.letters)
        if (l.gen > static_cast<std::uint16_t>(g.hat_rank))
            throw AlphabetMismatch("generator h" + std::to_string(l.gen) +
                                   " not present at hat_rank " + std::to_string(g.hat_rank));
}

std::string word_str(const Word& w) {
    if (w.is_identity()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        const Letter& l = w.letters[i];
        if (l.gen == 0) os << 's';
        else os << 'h' << l.gen;
        if (l.exp < 0) os << "^-1";
    }
    return os.str();
}

Word word_parse(const GroupSpec& g, const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "e" || tok == "1") continue;
        std::string name = tok;
        long exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            try {
                std::size_t pos = 0;
                exp = std::stol(e, &pos);
                if (pos != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in token '" + tok + "'");
            }
            if (exp == 0) continue;
        }
        std::uint16_t gen;
        if (name == "s") {
            gen = 0;
        } else if (name.size() >= 2 && name[0] == 'h') {
            try {
                std::size_t pos = 0;
                long idx = std::stol(name.substr(1), &pos, 10);
                if (pos != name.size() - 1 || idx < 1) throw std::invalid_argument(name);
                gen = static_cast<std::uint16_t>(idx);
            } catch (const std::exception&) {
                throw ParseError("bad generator token '" + tok + "'");
            }
        } else {
            throw ParseError("bad generator token '" + tok + "'");
        }
        const std::int8_t e = exp > 0 ? 1 : -1;
        for (long i = 0; i < (exp > 0 ? exp : -exp); ++i)
            push_reduced(w.letters, Letter{gen, e});
    }
    check_alphabet(g, w);
    return w;
}

} // namespace confspace
