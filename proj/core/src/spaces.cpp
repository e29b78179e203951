#include "confspace/manifold.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "confspace/errors.hpp"

namespace confspace {

ManifoldSpec ManifoldSpec::s1xd3(int window) {
    ManifoldSpec m;
    m.group.hat_rank = 0;
    m.window = window;
    return m;
}

void ManifoldSpec::validate() const {
    if (group.hat_rank < 0) throw ParseError("hat_rank must be >= 0");
    if (window < 1) throw ParseError("window must be >= 1");
    std::set<std::string> names;
    auto check_name = [&names](const std::string& n) {
        if (n.empty()) throw ParseError("empty primitive name");
        if (!names.insert(n).second) throw ParseError("duplicate primitive name '" + n + "'");
    };
    for (const auto& p : p3) check_name(p.name);
    names.clear();
    for (const auto& n : p4) check_name(n);
    names.clear();
    for (const auto& n : p5) check_name(n);
    for (const auto& [name, terms] : c3) {
        p3_index(name);
        for (const auto& t : terms) {
            check_alphabet(group, t.gamma);
            if (!retract_rho(t.gamma).is_identity())
                throw ParseError("c3 correction word '" + word_str(t.gamma) +
                                 "' is not in the kernel of the retraction");
        }
    }
    for (const auto& [name, terms] : c4) {
        p4_index(name);
        for (const auto& t : terms) {
            check_alphabet(group, t.g);
            if (t.slot < 1 || t.slot > 2) throw ParseError("c4 slot must be 1 or 2");
            p4_index(t.prim);
        }
    }
}

int ManifoldSpec::p3_index(const std::string& name) const {
    for (std::size_t i = 0; i < p3.size(); ++i)
        if (p3[i].name == name) return static_cast<int>(i);
    throw ParseError("unknown p3 primitive '" + name + "'");
}

int ManifoldSpec::p4_index(const std::string& name) const {
    for (std::size_t i = 0; i < p4.size(); ++i)
        if (p4[i] == name) return static_cast<int>(i);
    throw ParseError("unknown p4 primitive '" + name + "'");
}

int ManifoldSpec::p5_index(const std::string& name) const {
    for (std::size_t i = 0; i < p5.size(); ++i)
        if (p5[i] == name) return static_cast<int>(i);
    throw ParseError("unknown p5 primitive '" + name + "'");
}

std::string ManifoldSpec::fingerprint() const {
    std::ostringstream os;
    os << "r=" << group.hat_rank << ";L=" << window << ";p3=";
    for (const auto& p : p3) os << p.name << (p.fiber ? "*" : "") << ",";
    os << ";p4=";
    for (const auto& n : p4) os << n << ",";
    os << ";p5=";
    for (const auto& n : p5) os << n << ",";
    os << ";c3=";
    for (const auto& [name, terms] : c3) {
        os << name << ":";
        for (const auto& t : terms) os << rat_str(t.coeff) << "*[" << word_str(t.gamma) << "]";
        os << ",";
    }
    os << ";c4=";
    for (const auto& [name, terms] : c4) {
        os << name << ":";
        for (const auto& t : terms)
            os << rat_str(t.coeff) << "*T4(" << t.slot << ";" << word_str(t.g) << ";" << t.prim << ")";
        os << ",";
    }
    return os.str();
}

int space_degree(SpaceKind k) {
    switch (k) {
        case SpaceKind::pi3C1:
        case SpaceKind::pi3C2:
        case SpaceKind::pi3C3: return 3;
        case SpaceKind::pi4C1:
        case SpaceKind::pi4C2:
        case SpaceKind::pi4C3: return 4;
        default: return 5;
    }
}

int space_level(SpaceKind k) {
    switch (k) {
        case SpaceKind::pi3C1:
        case SpaceKind::pi4C1:
        case SpaceKind::pi5C1: return 1;
        case SpaceKind::pi3C2:
        case SpaceKind::pi4C2:
        case SpaceKind::pi5C2: return 2;
        default: return 3;
    }
}

std::string space_kind_str(SpaceKind k) {
    static const char* names[] = {"pi3C1", "pi3C2", "pi3C3", "pi4C1", "pi4C2",
                                  "pi4C3", "pi5C1", "pi5C2", "pi5C3"};
    return names[static_cast<int>(k)];
}

std::optional<SpaceKind> space_kind_parse(const std::string& s) {
    for (int i = 0; i < 9; ++i)
        if (space_kind_str(static_cast<SpaceKind>(i)) == s) return static_cast<SpaceKind>(i);
    return std::nullopt;
}

std::uint32_t ModuleSpace::index_of(const BasisSymbol& s) const {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (s.max_dec_len() > window)
        throw TruncationOverflow("symbol '" + symbol_str(s, spec) + "' exceeds window " +
                                 std::to_string(window));
    throw SpaceMismatch("symbol '" + symbol_str(s, spec) + "' is not a basis symbol of " +
                        space_kind_str(kind));
}

ModuleSpace build_space(const ManifoldSpec& spec, SpaceKind kind,
                        std::optional<int> window_override) {
    spec.validate();
    ModuleSpace sp;
    sp.kind = kind;
    sp.spec = spec;
    sp.window = window_override.value_or(spec.window);
    const int n = space_level(kind);
    const int deg = space_degree(kind);
    const std::vector<Word> words = enumerate_words(spec.group, sp.window);

    std::vector<BasisSymbol> out;
    auto add_t_symbols = [&](int degree, std::size_t prim_count) {
        for (int slot = 1; slot <= n; ++slot)
            for (const Word& g : words)
                for (std::size_t p = 0; p < prim_count; ++p)
                    out.push_back(sym_t(degree, slot, g, static_cast<int>(p)));
    };

    if (deg == 3) {
        add_t_symbols(3, spec.p3.size());
        if (n >= 2)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (const Word& a : words) out.push_back(sym_w(i, j, a));
    } else if (deg == 4) {
        add_t_symbols(4, spec.p4.size());
    } else {
        add_t_symbols(5, spec.p5.size());
        if (n >= 2) {
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    for (const Word& alpha : words)
                        for (const Word& g : words)
                            for (std::size_t p = 0; p < spec.p3.size(); ++p)
                                if (!spec.p3[p].fiber)
                                    out.push_back(sym_whwt(i, j, alpha, g, static_cast<int>(p)));
                    for (const Word& a : words)
                        for (const Word& b : words)
                            if (a < b) out.push_back(sym_sq(i, j, a, b));
                }
            }
            if (n == 3)
                for (const Word& a : words)
                    for (const Word& b : words) out.push_back(sym_mix(a, b));
        }
    }

    std::sort(out.begin(), out.end());
    sp.symbols = std::move(out);
    for (std::uint32_t i = 0; i < sp.symbols.size(); ++i) sp.index.emplace(sp.symbols[i], i);
    sp.id = space_id_from_string(space_kind_str(kind) + "|" + std::to_string(sp.window) + "|" +
                                 spec.fingerprint());
    return sp;
}

std::string symbol_str(const BasisSymbol& s, const ManifoldSpec& spec) {
    std::ostringstream os;
    auto prim_name = [&](const std::vector<std::string>& names) -> std::string {
        if (s.prim < 0 || s.prim >= static_cast<int>(names.size())) return "?";
        return names[s.prim];
    };
    switch (s.kind) {
        case SymKind::T3: {
            std::string nm = (s.prim >= 0 && s.prim < static_cast<int>(spec.p3.size()))
                                 ? spec.p3[s.prim].name
                                 : "?";
            os << "T3(" << int(s.a) << ";" << word_str(s.w1) << ";" << nm << ")";
            break;
        }
        case SymKind::T4:
            os << "T4(" << int(s.a) << ";" << word_str(s.w1) << ";" << prim_name(spec.p4) << ")";
            break;
        case SymKind::T5:
            os << "T5(" << int(s.a) << ";" << word_str(s.w1) << ";" << prim_name(spec.p5) << ")";
            break;
        case SymKind::W:
            os << "W(" << int(s.a) << "," << int(s.b) << ";" << word_str(s.w1) << ")";
            break;
        case SymKind::WhWT: {
            std::string nm = (s.prim >= 0 && s.prim < static_cast<int>(spec.p3.size()))
                                 ? spec.p3[s.prim].name
                                 : "?";
            os << "WhWT(" << int(s.a) << "," << int(s.b) << ";" << word_str(s.w1) << ";"
               << word_str(s.w2) << ";" << nm << ")";
            break;
        }
        case SymKind::Sq:
            os << "Sq(" << int(s.a) << "," << int(s.b) << ";" << word_str(s.w1) << ";"
               << word_str(s.w2) << ")";
            break;
        case SymKind::Mix:
            os << "Mix(" << word_str(s.w1) << ";" << word_str(s.w2) << ")";
            break;
    }
    return os.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& inner) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : inner) {
        if (c == ';') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + s + "'");
    }
}

std::pair<int, int> parse_ij(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'i,j' in '" + s + "'");
    return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

} // namespace

BasisSymbol symbol_parse(const ManifoldSpec& spec, const std::string& raw) {
    const std::string text = trim(raw);
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')')
        throw ParseError("bad symbol '" + text + "'");
    const std::string kind = text.substr(0, open);
    const std::string inner = text.substr(open + 1, text.size() - open - 2);
    const std::vector<std::string> f = split_fields(inner);
    auto want = [&](std::size_t n) {
        if (f.size() != n)
            throw ParseError("symbol '" + text + "' expects " + std::to_string(n) + " fields");
    };
    const GroupSpec& g = spec.group;

    if (kind == "T3" || kind == "T4" || kind == "T5") {
        want(3);
        const int slot = parse_int(f[0]);
        if (slot < 1 || slot > 3) throw ParseError("slot out of range in '" + text + "'");
        const Word dec = word_parse(g, f[1]);
        const std::string nm = trim(f[2]);
        if (kind == "T3") return sym_t(3, slot, dec, spec.p3_index(nm));
        if (kind == "T4") return sym_t(4, slot, dec, spec.p4_index(nm));
        return sym_t(5, slot, dec, spec.p5_index(nm));
    }
    if (kind == "W") {
        want(2);
        auto [i, j] = parse_ij(f[0]);
        if (!(1 <= i && i < j && j <= 3)) throw ParseError("bad W indices in '" + text + "'");
        return sym_w(i, j, word_parse(g, f[1]));
    }
    if (kind == "WhWT") {
        want(4);
        auto [i, j] = parse_ij(f[0]);
        if (!(1 <= i && i < j && j <= 3)) throw ParseError("bad WhWT indices in '" + text + "'");
        const int p = spec.p3_index(trim(f[3]));
        if (spec.p3[p].fiber)
            throw ParseError("WhWT primitive '" + trim(f[3]) + "' must be a non-fiber p3 primitive");
        return sym_whwt(i, j, word_parse(g, f[1]), word_parse(g, f[2]), p);
    }
    if (kind == "Sq") {
        want(3);
        auto [i, j] = parse_ij(f[0]);
        if (!(1 <= i && i < j && j <= 3)) throw ParseError("bad Sq indices in '" + text + "'");
        Word a = word_parse(g, f[1]);
        Word b = word_parse(g, f[2]);
        if (!(a < b)) throw ParseError("Sq decorations must satisfy a < b in '" + text + "'");
        return sym_sq(i, j, a, b);
    }
    if (kind == "Mix") {
        want(2);
        return sym_mix(word_parse(g, f[0]), word_parse(g, f[1]));
    }
    throw ParseError("unknown symbol kind '" + kind + "'");
}

} // namespace confspace
