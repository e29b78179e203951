#include "confspace/theta.hpp"

#include <sstream>

#include "confspace/errors.hpp"

namespace confspace {

bool ThetaIndex::legal() const {
    if (is_square() && !(a < b)) return false;
    if (!is_restricted()) return true;
    if (a == 0 || b == 0) return false;
    if (kind == Kind::restricted_composite && a == b) return false;
    return true;
}

std::string ThetaIndex::str() const {
    std::ostringstream os;
    if (is_square()) os << "square(" << i << "," << j << "," << a << "," << b << ")";
    else os << "composite(" << a << "," << b << ")";
    return os.str();
}

ThetaIndex theta_composite(long a, long b, bool restricted) {
    ThetaIndex t;
    t.kind = restricted ? ThetaIndex::Kind::restricted_composite : ThetaIndex::Kind::composite;
    t.a = a;
    t.b = b;
    return t;
}

ThetaIndex theta_square(int i, int j, long a, long b, bool restricted) {
    if (!(1 <= i && i < j && j <= 3)) throw IllegalIndex("square index needs 1 <= i < j <= 3");
    ThetaIndex t;
    t.kind = restricted ? ThetaIndex::Kind::restricted_square : ThetaIndex::Kind::square;
    t.i = i;
    t.j = j;
    t.a = a;
    t.b = b;
    return t;
}

ThetaIndex theta_index_parse(const std::string& text, bool restricted) {
    auto open = text.find('(');
    if (open == std::string::npos || text.empty() || text.back() != ')')
        throw ParseError("bad theta index '" + text + "'");
    const std::string kind = text.substr(0, open);
    std::vector<long> nums;
    std::string cur;
    for (char c : text.substr(open + 1, text.size() - open - 2)) {
        if (c == ',') {
            nums.push_back(std::stol(cur));
            cur.clear();
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            cur += c;
        } else if (c != ' ') {
            throw ParseError("bad theta index '" + text + "'");
        }
    }
    if (!cur.empty()) nums.push_back(std::stol(cur));
    if (kind == "composite" && nums.size() == 2) return theta_composite(nums[0], nums[1], restricted);
    if (kind == "square" && nums.size() == 4)
        return theta_square(static_cast<int>(nums[0]), static_cast<int>(nums[1]), nums[2], nums[3],
                            restricted);
    throw ParseError("bad theta index '" + text + "'");
}

Rat theta(const ThetaIndex& index, const SymVec& v) {
    if (index.is_square() && !(index.a < index.b))
        throw IllegalIndex("square index needs a < b: " + index.str());
    if (index.is_restricted() && !index.legal())
        throw IllegalIndex("restricted index violates the covering-space constraints: " +
                           index.str());
    Rat out(0);
    for (const auto& [s, c] : v) {
        if (s.degree() != 5) throw SpaceMismatch("theta expects a degree-5 level-3 vector");
        switch (s.kind) {
            case SymKind::T5:
            case SymKind::WhWT: break;  // Theta vanishes off Whitehead-pair symbols
            case SymKind::Mix: {
                if (index.is_square()) break;
                if (deck_zeta(s.w1) == index.a && deck_zeta(s.w2) == index.b) out += c;
                break;
            }
            case SymKind::Sq: {
                if (!index.is_square()) break;
                if (s.a != index.i || s.b != index.j) break;
                const long za = deck_zeta(s.w1);
                const long zb = deck_zeta(s.w2);
                if (za == index.a && zb == index.b) out += c;
                else if (za == index.b && zb == index.a) out -= c;
                break;
            }
            default:
                throw SpaceMismatch("theta expects a degree-5 level-3 vector");
        }
    }
    return out;
}

std::map<ThetaIndex, Rat> theta_vector(const SymVec& v) {
    std::map<ThetaIndex, Rat> out;
    auto add = [&out](const ThetaIndex& t, const Rat& c) {
        auto it = out.find(t);
        if (it == out.end()) {
            if (c != 0) out.emplace(t, c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    for (const auto& [s, c] : v) {
        if (s.degree() != 5) throw SpaceMismatch("theta expects a degree-5 level-3 vector");
        switch (s.kind) {
            case SymKind::Mix:
                add(theta_composite(deck_zeta(s.w1), deck_zeta(s.w2)), c);
                break;
            case SymKind::Sq: {
                const long za = deck_zeta(s.w1);
                const long zb = deck_zeta(s.w2);
                if (za < zb) add(theta_square(s.a, s.b, za, zb), c);
                else if (zb < za) add(theta_square(s.a, s.b, zb, za), -c);
                break;
            }
            case SymKind::T5:
            case SymKind::WhWT: break;
            default:
                throw SpaceMismatch("theta expects a degree-5 level-3 vector");
        }
    }
    return out;
}

ThetaRankResult theta_rank(const std::vector<SymVec>& classes,
                           const std::vector<SymVec>& relations, bool restricted, int window,
                           const std::string& config_hash) {
    auto admitted = [restricted](const ThetaIndex& t) {
        if (!restricted) return true;
        ThetaIndex r = t;
        r.kind = t.is_square() ? ThetaIndex::Kind::restricted_square
                               : ThetaIndex::Kind::restricted_composite;
        return r.legal();
    };

    std::vector<std::map<ThetaIndex, Rat>> cls, rel;
    std::map<ThetaIndex, std::uint32_t> coords;
    auto collect = [&](const std::vector<SymVec>& in, std::vector<std::map<ThetaIndex, Rat>>& out) {
        for (const SymVec& v : in) {
            std::map<ThetaIndex, Rat> tv;
            for (auto& [t, c] : theta_vector(v))
                if (admitted(t)) tv.emplace(t, c);
            for (const auto& [t, c] : tv) coords.emplace(t, 0);
            out.push_back(std::move(tv));
        }
    };
    collect(classes, cls);
    collect(relations, rel);

    std::uint32_t next = 0;
    std::vector<const ThetaIndex*> names(coords.size());
    for (auto& [t, idx] : coords) {
        idx = next;
        names[next] = &t;
        ++next;
    }

    const SpaceId sid = space_id_from_string("theta|" + std::string(restricted ? "r" : "u") + "|" +
                                             config_hash + "|" + std::to_string(coords.size()));
    auto to_q = [&](const std::map<ThetaIndex, Rat>& tv) {
        QVector q{sid, {}};
        for (const auto& [t, c] : tv) q.set(coords.at(t), c);
        return q;
    };
    std::vector<QVector> qc, qr;
    for (const auto& tv : cls) qc.push_back(to_q(tv));
    for (const auto& tv : rel) qr.push_back(to_q(tv));

    QuotientRankResult res = quotient_rank(qc, qr);
    ThetaRankResult out;
    out.rank = res.rank;
    out.certificate.config_hash = config_hash;
    out.certificate.window = window;
    out.certificate.chart_dim = static_cast<int>(coords.size());
    out.certificate.rank = res.rank;
    out.certificate.mode = restricted ? "theta-restricted" : "theta";
    out.certificate.note = "rank of Theta images modulo Theta of the d1(3,2) image";
    for (std::uint32_t p : res.pivot_indices) out.certificate.pivots.push_back(names[p]->str());
    return out;
}

} // namespace confspace
