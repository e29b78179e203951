#include "confspace/qlinalg.hpp"

#include <atomic>
#include <sstream>

#include "confspace/errors.hpp"

namespace confspace {

SpaceId fresh_space_id() {
    static std::atomic<std::uint64_t> next{1};
    return SpaceId{next.fetch_add(1)};
}

SpaceId space_id_from_string(const std::string& key) {
    // FNV-1a, 64-bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return SpaceId{h};
}

void QVector::axpy(const Rat& c, const QVector& other) {
    if (!(space == other.space)) throw SpaceMismatch("axpy across different spaces");
    if (c == 0) return;
    for (const auto& [i, v] : other.entries) {
        auto it = entries.find(i);
        if (it == entries.end()) {
            entries.emplace(i, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) entries.erase(it);
        }
    }
}

void QVector::scale(const Rat& c) {
    if (c == 0) {
        entries.clear();
        return;
    }
    for (auto& [i, v] : entries) v *= c;
}

void QMatrix::set_column(std::uint32_t j, QVector v) {
    if (!(v.space == codomain)) throw SpaceMismatch("column not in codomain");
    if (v.is_zero()) columns.erase(j);
    else columns[j] = std::move(v);
}

QVector QMatrix::apply(const QVector& v) const {
    if (!(v.space == domain)) throw SpaceMismatch("apply: vector not in domain");
    QVector out{codomain, {}};
    for (const auto& [j, c] : v.entries) {
        auto it = columns.find(j);
        if (it != columns.end()) out.axpy(c, it->second);
    }
    return out;
}

QMatrix QMatrix::compose(const QMatrix& inner) const {
    if (!(inner.codomain == domain)) throw SpaceMismatch("compose: codomain/domain disagree");
    QMatrix out{inner.domain, codomain, {}};
    for (const auto& [j, col] : inner.columns) out.set_column(j, apply(col));
    return out;
}

QMatrix QMatrix::transpose(std::uint32_t domain_dim) const {
    QMatrix out{codomain, domain, {}};
    for (const auto& [j, col] : columns) {
        if (j >= domain_dim) throw SpaceMismatch("transpose: column beyond stated dimension");
        for (const auto& [i, v] : col.entries) {
            QVector& t = out.columns[i];
            t.space = domain;
            t.set(j, v);
        }
    }
    for (auto it = out.columns.begin(); it != out.columns.end();)
        it = it->second.is_zero() ? out.columns.erase(it) : std::next(it);
    return out;
}

RowReduceResult row_reduce(const QMatrix& m) {
    RowReduceResult res;
    res.reduced = m;
    auto& cols = res.reduced.columns;

    // Collect candidate basis indices in ascending order.
    std::map<std::uint32_t, bool> seen;
    for (const auto& [j, col] : cols)
        for (const auto& [i, v] : col.entries) seen[i] = true;

    std::map<std::uint32_t, bool> used_col;
    for (const auto& [b, _] : seen) {
        // lowest basis index first, then lowest column
        std::uint32_t pivot_col = 0;
        bool found = false;
        for (const auto& [j, col] : cols) {
            if (used_col.count(j)) continue;
            if (col.at(b) != 0) {
                pivot_col = j;
                found = true;
                break;
            }
        }
        if (!found) continue;
        used_col[pivot_col] = true;
        QVector& p = cols[pivot_col];
        p.scale(Rat(1) / p.at(b));
        for (auto& [j, col] : cols) {
            if (j == pivot_col) continue;
            Rat c = col.at(b);
            if (c != 0) col.axpy(-c, p);
        }
        res.pivots.emplace_back(b, pivot_col);
    }
    for (auto it = cols.begin(); it != cols.end();)
        it = it->second.is_zero() ? cols.erase(it) : std::next(it);
    res.rank = static_cast<int>(res.pivots.size());
    return res;
}

bool Echelon::insert(QVector v) {
    v = reduce(std::move(v));
    auto lead = v.leading();
    if (!lead) return false;
    v.scale(Rat(1) / v.entries.begin()->second);
    // back-substitute into existing rows so the basis stays fully reduced
    for (auto& [p, row] : rows_) {
        Rat c = row.at(*lead);
        if (c != 0) row.axpy(-c, v);
    }
    rows_.emplace(*lead, std::move(v));
    return true;
}

QVector Echelon::reduce(QVector v) const {
    if (!(v.space == space_)) throw SpaceMismatch("reduce: vector space disagrees with echelon");
    // The basis is kept fully reduced, so a row subtraction only introduces
    // entries at non-pivot indices past the pivot; one ascending sweep suffices.
    auto it = v.entries.begin();
    while (it != v.entries.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const std::uint32_t pivot = it->first;
        const Rat c = it->second;
        v.axpy(-c, row->second);
        it = v.entries.upper_bound(pivot);
    }
    return v;
}

MembershipResult membership(const QVector& v, const std::vector<QVector>& span) {
    for (const auto& s : span)
        if (!(s.space == v.space)) throw SpaceMismatch("membership: span vector in a different space");

    // Echelonize the span, tracking each row as a combination of the inputs.
    struct Tracked {
        QVector row;
        std::vector<Rat> combo;
    };
    std::map<std::uint32_t, Tracked> rows;
    const std::size_t n = span.size();
    for (std::size_t k = 0; k < n; ++k) {
        QVector w = span[k];
        std::vector<Rat> combo(n, Rat(0));
        combo[k] = 1;
        while (true) {
            auto lead = w.leading();
            if (!lead) break;
            auto it = rows.find(*lead);
            if (it == rows.end()) {
                Rat inv = Rat(1) / w.entries.begin()->second;
                w.scale(inv);
                for (auto& c : combo) c *= inv;
                rows.emplace(*lead, Tracked{std::move(w), std::move(combo)});
                break;
            }
            Rat c = w.entries.begin()->second;
            w.axpy(-c, it->second.row);
            for (std::size_t i = 0; i < n; ++i) combo[i] -= c * it->second.combo[i];
        }
    }

    QVector r = v;
    std::vector<Rat> coeffs(n, Rat(0));
    while (true) {
        auto lead = r.leading();
        if (!lead) break;
        auto it = rows.find(*lead);
        if (it == rows.end()) return MembershipResult{false, std::nullopt};
        Rat c = r.entries.begin()->second;
        r.axpy(-c, it->second.row);
        for (std::size_t i = 0; i < n; ++i) coeffs[i] += c * it->second.combo[i];
    }
    return MembershipResult{true, coeffs};
}

QuotientRankResult quotient_rank(const std::vector<QVector>& family,
                                 const std::vector<QVector>& relations) {
    SpaceId space{};
    if (!family.empty()) space = family.front().space;
    else if (!relations.empty()) space = relations.front().space;
    for (const auto& v : family)
        if (!(v.space == space)) throw SpaceMismatch("quotient_rank: mixed family spaces");
    for (const auto& v : relations)
        if (!(v.space == space)) throw SpaceMismatch("quotient_rank: mixed relation spaces");

    Echelon rel(space);
    for (const auto& r : relations) rel.insert(r);

    Echelon fam(space);
    for (const auto& f : family) fam.insert(rel.reduce(f));

    QuotientRankResult out;
    out.rank = fam.rank();
    for (const auto& [p, _] : fam.rows()) out.pivot_indices.push_back(p);
    out.certificate.rank = out.rank;
    return out;
}

std::vector<QVector> kernel_basis(const QMatrix& m, std::uint32_t domain_dim) {
    // Column elimination with domain bookkeeping: eliminated columns record
    // the combination of domain basis vectors that maps to zero.
    struct Aug {
        QVector img;
        QVector pre;
    };
    std::map<std::uint32_t, Aug> rows;  // pivot (codomain index) -> augmented row
    std::vector<QVector> ker;
    for (std::uint32_t j = 0; j < domain_dim; ++j) {
        Aug a{m.column(j), QVector{m.domain, {}}};
        a.pre.set(j, Rat(1));
        while (true) {
            auto lead = a.img.leading();
            if (!lead) {
                ker.push_back(std::move(a.pre));
                break;
            }
            auto it = rows.find(*lead);
            if (it == rows.end()) {
                Rat inv = Rat(1) / a.img.entries.begin()->second;
                a.img.scale(inv);
                a.pre.scale(inv);
                rows.emplace(*lead, std::move(a));
                break;
            }
            Rat c = a.img.entries.begin()->second;
            a.img.axpy(-c, it->second.img);
            a.pre.axpy(-c, it->second.pre);
        }
    }
    // echelonize the kernel vectors for a deterministic basis
    Echelon e(m.domain);
    for (auto& v : ker) e.insert(std::move(v));
    std::vector<QVector> out;
    for (const auto& [p, row] : e.rows()) out.push_back(row);
    return out;
}

static void json_escape_into(std::ostringstream& os, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default: os << c;
        }
    }
}

std::string Certificate::to_json() const {
    // Keys emitted in sorted order; no whitespace. Kept hand-rolled so the
    // byte layout is pinned by this function alone.
    std::ostringstream os;
    os << "{";
    os << "\"chart_dim\":" << chart_dim << ",";
    os << "\"config_hash\":\"";
    json_escape_into(os, config_hash);
    os << "\",";
    os << "\"mode\":\"";
    json_escape_into(os, mode);
    os << "\",";
    os << "\"note\":\"";
    json_escape_into(os, note);
    os << "\",";
    os << "\"pivots\":[";
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (i) os << ",";
        os << "\"";
        json_escape_into(os, pivots[i]);
        os << "\"";
    }
    os << "],";
    os << "\"rank\":" << rank << ",";
    os << "\"window\":" << window;
    os << "}";
    return os.str();
}

} // namespace confspace
