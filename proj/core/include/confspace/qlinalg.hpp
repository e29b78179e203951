#ifndef CONFSPACE_QLINALG_HPP
#define CONFSPACE_QLINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confspace/rational.hpp"

namespace confspace {

/// Identifies the coordinate chart a vector lives in. Two vectors may be
/// combined only when their space ids agree.
struct SpaceId {
    std::uint64_t tag = 0;
    friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

SpaceId fresh_space_id();
SpaceId space_id_from_string(const std::string& key);

/// Sparse exact-rational vector. No zero entries are stored.
struct QVector {
    SpaceId space;
    std::map<std::uint32_t, Rat> entries;

    bool is_zero() const { return entries.empty(); }
    Rat at(std::uint32_t i) const {
        auto it = entries.find(i);
        return it == entries.end() ? Rat(0) : it->second;
    }
    void set(std::uint32_t i, const Rat& v) {
        if (v == 0) entries.erase(i);
        else entries[i] = v;
    }
    /// *this += c * other. Spaces must match.
    void axpy(const Rat& c, const QVector& other);
    void scale(const Rat& c);
    /// Smallest index with a nonzero entry.
    std::optional<std::uint32_t> leading() const {
        if (entries.empty()) return std::nullopt;
        return entries.begin()->first;
    }
    friend bool operator==(const QVector& a, const QVector& b) {
        return a.space == b.space && a.entries == b.entries;
    }
};

/// Sparse column-major linear map. Absent columns are zero.
struct QMatrix {
    SpaceId domain;
    SpaceId codomain;
    std::map<std::uint32_t, QVector> columns;

    QVector column(std::uint32_t j) const {
        auto it = columns.find(j);
        if (it != columns.end()) return it->second;
        return QVector{codomain, {}};
    }
    void set_column(std::uint32_t j, QVector v);
    QVector apply(const QVector& v) const;
    QMatrix compose(const QMatrix& inner) const;  // (*this) o inner
    QMatrix transpose(std::uint32_t domain_dim) const;
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.domain == b.domain && a.codomain == b.codomain && a.columns == b.columns;
    }
};

struct RowReduceResult {
    QMatrix reduced;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;  // (basis index, column)
    int rank = 0;
};

/// Reduced echelon form of the column family. Pivot choice is deterministic:
/// lowest basis index first, then lowest column.
RowReduceResult row_reduce(const QMatrix& m);

struct MembershipResult {
    bool member = false;
    std::optional<std::vector<Rat>> coefficients;  // aligned with the span list
};

/// Decides v in span(Q-span of `span`) and returns witnessing coefficients.
MembershipResult membership(const QVector& v, const std::vector<QVector>& span);

/// Deterministic record of a rank or membership computation.
struct Certificate {
    std::string config_hash;
    int window = 0;
    int chart_dim = 0;
    int rank = 0;
    std::vector<std::string> pivots;
    std::string mode;
    std::string note;
    /// Canonical JSON: sorted keys, no whitespace. Byte-stable across runs.
    std::string to_json() const;
};

struct QuotientRankResult {
    int rank = 0;
    std::vector<std::uint32_t> pivot_indices;
    Certificate certificate;
};

/// Rank of the image of `family` in space / span(relations).
QuotientRankResult quotient_rank(const std::vector<QVector>& family,
                                 const std::vector<QVector>& relations);

/// Incremental echelon basis of a span, reduced, with deterministic pivots.
class Echelon {
  public:
    explicit Echelon(SpaceId space) : space_(space) {}
    /// Reduces v against the basis; if a nonzero residual remains it is
    /// normalized and inserted. Returns true when the span grew.
    bool insert(QVector v);
    /// Fully reduces v against the basis (v is not inserted).
    QVector reduce(QVector v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<std::uint32_t, QVector>& rows() const { return rows_; }
    bool contains(const QVector& v) const { return reduce(v).is_zero(); }
    SpaceId space() const { return space_; }

  private:
    SpaceId space_;
    std::map<std::uint32_t, QVector> rows_;  // pivot index -> row with pivot 1
};

/// Basis of ker(m), echelonized, deterministic. `domain_dim` bounds the
/// column indices considered (absent columns of the matrix are zero maps).
std::vector<QVector> kernel_basis(const QMatrix& m, std::uint32_t domain_dim);

} // namespace confspace

#endif
