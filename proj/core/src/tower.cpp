#include "confspace/tower.hpp"

#include <algorithm>
#include <sstream>

#include "confspace/config.hpp"
#include "confspace/errors.hpp"

namespace confspace {

std::string FaceIndex::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < image.size(); ++k) {
        if (k) os << ",";
        os << image[k];
    }
    os << "}";
    return os.str();
}

std::vector<FaceIndex> faces_of_level(int level) {
    std::vector<FaceIndex> out;
    const int size = level + 1;
    std::vector<int> pick(size);
    // lexicographic subsets of {0,1,2,3}
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == size) {
            out.push_back(FaceIndex{pick});
            return;
        }
        for (int v = start; v <= 3; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Tower::Tower(ManifoldSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

EPage Tower::page(int i, int j) const {
    EPage p;
    p.grading_i = i;
    p.grading_j = j;
    SpaceKind kind;
    if (i == 3 && j == 1) kind = SpaceKind::pi4C1;
    else if (i == 2 && j == 2) kind = SpaceKind::pi4C2;
    else if (i == 4 && j == 1) kind = SpaceKind::pi5C1;
    else if (i == 3 && j == 2) kind = SpaceKind::pi5C2;
    else throw LevelMismatch("page grading (" + std::to_string(i) + "," + std::to_string(j) +
                             ") is not one of the implemented pieces");
    p.faces = faces_of_level(j);
    p.component = build_space(spec_, kind);
    p.sum_id = space_id_from_string("E1(" + std::to_string(i) + "," + std::to_string(j) + ")|" +
                                    space_kind_str(kind) + "|" + spec_.fingerprint());
    return p;
}

namespace {

// sigma = tau o delta^m: position of the vertex of tau missing from sigma
int missing_position(const FaceIndex& tau, const FaceIndex& sigma) {
    for (std::size_t m = 0; m < tau.image.size(); ++m) {
        bool found = false;
        for (int v : sigma.image)
            if (v == tau.image[m]) found = true;
        if (!found) return static_cast<int>(m);
    }
    return -1;
}

bool face_subset(const FaceIndex& sigma, const FaceIndex& tau) {
    return std::includes(tau.image.begin(), tau.image.end(), sigma.image.begin(),
                         sigma.image.end());
}

} // namespace

namespace {

// block d1 between level-1 and level-2 face sums: the (sigma, tau) block is
// (-1)^m (delta_1^m)_* when sigma = tau o delta^m, zero otherwise
QMatrix level1_d1(const EPage& src, const EPage& dst, const ManifoldSpec& spec) {
    QMatrix m{src.sum_id, dst.sum_id, {}};
    for (std::size_t sf = 0; sf < src.faces.size(); ++sf) {
        for (std::uint32_t k = 0; k < src.component.dim(); ++k) {
            QVector col{dst.sum_id, {}};
            for (std::size_t tf = 0; tf < dst.faces.size(); ++tf) {
                if (!face_subset(src.faces[sf], dst.faces[tf])) continue;
                const int mdx = missing_position(dst.faces[tf], src.faces[sf]);
                const Rat sign = (mdx % 2 == 0) ? Rat(1) : Rat(-1);
                for (const auto& [s, c] :
                     coface_tw(1, mdx, sym_single(src.component.symbols[k]), spec)) {
                    const auto g = dst.global_index(tf, dst.component.index_of(s));
                    col.set(g, col.at(g) + sign * c);
                }
            }
            m.set_column(src.global_index(sf, k), std::move(col));
        }
    }
    return m;
}

} // namespace

QMatrix Tower::d1(int i, int j, WhMode mode) const {
    if (i == 3 && j == 1) return level1_d1(page(3, 1), page(2, 2), spec_);
    if (i == 4 && j == 1) return level1_d1(page(4, 1), page(3, 2), spec_);
    if (i == 3 && j == 2) {
        const EPage src = page(3, 2);
        const NSpan& n = nspan();
        QMatrix m{src.sum_id, n.space.id, {}};
        for (std::size_t sf = 0; sf < src.faces.size(); ++sf) {
            const int mdx = missing_position(FaceIndex{{0, 1, 2, 3}}, src.faces[sf]);
            const Rat sign = (mdx % 2 == 0) ? Rat(1) : Rat(-1);
            for (std::uint32_t k = 0; k < src.component.dim(); ++k) {
                SymVec img = coface5(mdx, sym_single(src.component.symbols[k]), spec_, mode);
                QVector col = resolve(img, n.space);
                col.scale(sign);
                m.set_column(src.global_index(sf, k), std::move(col));
            }
        }
        return m;
    }
    throw LevelMismatch("d1 implemented for gradings (3,1), (4,1), (3,2)");
}

Tower::KernelInfo Tower::e2_31_kernel() const {
    const EPage src = page(3, 1);
    const QMatrix m = d1(3, 1);
    KernelInfo out;
    out.basis = kernel_basis(m, src.dim());

    // diagonal embedding of pi4C1 into the 6-fold sum
    std::vector<QVector> diag;
    for (std::uint32_t k = 0; k < src.component.dim(); ++k) {
        QVector v{src.sum_id, {}};
        for (std::size_t f = 0; f < src.faces.size(); ++f) v.set(src.global_index(f, k), Rat(1));
        diag.push_back(std::move(v));
    }
    Echelon dspan(src.sum_id);
    for (const auto& v : diag) dspan.insert(v);
    Echelon kspan(src.sum_id);
    for (const auto& v : out.basis) kspan.insert(v);
    bool eq = out.basis.size() == diag.size();
    for (const auto& v : out.basis)
        if (eq && !dspan.contains(v)) eq = false;
    for (const auto& v : diag)
        if (eq && !kspan.contains(v)) eq = false;
    out.is_diagonal = eq;
    return out;
}

const NSpan& Tower::nspan() const {
    if (!nspan_) nspan_ = build_N(spec_);
    return *nspan_;
}

const std::vector<BasisSymbol>& Tower::e3_chart() const { return nspan().chart; }

Tower::RankResult Tower::rank_of_family(const std::vector<SymVec>& classes,
                                        const std::string& config_hash) const {
    const NSpan& n = nspan();
    std::vector<QVector> reduced(classes.size(), QVector{n.space.id, {}});
    parallel_for(classes.size(), [&](std::size_t k) { reduced[k] = reduce_mod_N(classes[k], n); });

    QuotientRankResult qr = quotient_rank(reduced, {});
    RankResult out;
    out.rank = qr.rank;
    out.certificate.config_hash = config_hash;
    out.certificate.window = n.user_window;
    out.certificate.chart_dim = static_cast<int>(n.chart.size());
    out.certificate.rank = qr.rank;
    out.certificate.mode = "quotient";
    out.certificate.note =
        "exact lower bound for E3 page data; d2 is never evaluated (its image lies in N)";
    for (std::uint32_t p : qr.pivot_indices)
        out.certificate.pivots.push_back(symbol_str(n.space.symbols[p], spec_));
    return out;
}

} // namespace confspace
