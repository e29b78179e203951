#ifndef CONFSPACE_TOWER_HPP
#define CONFSPACE_TOWER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "confspace/whitehead.hpp"

namespace confspace {

/// An i-dimensional face of the 3-simplex: the image of an injective
/// monotone map {0..i} -> {0..3}, stored as its sorted image set.
struct FaceIndex {
    std::vector<int> image;
    friend bool operator==(const FaceIndex&, const FaceIndex&) = default;
    std::string str() const;
};

/// All faces with |image| = level + 1, lexicographic. Counts 6, 4, 1 for
/// levels 1, 2, 3.
std::vector<FaceIndex> faces_of_level(int level);

/// A first-page term: a direct sum of identical module charts indexed by
/// faces. Grading (i,j) carries pi_{i+j} of the level-j configuration space.
struct EPage {
    int grading_i = 0;
    int grading_j = 0;
    int page = 1;
    std::vector<FaceIndex> faces;
    ModuleSpace component;
    SpaceId sum_id;

    std::uint32_t dim() const {
        return static_cast<std::uint32_t>(faces.size()) * component.dim();
    }
    std::uint32_t global_index(std::size_t face_pos, std::uint32_t local) const {
        return static_cast<std::uint32_t>(face_pos) * component.dim() + local;
    }
};

/// The implemented pieces of the mapping-space tower spectral sequence:
/// E^1 gradings (3,1), (2,2), (4,1), (3,2), (2,3), their d^1 blocks, the
/// E^2_{3,1} kernel, and the quotient-rank pipeline through N.
class Tower {
  public:
    explicit Tower(ManifoldSpec spec);

    const ManifoldSpec& spec() const { return spec_; }

    /// Pages (3,1), (2,2), (4,1), (3,2). The (2,3) target of d1(3,2) is the
    /// single-face working chart held by nspan().
    EPage page(int i, int j) const;

    /// d1 block matrices. Supported gradings: (3,1) on pi4, (4,1) on pi5
    /// (exact), and (3,2) on pi5 (Whitehead naturality; mod_n5 by default).
    QMatrix d1(int i, int j, WhMode mode = WhMode::mod_n5) const;

    struct KernelInfo {
        std::vector<QVector> basis;  // echelonized basis of ker d1(3,1)
        bool is_diagonal = false;
    };
    KernelInfo e2_31_kernel() const;

    const NSpan& nspan() const;
    /// Surviving in-window coordinates of pi5C3/(N).
    const std::vector<BasisSymbol>& e3_chart() const;

    struct RankResult {
        int rank = 0;
        Certificate certificate;
    };
    /// Rank of the family's image in the e3 quotient chart.
    RankResult rank_of_family(const std::vector<SymVec>& classes,
                              const std::string& config_hash) const;

  private:
    ManifoldSpec spec_;
    mutable std::optional<NSpan> nspan_;
};

} // namespace confspace

#endif
