#pragma once

#include <memory>

#include "coarsekit/subgroup.hpp"

namespace coarsekit {

/// One distinguished subset of a pattern space.
struct FamilySet {
    std::string label;
    Word cosetRep;              // meaningful for coset-derived families
    std::vector<int> vertices;  // sorted
    bool degenerate = false;    // no pair at or above the far-pair threshold
};

/// A finite metric graph together with an indexed family of distinguished
/// subsets.
struct PatternSpace {
    std::shared_ptr<const MetricSpace> space;
    std::vector<FamilySet> family;

    int member_index(const std::string& label) const;

    /// Distance field of family member idx (multi-source BFS), cached.
    const std::vector<int>& dist_to_member(int idx) const;

private:
    mutable std::vector<std::vector<int>> fieldCache_;
};

/// Finite stand-in for the join of a coset's limit set: the union of all
/// geodesics between coset elements in the ball at mutual distance at least
/// farPairThreshold. Cosets without such a pair come back degenerate,
/// carrying just their trace.
struct JoinSet {
    CosetId coset;
    std::vector<int> vertices;   // sorted
    int farPairThreshold = 0;
    bool degenerate = false;
};

JoinSet coset_join(const CayleyBall& ball, const SubgroupPredicate& s, const CosetId& c,
                   int farPairThreshold, const CosetDecomposition* decomp = nullptr);

/// Default far-pair threshold: two thirds of the ball radius.
inline int default_far_pair_threshold(int radius) { return 2 * radius / 3; }

/// All vertices of J at minimal distance from x (the full minimizing set).
std::vector<int> nearest_point_projection(const MetricSpace& g, int x, const std::vector<int>& J);

/// Diameter of the pointwise nearest-point projection of Ji onto Jj.
int projection_diameter(const MetricSpace& g, const std::vector<int>& Ji, const std::vector<int>& Jj);

/// Ordinary (not Hausdorff) distance between nonempty vertex sets.
int set_distance(const MetricSpace& g, const std::vector<int>& A, const std::vector<int>& B);

struct ProfileOptions {
    int farPairThreshold = 2;
    // Wide-angle condition: some far pair of the coset trace must have Gromov
    // product at the identity at most this cap. Negative means "use N".
    int maxGromovProduct = -1;
};

/// For each radius, the number of essentially distinct cosets whose trace
/// contains a far pair spreading at a wide angle within distance N of the
/// identity. Constant profiles diagnose quasiconvexity, growing ones the
/// failure of it.
std::vector<int> discreteness_profile(const SubgroupPredicate& s, int N,
                                      const std::vector<int>& radii,
                                      const ProfileOptions& opts = {});

/// Pattern of all left-coset joins of s inside the ball, family in canonical
/// coset order. Degenerate cosets contribute their traces.
PatternSpace build_coset_pattern(std::shared_ptr<const CayleyBall> ball,
                                 const SubgroupPredicate& s, int farPairThreshold);

/// Toy flat pattern: spaced axis-parallel lines on a rectangular grid.
PatternSpace grid_line_pattern(int width, int height, int spacing);

} // namespace coarsekit
