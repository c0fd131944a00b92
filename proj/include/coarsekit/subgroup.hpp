#pragma once

#include <optional>

#include "coarsekit/ball.hpp"
#include "coarsekit/core_graph.hpp"

namespace coarsekit {

enum class PredicateKind { CoreGraphKind, AbelianizationKernel };

/// Membership test for a subgroup of a free group: either a folded core
/// graph, or the abelianization kernel (the standard non-quasiconvex control,
/// which is not finitely generated).
struct SubgroupPredicate {
    PredicateKind kind = PredicateKind::CoreGraphKind;
    int genCount = 0;
    std::optional<CoreGraph> graph;

    static SubgroupPredicate from_core(CoreGraph g);
    static SubgroupPredicate kernel(int genCount);

    bool contains(const Word& w) const;
    bool infinite() const;
};

/// Canonical id of a left coset gH: the shortlex-least element of the coset.
struct CosetId {
    Word rep;

    bool operator==(const CosetId& o) const { return rep == o.rep; }
};

Word coset_canonical_rep(const SubgroupPredicate& s, const Word& g);

struct CosetDecomposition {
    std::vector<CosetId> cosets;      // in shortlex order of representatives
    std::vector<int> vertexCoset;     // ball vertex -> index into cosets
};

/// One canonical representative per left coset meeting the ball. Ball
/// vertices are scanned in shortlex order, so the representative is the least
/// ball element of its coset and the output is canonically sorted.
CosetDecomposition enumerate_cosets(const SubgroupPredicate& s, const CayleyBall& ball);

struct HeightResult {
    int value = 0;
    bool stabilized = false;
    std::vector<CosetId> certificate;
};

/// Largest number of essentially distinct conjugates (indexed by left cosets
/// of conjugators up to the given length) whose total intersection is
/// infinite. Radius-bounded from below; `stabilized` reports two consecutive
/// radius increments without growth.
HeightResult height(const CoreGraph& h, int conjugatorRadius);

/// Same search with the pairwise-intersection condition (a max clique).
HeightResult width(const CoreGraph& h, int conjugatorRadius);

struct MalnormalResult {
    bool malnormal = false;
    bool stabilized = false;
    std::optional<Word> witness;
};

MalnormalResult is_malnormal(const CoreGraph& h, int conjugatorRadius);

/// Core graph of g H g^-1 intersected with H.
CoreGraph intersect_conjugate(const CoreGraph& h, const Word& g);

} // namespace coarsekit
