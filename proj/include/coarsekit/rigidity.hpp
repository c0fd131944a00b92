#pragma once

#include "coarsekit/pattern.hpp"
#include "coarsekit/rational.hpp"

namespace coarsekit {

/// Bijection (possibly partial near the window edge) between the family
/// indices of two pattern spaces. map[i] < 0 means undefined.
struct Pairing {
    std::vector<int> map;
    std::vector<int> inverse;

    static Pairing identity(int n);
    /// phi[i] = j pairs family i of the source with family j of the target;
    /// unmapped entries stay -1.
    static Pairing from_map(std::vector<int> phi, int targetSize);
};

/// Pairing induced by left translation on coset families: coset c goes to
/// the coset of t*c when that coset exists in the target family.
Pairing translation_pairing(const PatternSpace& p1, const PatternSpace& p2,
                            const SubgroupPredicate& s, const Word& t);

struct MeetingBall {
    int center = -1;
    int radius = -1;
};

enum class TieBreak { Lowest, Highest };

/// Exact minimizer of max_i d(center, J_i) over all vertices; ties go to the
/// lowest (or highest) vertex in canonical order.
MeetingBall minimal_meeting_ball(const PatternSpace& p, const std::vector<int>& indices,
                                 TieBreak tie = TieBreak::Lowest);

struct QOptions {
    int K = 1;
    int w2 = 1;               // width of the target pattern's subgroup
    int interiorMargin = -1;  // negative: use K
    TieBreak tie = TieBreak::Lowest;
};

struct QMap {
    std::vector<int> image;            // per vertex of p1; -1 undefined
    std::vector<int> interior;         // interior vertex list (margin applied)
    std::vector<int> undefinedInterior;
    int margin = 0;
};

/// The coarse-barycenter map: q(g) is the center of the minimal ball meeting
/// the phi-images of every family member passing through N_K(g). Vertices
/// where fewer than w2+1 members pass (or where the pairing is undefined)
/// stay unmapped; interior failures are reported in undefinedInterior.
QMap construct_q(const PatternSpace& p1, const PatternSpace& p2, const Pairing& phi,
                 const QOptions& opts);

/// Throws when q failed the member-count precondition at an interior vertex.
void require_total_interior(const QMap& q, const PatternSpace& p1);

struct EnvelopeTable {
    std::vector<int> bound;   // bound[n] = max image distance over source distance <= n
    int maxStretch = 0;       // max over n of bound[n] - n
};

struct PropernessReport {
    EnvelopeTable forward;
    EnvelopeTable backward;
};

/// Tightest monotone envelopes of set-distance distortion in both directions
/// over all defined index pairs.
PropernessReport verify_uniform_properness(const PatternSpace& p1, const PatternSpace& p2,
                                           const Pairing& phi);

struct QiReport {
    Rat lambda{1};
    Rat epsilon{0};
    std::vector<int> pairingBound;   // h(n) table
    int surjectivityGap = 0;
    std::uint64_t sampleCount = 0;
};

/// Minimal (lambda, epsilon) envelope over interior vertex pairs, with
/// lambda drawn from a small integer grid and epsilon minimized first; plus
/// the pairing-bound table h and the coarse-surjectivity gap.
QiReport verify_qi(const QMap& q, const PatternSpace& p1, const PatternSpace& p2,
                   const Pairing& phi);

struct Condition4Violation {
    std::vector<int> members;
    int k = 0;
    int diameter = 0;
    bool duplicate = false;
};

struct AxiomReport {
    std::vector<int> kGrid;
    std::vector<int> nGrid;
    std::vector<int> M_of_k;          // condition (1)
    std::vector<int> minCount_of_k;   // condition (2): achievable K per k
    // condition (3): per (k, n), max radius of a minimal meeting ball over
    // qualifying tuples; -1 when no tuple qualifies.
    std::vector<std::vector<int>> K_of_kn;
    int condition4N = 2;
    std::vector<int> K4_of_k;         // condition (4) diameter bound per k
    std::vector<Condition4Violation> violations;
};

struct AxiomOptions {
    int condition4N = 2;
    int interiorMargin = -1;   // negative: max of kGrid
    int violationCap = -1;     // negative: 3/4 of the window diameter
};

/// Measures conditions (1)-(4) on the pattern space over the given grids.
/// Duplicate family members are condition-(4) violations at every k.
AxiomReport check_axioms(const PatternSpace& p, const std::vector<int>& kGrid,
                         const std::vector<int>& nGrid, const AxiomOptions& opts = {});

} // namespace coarsekit
