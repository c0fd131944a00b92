#pragma once

#include <string>
#include <vector>

#include "coarsekit/word.hpp"

namespace coarsekit {

/// Folded core graph of a finitely generated subgroup of a free group.
/// Vertex 0 is the basepoint; transitions are deterministic per signed letter
/// and every non-basepoint vertex has degree at least two.
class CoreGraph {
public:
    CoreGraph() = default;

    /// Wedge of loops spelling the generator words, folded and trimmed.
    static CoreGraph fold_words(int generatorCount, const std::vector<Word>& gens);

    int generator_count() const { return genCount_; }
    int vertex_count() const { return static_cast<int>(trans_.size()) / (2 * genCount_); }
    int edge_count() const;
    int rank() const { return edge_count() - vertex_count() + 1; }
    bool trivial() const { return edge_count() == 0; }
    /// Infinite subgroups of a free group are exactly those of rank >= 1.
    bool infinite() const { return rank() >= 1; }

    /// Deterministic transition; -1 when absent. Vertex 0 is the basepoint.
    int step(int v, Letter l) const {
        return trans_[static_cast<std::size_t>(v) * static_cast<std::size_t>(2 * genCount_) +
                      static_cast<std::size_t>(letter_rank(l))];
    }

    /// Membership: w traces a loop at the basepoint.
    bool accepts(const Word& w) const;

    /// Isomorphism-invariant key (canonical BFS numbering); equal strings
    /// mean isomorphic based labeled graphs.
    std::string canonical_signature() const;

private:
    friend class GraphBuilder;
    int genCount_ = 0;
    std::vector<int> trans_;   // vertex-major, letter-rank within
};

/// Core graph of g H g^-1.
CoreGraph conjugate_subgroup(const CoreGraph& h, const Word& g);

/// Core graph of A intersect B (product automaton, trimmed to the core).
CoreGraph intersect(const CoreGraph& a, const CoreGraph& b);

/// Shortlex-least reduced word in the left coset gH. Distinct cosets give
/// distinct words, so this is also the canonical coset key.
Word coset_min_word(const CoreGraph& h, const Word& g);

} // namespace coarsekit
