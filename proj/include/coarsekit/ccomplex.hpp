#pragma once

#include "coarsekit/pattern.hpp"

namespace coarsekit {

/// Simplicial complex on essentially distinct cosets. Simplices are stored
/// explicitly (downward closed, singletons included) as sorted index tuples
/// in canonical order.
struct CComplex {
    std::vector<CosetId> vertices;
    std::vector<std::vector<int>> simplices;
    std::string provenance;   // "exact" or "coarse"

    bool has_simplex(const std::vector<int>& s) const;
    std::vector<std::vector<int>> maximal_simplices() const;
};

struct CComplexStats {
    int maxCellDimension = 0;   // largest simplex cardinality minus one
    int maxCliqueSize = 0;      // largest complete graph in the 1-skeleton
};

/// Simplices are the coset tuples whose total conjugate intersection is
/// infinite, decided by iterated product automata over the given window.
CComplex build_exact(const CoreGraph& h, const std::vector<CosetId>& window);

/// Window = all cosets with a representative of length at most the radius.
CComplex build_exact_radius(const CoreGraph& h, int conjugatorRadius);

/// Coarse description: tuples whose joint k-neighborhood intersection has
/// diameter at least diameterThreshold.
CComplex build_coarse(const PatternSpace& p, int diameterThreshold, int k = 2);

CComplexStats stats(const CComplex& c);

struct IsoResult {
    bool isomorphic = false;
    // First simplex (in either complex) whose image or preimage is missing.
    std::optional<std::vector<int>> violation;
};

/// Does the vertex bijection phi (a permutation vector, phi[i] in c2 for
/// vertex i of c1) map simplices onto simplices bijectively?
IsoResult isomorphic_under(const std::vector<int>& phi, const CComplex& c1, const CComplex& c2);

std::string to_dot(const CComplex& c, const Presentation& pres);

} // namespace coarsekit
