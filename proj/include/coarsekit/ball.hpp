#pragma once

#include <cstdint>
#include <optional>
#include <tuple>

#include "coarsekit/metric_space.hpp"
#include "coarsekit/presentation.hpp"
#include "coarsekit/rational.hpp"

namespace coarsekit {

struct BallOptions {
    std::size_t vertexCap = 2'000'000;
    // For kind=Generic: extra tree radius used when closing under relators.
    // Negative means "longest relator".
    int genericSlack = -1;
};

/// Finite radius-R ball of a Cayley graph with the exact word metric.
/// Vertices carry shortlex-minimal representative words and are sorted by
/// shortlex, so vertex 0 is the identity. For kind=Generic the construction
/// only applies identifications provable inside the enlarged window, so
/// vertex counts are upper bounds; see README.
class CayleyBall : public MetricSpace {
public:
    const Presentation& presentation() const { return pres_; }
    int radius() const { return radius_; }

    const std::vector<Word>& words() const { return words_; }
    const Word& word(int v) const { return words_[static_cast<std::size_t>(v)]; }
    std::optional<int> vertex_of(const Word& w) const;
    int require_vertex(const Word& w) const;

    /// Edges as (u, v, positive letter) with u * letter = v, each once.
    const std::vector<std::tuple<int, int, Letter>>& edges() const { return edges_; }

    const std::vector<std::vector<int>>& adjacency() const override { return adj_; }
    std::string vertex_name(int v) const override;
    int distance(int u, int v) const override;
    int boundary_distance(int v) const override { return radius_ - word(v).size(); }
    int diameter() const override;

    bool tree_metric() const { return tree_; }

    friend CayleyBall generate_ball(const Presentation&, int, const BallOptions&);

private:
    Presentation pres_;
    int radius_ = 0;
    bool tree_ = false;
    std::vector<Word> words_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::tuple<int, int, Letter>> edges_;

    void finalize_edges();
};

CayleyBall generate_ball(const Presentation& p, int radius, const BallOptions& opts = {});

/// (x|y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2.
Rat gromov_product(const CayleyBall& b, const Word& x, const Word& y, const Word& z);

struct DeltaEstimate {
    Rat delta;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
};

/// Four-point condition: max over quadruples of half the gap between the two
/// largest pair-sums. Exhaustive when the ball is small enough, otherwise a
/// seeded deterministic sample.
DeltaEstimate estimate_delta(const CayleyBall& b, std::uint64_t sampleCount,
                             std::uint64_t seed, int exhaustiveThreshold = 200);

} // namespace coarsekit
