#pragma once

#include <memory>

#include "coarsekit/ball.hpp"

namespace coarsekit {

/// Coned-off ball: one cone vertex per distinguished subset, joined to each
/// of its members by a half-length edge. All weights are doubled so the
/// arithmetic stays integral (base edges weigh 2, cone edges 1).
class ElectricBall {
public:
    ElectricBall(std::shared_ptr<const CayleyBall> base,
                 std::vector<std::vector<int>> coneSubsets);

    const CayleyBall& base() const { return *base_; }
    int cone_count() const { return static_cast<int>(coneSubsets_.size()); }
    const std::vector<std::vector<int>>& cone_subsets() const { return coneSubsets_; }

    /// Electric distance between base vertices on the doubled-integer scale.
    int doubled_distance(int u, int v) const;

    Rat distance(int u, int v) const { return Rat(doubled_distance(u, v), 2); }

private:
    std::shared_ptr<const CayleyBall> base_;
    std::vector<std::vector<int>> coneSubsets_;
    // Adjacency over base vertices then cone vertices; (neighbor, weight).
    std::vector<std::vector<std::pair<int, int>>> adj_;
    mutable std::unordered_map<int, std::vector<int>> rowCache_;

    const std::vector<int>& dijkstra_row(int source) const;
};

ElectricBall cone_off(std::shared_ptr<const CayleyBall> base,
                      const std::vector<std::vector<int>>& subsets);

} // namespace coarsekit
