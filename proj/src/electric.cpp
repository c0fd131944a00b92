#include "coarsekit/electric.hpp"

#include <algorithm>
#include <queue>

namespace coarsekit {

ElectricBall::ElectricBall(std::shared_ptr<const CayleyBall> base,
                           std::vector<std::vector<int>> coneSubsets)
    : base_(std::move(base)), coneSubsets_(std::move(coneSubsets)) {
    const int n = base_->size();
    for (auto& subset : coneSubsets_) {
        if (subset.empty())
            throw DomainError("cone subset is empty");
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        for (int v : subset)
            if (v < 0 || v >= n)
                throw DomainError("cone subset vertex outside the ball");
    }
    adj_.assign(static_cast<std::size_t>(n + cone_count()), {});
    for (const auto& [u, v, l] : base_->edges()) {
        (void)l;
        adj_[static_cast<std::size_t>(u)].emplace_back(v, 2);
        adj_[static_cast<std::size_t>(v)].emplace_back(u, 2);
    }
    for (int c = 0; c < cone_count(); ++c) {
        int coneVertex = n + c;
        for (int v : coneSubsets_[static_cast<std::size_t>(c)]) {
            adj_[static_cast<std::size_t>(coneVertex)].emplace_back(v, 1);
            adj_[static_cast<std::size_t>(v)].emplace_back(coneVertex, 1);
        }
    }
}

const std::vector<int>& ElectricBall::dijkstra_row(int source) const {
    auto it = rowCache_.find(source);
    if (it != rowCache_.end())
        return it->second;
    std::vector<int> dist(adj_.size(), -1);
    using Item = std::pair<int, int>;   // (distance, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[static_cast<std::size_t>(source)] = 0;
    pq.emplace(0, source);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[static_cast<std::size_t>(u)])
            continue;
        for (auto [w, weight] : adj_[static_cast<std::size_t>(u)]) {
            int nd = d + weight;
            if (dist[static_cast<std::size_t>(w)] < 0 || nd < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = nd;
                pq.emplace(nd, w);
            }
        }
    }
    return rowCache_.emplace(source, std::move(dist)).first->second;
}

int ElectricBall::doubled_distance(int u, int v) const {
    if (u < 0 || v < 0 || u >= base_->size() || v >= base_->size())
        throw DomainError("electric distance is defined on base vertices");
    int d = dijkstra_row(u)[static_cast<std::size_t>(v)];
    if (d < 0)
        throw DomainError("disconnected vertices");
    return d;
}

ElectricBall cone_off(std::shared_ptr<const CayleyBall> base,
                      const std::vector<std::vector<int>>& subsets) {
    return ElectricBall(std::move(base), subsets);
}

} // namespace coarsekit
