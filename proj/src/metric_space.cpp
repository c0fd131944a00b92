#include "coarsekit/metric_space.hpp"

#include <deque>

namespace coarsekit {

const std::vector<int>& MetricSpace::bfs_row(int source) const {
    auto it = rowCache_.find(source);
    if (it != rowCache_.end())
        return it->second;
    const auto& adj = adjacency();
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return rowCache_.emplace(source, std::move(dist)).first->second;
}

int MetricSpace::distance(int u, int v) const {
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw DomainError("vertex out of range");
    int d = bfs_row(u)[static_cast<std::size_t>(v)];
    if (d < 0)
        throw DomainError("disconnected vertices");
    return d;
}

std::vector<int> MetricSpace::dist_field(const std::vector<int>& sources) const {
    if (sources.empty())
        throw DomainError("dist_field needs a nonempty source set");
    const auto& adj = adjacency();
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> queue;
    for (int s : sources) {
        if (s < 0 || s >= size())
            throw DomainError("source vertex out of range");
        if (dist[static_cast<std::size_t>(s)] < 0) {
            dist[static_cast<std::size_t>(s)] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int MetricSpace::diameter() const {
    int best = 0;
    for (int v = 0; v < size(); ++v) {
        const auto& row = bfs_row(v);
        for (int d : row)
            if (d > best)
                best = d;
    }
    return best;
}

GridSpace::GridSpace(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw DomainError("grid dimensions must be positive");
    adj_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            int v = vertex(x, y);
            if (x + 1 < width) {
                adj_[static_cast<std::size_t>(v)].push_back(vertex(x + 1, y));
                adj_[static_cast<std::size_t>(vertex(x + 1, y))].push_back(v);
            }
            if (y + 1 < height) {
                adj_[static_cast<std::size_t>(v)].push_back(vertex(x, y + 1));
                adj_[static_cast<std::size_t>(vertex(x, y + 1))].push_back(v);
            }
        }
    }
}

std::string GridSpace::vertex_name(int v) const {
    return "(" + std::to_string(x_of(v)) + "," + std::to_string(y_of(v)) + ")";
}

int GridSpace::distance(int u, int v) const {
    int dx = x_of(u) - x_of(v);
    int dy = y_of(u) - y_of(v);
    return (dx < 0 ? -dx : dx) + (dy < 0 ? -dy : dy);
}

int GridSpace::boundary_distance(int v) const {
    int x = x_of(v), y = y_of(v);
    int bx = x < width_ - 1 - x ? x : width_ - 1 - x;
    int by = y < height_ - 1 - y ? y : height_ - 1 - y;
    return bx < by ? bx : by;
}

} // namespace coarsekit
