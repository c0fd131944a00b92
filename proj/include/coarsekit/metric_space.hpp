#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarsekit/errors.hpp"

namespace coarsekit {

/// Finite connected graph with the simplicial metric (every edge length 1).
/// Vertices are 0..size()-1 in a canonical order.
class MetricSpace {
public:
    virtual ~MetricSpace() = default;

    virtual const std::vector<std::vector<int>>& adjacency() const = 0;
    virtual std::string vertex_name(int v) const = 0;

    int size() const { return static_cast<int>(adjacency().size()); }

    /// Exact distance; default is a cached BFS row from u.
    virtual int distance(int u, int v) const;

    /// Distance field from a vertex set (multi-source BFS). Not cached here.
    std::vector<int> dist_field(const std::vector<int>& sources) const;

    /// Hop count from v to the window edge; large for interior vertices.
    virtual int boundary_distance(int v) const = 0;

    virtual int diameter() const;

protected:
    const std::vector<int>& bfs_row(int source) const;

private:
    mutable std::unordered_map<int, std::vector<int>> rowCache_;
};

/// Rectangular grid graph with 4-neighbor edges; the toy flat model.
class GridSpace : public MetricSpace {
public:
    GridSpace(int width, int height);

    const std::vector<std::vector<int>>& adjacency() const override { return adj_; }
    std::string vertex_name(int v) const override;
    int distance(int u, int v) const override;
    int boundary_distance(int v) const override;
    int diameter() const override { return (width_ - 1) + (height_ - 1); }

    int width() const { return width_; }
    int height() const { return height_; }
    int vertex(int x, int y) const { return y * width_ + x; }
    int x_of(int v) const { return v % width_; }
    int y_of(int v) const { return v / width_; }

private:
    int width_;
    int height_;
    std::vector<std::vector<int>> adj_;
};

} // namespace coarsekit
