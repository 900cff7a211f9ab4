#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable once built. Construction rejects out-of-range endpoints and
/// self-loops and collapses duplicate edges, so the adjacency lists are
/// sorted, symmetric and duplicate-free.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex u, Vertex v) const {
        return adj_matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool connected() const;

    /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    /// Same graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexList> adj_;
    std::vector<std::uint8_t> adj_matrix_;
};

Graph build_graph(int n, std::span<const Edge> edges);

inline constexpr int kUnreachable = -1;

/// All-pairs hop distances; entries are kUnreachable across components.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const {
        return d_[static_cast<std::size_t>(u) * n_ + v];
    }
    std::span<const int> row(Vertex u) const {
        return {d_.data() + static_cast<std::size_t>(u) * n_,
                static_cast<std::size_t>(n_)};
    }
    bool all_finite() const;
    int diameter() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

/// Single-source BFS hop counts (kUnreachable where no path exists).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// r(v|W) for every v, with W kept in the caller's order.
struct MetricRepresentation {
    VertexList landmarks;
    std::vector<std::vector<int>> vectors;

    bool injective() const;
};

MetricRepresentation metric_representation(const Graph& g,
                                           std::span<const Vertex> landmarks);

bool is_resolving_set(const Graph& g, std::span<const Vertex> landmarks);

/// True iff every pair of distinct vertices in `targets` is separated by a
/// vertex of `landmarks`.
bool resolves(const Graph& g, std::span<const Vertex> landmarks,
              std::span<const Vertex> targets);

// Distance-matrix variants used by the search code, which computes the
// matrix once per graph.
bool is_resolving_set(const DistanceMatrix& d, std::span<const Vertex> landmarks);
bool resolves(const DistanceMatrix& d, std::span<const Vertex> landmarks,
              std::span<const Vertex> targets);

}  // namespace mdim
