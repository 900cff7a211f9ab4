#pragma once

#include <optional>
#include <span>

#include "mdim/graph.hpp"

namespace mdim {

/// Removal sequence certifying a k-tree: each removed vertex has exactly k
/// neighbors, pairwise adjacent, at removal time; K_{k+1} remains.
struct EliminationOrder {
    int k = 0;
    VertexList order;
    VertexList base;  // the remaining (k+1)-clique
};

/// Ordering v_1..v_n under which the edges are exactly {v_i v_j : |i-j| <= k}.
struct KPathLabeling {
    int k = 0;
    VertexList order;
};

/// A 2-path handle v_1..v_t plus an apex adjacent to exactly v_1 and v_3.
struct CaneDecomposition {
    KPathLabeling handle;
    Vertex apex = 0;

    int handle_size() const { return static_cast<int>(handle.order.size()); }
    bool degenerate() const { return handle_size() == 4; }
};

struct KPath {
    Graph graph;
    KPathLabeling labeling;
};

struct Cane {
    Graph graph;
    CaneDecomposition decomposition;
};

KPath make_k_path(int n, int k);

/// Hop distance between v_r and v_s of a k-path (1-based indices).
int k_path_distance(int r, int s, int k);

std::optional<EliminationOrder> find_elimination_order(const Graph& g, int k);

std::optional<KPathLabeling> find_k_path_ordering(const Graph& g, int k);

/// k-path ordering whose first positions are pinned: pinned[i] >= 0 forces
/// v_{i+1} = pinned[i], -1 leaves the position free.
std::optional<KPathLabeling> find_k_path_ordering(const Graph& g, int k,
                                                  std::span<const Vertex> pinned);

Cane make_cane(int t);

std::optional<CaneDecomposition> find_cane_decomposition(const Graph& g);

}  // namespace mdim
