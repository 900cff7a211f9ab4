#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

struct DimensionResult {
    int dimension = 0;
    VertexList basis;                  // lexicographically least basis
    std::uint64_t bases_examined = 0;  // complete subsets tested
};

struct SolverOptions {
    // Worker count for the per-first-vertex partition; 0 = hardware threads.
    // The answer does not depend on this value.
    int threads = 1;
};

/// Exact metric dimension of a connected graph with n >= 2.
///
/// Subsets are visited by size, then lexicographically. A partial landmark
/// set is abandoned when some class of still-tied vertices can no longer be
/// split: either no remaining candidate separates it, or it is larger than
/// the (diameter + 1)^remaining distinct vectors still available to it.
DimensionResult metric_dimension(const Graph& g, const SolverOptions& options = {});

/// Every resolving set of size k none of whose proper subsets resolves,
/// sorted lexicographically. With k = dim this is the list of all bases.
std::vector<VertexList> all_bases(const Graph& g, int k);

/// Lexicographically least resolving pair, if any.
std::optional<std::pair<Vertex, Vertex>> dim_two_witness(const Graph& g);

std::uint64_t count_shortest_paths(const Graph& g, Vertex a, Vertex b);

struct BasisPropertyReport {
    Vertex a = 0;
    Vertex b = 0;
    std::uint64_t shortest_path_count = 0;
    int deg_a = 0;
    int deg_b = 0;
    // Over internal vertices of the a-b shortest path(s).
    int max_internal_degree = 0;
    bool all_properties_hold = false;
};

/// Checks the three structural properties every basis {a,b} of a
/// 2-dimensional graph has: a unique shortest a-b path P, deg(a), deg(b) <= 3,
/// and every internal vertex of P of degree <= 5.
BasisPropertyReport basis_property_report(const Graph& g, std::pair<Vertex, Vertex> pair);

}  // namespace mdim
