#include <doctest.h>

#include "mdim/errors.hpp"
#include "mdim/families.hpp"
#include "mdim/graph.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

Graph make(int n, std::vector<Edge> edges) { return Graph(n, edges); }
Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}
Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("build_graph") {
    const Graph k3 = make(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(k3 == complete(3));

    CHECK_THROWS_AS(make(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(make(2, {{0, 2}}), InputError);

    const Graph p4 = make(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.size() == 3);
    CHECK(p4 == path(4));
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("adjacency is symmetric and sorted") {
    const Graph g = make(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}});
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (Vertex u : nb) CHECK(g.adjacent(u, v));
    }
    CHECK(g.degree(0) == 3);
    CHECK(g.max_degree() == 3);
}

TEST_CASE("distances match Floyd-Warshall") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 12;
        const Graph g = oracle::random_connected(n, 0.2, rng);
        const auto fw = oracle::floyd_warshall(g);
        const DistanceMatrix d(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) REQUIRE(d(u, v) == fw[u][v]);
    }
    const Graph split = make(4, {{0, 1}, {2, 3}});
    CHECK(bfs_distances(split, 0) == std::vector<int>{0, 1, kUnreachable, kUnreachable});
    CHECK_FALSE(DistanceMatrix(split).all_finite());
    CHECK_FALSE(split.connected());
}

TEST_CASE("metric representation") {
    const Graph p4 = path(4);
    const Vertex w[] = {0, 3};
    const auto r = metric_representation(p4, w);
    CHECK(r.vectors[1] == std::vector<int>{1, 2});
    CHECK(r.injective());
    const Vertex empty[] = {0};
    CHECK_NOTHROW(metric_representation(p4, empty));
    CHECK_THROWS_AS(metric_representation(make(3, {{0, 1}}), empty), DomainError);
}

TEST_CASE("is_resolving_set") {
    const Vertex end[] = {0};
    CHECK(is_resolving_set(path(3), end));
    for (Vertex v = 0; v < 3; ++v) {
        const Vertex one[] = {v};
        CHECK_FALSE(is_resolving_set(complete(3), one));
    }
    const Vertex first_two[] = {0, 1};
    CHECK(is_resolving_set(make_k_path(7, 2).graph, first_two));
}

TEST_CASE("resolves on a target subset") {
    const Vertex s[] = {1, 2};
    const Vertex t[] = {1, 2};
    CHECK(resolves(path(5), s, t));

    const Vertex k4s[] = {0};
    const Vertex k4t[] = {1, 2, 3};
    CHECK_FALSE(resolves(complete(4), k4s, k4t));

    const Vertex p5s[] = {0};
    const Vertex all[] = {0, 1, 2, 3, 4};
    CHECK(resolves(path(5), p5s, all));
}

TEST_CASE("induced and relabeled") {
    const Graph k4 = complete(4);
    const Vertex keep[] = {1, 3};
    CHECK(k4.induced(keep) == complete(2));
    const Vertex perm[] = {2, 0, 1};
    const Graph p3 = path(3).relabeled(perm);
    CHECK(p3.adjacent(2, 0));
    CHECK(p3.adjacent(0, 1));
    CHECK_FALSE(p3.adjacent(2, 1));
}
