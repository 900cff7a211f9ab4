#include <doctest.h>

#include "mdim/errors.hpp"
#include "mdim/families.hpp"
#include "mdim/solver.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

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

TEST_CASE("metric_dimension examples") {
    auto p5 = metric_dimension(path(5));
    CHECK(p5.dimension == 1);
    CHECK(p5.basis == VertexList{0});
    CHECK(metric_dimension(complete(4)).dimension == 3);
    CHECK(metric_dimension(make_k_path(7, 2).graph).dimension == 2);
    const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK(metric_dimension(Graph(4, star)).dimension == 2);
    CHECK(oracle::brute_dimension(Graph(4, star)) == 2);
}

TEST_CASE("metric_dimension errors") {
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(metric_dimension(Graph(4, split)), DomainError);
    CHECK_THROWS_AS(metric_dimension(Graph(1, std::vector<Edge>{})), PreconditionError);
}

TEST_CASE("thread count does not change the answer") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_connected(6 + trial % 5, 0.3, rng);
        const auto one = metric_dimension(g, {1});
        const auto four = metric_dimension(g, {4});
        CHECK(one.dimension == four.dimension);
        CHECK(one.basis == four.basis);
        CHECK(one.bases_examined == four.bases_examined);
    }
}

TEST_CASE("pruned search equals the unpruned scan on random graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_connected(2 + trial % 7, 0.35, rng);
        VertexList least;
        const int d = oracle::brute_dimension(g, &least);
        const auto r = metric_dimension(g);
        REQUIRE(r.dimension == d);
        REQUIRE(r.basis == least);
    }
}

TEST_CASE("all_bases") {
    CHECK(all_bases(path(3), 1) == std::vector<VertexList>{{0}, {2}});
    CHECK(all_bases(complete(3), 2) == std::vector<VertexList>{{0, 1}, {0, 2}, {1, 2}});
    const auto p7 = all_bases(make_k_path(7, 2).graph, 2);
    CHECK(std::find(p7.begin(), p7.end(), VertexList{0, 1}) != p7.end());
}

TEST_CASE("dim_two_witness") {
    CHECK(dim_two_witness(path(4)).has_value());
    CHECK_FALSE(dim_two_witness(complete(4)).has_value());
    CHECK(dim_two_witness(make_cane(6).graph).has_value());
}

TEST_CASE("basis_property_report") {
    const auto p7 = basis_property_report(make_k_path(7, 2).graph, {0, 1});
    CHECK(p7.shortest_path_count == 1);
    CHECK(p7.deg_a <= 3);
    CHECK(p7.deg_b <= 3);
    CHECK(p7.all_properties_hold);

    const auto p5 = basis_property_report(path(5), {0, 4});
    CHECK(p5.max_internal_degree == 2);
    CHECK(p5.all_properties_hold);
}

TEST_CASE("count_shortest_paths") {
    CHECK(count_shortest_paths(path(4), 0, 3) == 1);
    const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK(count_shortest_paths(Graph(4, c4), 0, 2) == 2);
    CHECK(count_shortest_paths(complete(4), 1, 3) == 1);
}
