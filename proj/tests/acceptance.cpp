// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "mdim/classifier.hpp"
#include "mdim/enumerate.hpp"
#include "mdim/families.hpp"
#include "mdim/solver.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

struct Criterion {
    int number;
    std::string title;
    std::chrono::seconds limit;
    std::function<Outcome()> body;
};

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

std::string first_mismatch(const CampaignReport& r) {
    if (r.passed()) return "";
    const auto& m = r.mismatches.front();
    return " first: n=" + std::to_string(m.n) + " code=" + m.code + " " + m.detail;
}

int total(const CampaignReport& r) {
    int t = 0;
    for (const auto& [n, c] : r.counts) t += c;
    return t;
}

Outcome kpath_dimension() {
    int cases = 0;
    for (int k = 1; k <= 4; ++k) {
        for (int n = k + 1; n <= 16; ++n) {
            ++cases;
            const int d = metric_dimension(make_k_path(n, k).graph).dimension;
            if (d != k) {
                return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " gave " + std::to_string(d)};
            }
        }
    }
    return {true, std::to_string(cases) + " k-paths"};
}

Outcome closed_form_distance() {
    long long pairs = 0;
    for (int k = 1; k <= 6; ++k) {
        for (int n = k + 1; n <= 60; ++n) {
            const DistanceMatrix d(make_k_path(n, k).graph);
            for (int r = 1; r <= n; ++r) {
                for (int s = 1; s <= n; ++s) {
                    ++pairs;
                    if (k_path_distance(r, s, k) != d(r - 1, s - 1)) {
                        return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" +
                                           std::to_string(r) + " s=" + std::to_string(s)};
                    }
                }
            }
        }
    }
    return {true, std::to_string(pairs) + " pairs"};
}

Outcome characterization() {
    const auto report = verify_equivalence(9, {0, {}});
    const auto classes = oracle::two_tree_classes(9);
    for (int n = 3; n <= 9; ++n) {
        const int oracle_count = static_cast<int>(classes.at(n).size());
        if (report.counts.at(n) != oracle_count) {
            return {false, "n=" + std::to_string(n) + " enumerated " + std::to_string(report.counts.at(n)) +
                               " but labeled generation found " + std::to_string(oracle_count)};
        }
    }
    return {report.passed(), std::to_string(total(report)) + " 2-trees, " +
                                 std::to_string(report.mismatches.size()) + " mismatches" + first_mismatch(report)};
}

Outcome adjacent_basis() {
    const auto report = verify_adjacent_basis(8, {0, {}});
    return {report.passed(), std::to_string(total(report)) + " 2-trees, " +
                                 std::to_string(report.mismatches.size()) + " violations" + first_mismatch(report)};
}

Outcome basis_properties() {
    const auto report = verify_basis_properties(9, {0, {}});
    if (!report.passed()) return {false, "2-tree violation" + first_mismatch(report)};
    std::mt19937 rng(1001);
    int two_dim = 0, bases = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + trial % 6;
        const double p = 0.15 + 0.05 * (trial % 5);
        const Graph g = oracle::random_connected(n, p, rng);
        if (metric_dimension(g).dimension != 2) continue;
        ++two_dim;
        for (const auto& b : all_bases(g, 2)) {
            ++bases;
            if (!basis_property_report(g, {b[0], b[1]}).all_properties_hold) {
                return {false, "random graph trial " + std::to_string(trial) + " basis {" + std::to_string(b[0]) +
                                   "," + std::to_string(b[1]) + "}"};
            }
        }
    }
    return {true, std::to_string(total(report)) + " 2-trees; 1000 random graphs, " + std::to_string(two_dim) +
                      " of dimension 2, " + std::to_string(bases) + " bases"};
}

Outcome boundary_identities() {
    for (int n = 3; n <= 7; ++n) {
        if (metric_dimension(complete(n)).dimension != n - 1) return {false, "K_" + std::to_string(n)};
    }
    for (int n = 2; n <= 10; ++n) {
        if (metric_dimension(path(n)).dimension != 1) return {false, "P_" + std::to_string(n)};
    }
    return {true, "K_3..K_7, P_2..P_10"};
}

Outcome branch_lemma() {
    const auto instances = random_branch_instances(200, 12345);
    const auto report = verify_branch_lemma(instances);
    return {report.passed(), "200 members, " + std::to_string(instances.size()) + " branches, " +
                                 std::to_string(report.mismatches.size()) + " violations" + first_mismatch(report)};
}

Outcome witness_soundness() {
    int members = 0;
    auto check = [&](const Graph& g) {
        const auto out = classify(g);
        if (!out.member) return true;
        ++members;
        const Vertex w[] = {out.certificate->witness.first, out.certificate->witness.second};
        return out.certificate->witness_resolves && is_resolving_set(g, w);
    };
    for (int n = 3; n <= 9; ++n) {
        for (const auto& g : enumerate_2trees(n)) {
            if (!check(g)) return {false, "enumerated 2-tree n=" + std::to_string(n) + " " + canonical_code(g).hex()};
        }
    }
    for (const auto& inst : random_branch_instances(200, 4242)) {
        if (!check(inst.graph)) return {false, "random member of order " + std::to_string(inst.graph.order())};
    }
    return {true, std::to_string(members) + " member verdicts"};
}

Outcome solver_oracle() {
    int graphs = 0;
    auto same = [&](const Graph& g) {
        ++graphs;
        VertexList least;
        const int d = oracle::brute_dimension(g, &least);
        const auto r = metric_dimension(g);
        return r.dimension == d && r.basis == least;
    };
    for (int n = 3; n <= 7; ++n) {
        for (const auto& g : enumerate_2trees(n)) {
            if (!same(g)) return {false, "2-tree " + canonical_code(g).hex()};
        }
    }
    std::mt19937 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = oracle::random_connected(2 + trial % 6, 0.1 + 0.1 * (trial % 6), rng);
        if (!same(g)) return {false, "random graph trial " + std::to_string(trial)};
    }
    return {true, std::to_string(graphs) + " graphs"};
}

Outcome degenerate_cane() {
    const bool iso = are_isomorphic(make_cane(4).graph, make_k_path(5, 2).graph);
    const Graph c5 = make_cane(5).graph;
    const bool deg5 = c5.max_degree() == 5;
    const bool not_two_path = !find_k_path_ordering(c5, 2).has_value();
    std::ostringstream note;
    note << "cane(4)~2-path(5)=" << iso << " maxdeg(cane(5))=" << c5.max_degree()
         << " cane(5) 2-path=" << !not_two_path;
    return {iso && deg5 && not_two_path, note.str()};
}

}  // namespace

int main() {
    using namespace std::chrono_literals;
    const std::vector<Criterion> criteria{
        {1, "k-path dimension", 60s, kpath_dimension},
        {2, "closed-form k-path distance", 10s, closed_form_distance},
        {3, "main characterization, n <= 9", 600s, characterization},
        {4, "adjacent-basis property, n <= 8", 300s, adjacent_basis},
        {5, "basis properties", 600s, basis_properties},
        {6, "boundary identities", 60s, boundary_identities},
        {7, "branch lemma campaign", 60s, branch_lemma},
        {8, "witness soundness", 600s, witness_soundness},
        {9, "solver against unpruned scan", 600s, solver_oracle},
        {10, "degenerate cane", 10s, degenerate_cane},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        if (ms > c.limit) {
            o.ok = false;
            o.note += "; over the " + std::to_string(c.limit.count()) + " s limit";
        }
        failed += !o.ok;
        std::cout << "criterion " << c.number << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << o.note << ", " << ms.count() << " ms)" << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
    return failed ? 1 : 0;
}
