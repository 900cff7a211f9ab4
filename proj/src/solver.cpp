#include "mdim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "mdim/errors.hpp"

namespace mdim {
namespace {

using Classes = std::vector<int>;

Classes refine(const DistanceMatrix& d, const Classes& cls, Vertex w) {
    const int n = d.order();
    std::vector<std::pair<std::pair<int, int>, int>> keyed(n);
    for (int v = 0; v < n; ++v) keyed[v] = {{cls[v], d(v, w)}, v};
    std::sort(keyed.begin(), keyed.end());
    Classes out(n);
    int id = -1;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) ++id;
        out[keyed[i].second] = id;
    }
    return out;
}

class SubsetSearch {
public:
    SubsetSearch(const DistanceMatrix& d) : d_(d), n_(d.order()), radix_(d.diameter() + 1) {}

    // Lexicographically least resolving set of size k whose first element is
    // `first`, or empty. `examined` counts complete subsets tested.
    VertexList first_with_prefix(int k, Vertex first, std::uint64_t& examined) const {
        VertexList chosen{first};
        Classes cls(n_, 0);
        cls = refine(d_, cls, first);
        if (descend(k - 1, first + 1, cls, chosen, examined)) return chosen;
        return {};
    }

    // All resolving sets of size k, lexicographic.
    void collect(int k, Vertex start, const Classes& cls, VertexList& chosen,
                 std::vector<VertexList>& out) const {
        if (k == 0) {
            if (all_singletons(cls)) out.push_back(chosen);
            return;
        }
        if (!feasible(cls, start, k)) return;
        for (Vertex w = start; w <= n_ - k; ++w) {
            chosen.push_back(w);
            collect(k - 1, w + 1, refine(d_, cls, w), chosen, out);
            chosen.pop_back();
        }
    }

private:
    bool descend(int remaining, Vertex start, const Classes& cls, VertexList& chosen,
                 std::uint64_t& examined) const {
        if (remaining == 0) {
            ++examined;
            return all_singletons(cls);
        }
        if (!feasible(cls, start, remaining)) return false;
        for (Vertex w = start; w <= n_ - remaining; ++w) {
            chosen.push_back(w);
            if (descend(remaining - 1, w + 1, refine(d_, cls, w), chosen, examined)) return true;
            chosen.pop_back();
        }
        return false;
    }

    static bool all_singletons(const Classes& cls) {
        auto sorted = cls;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    // Can `remaining` more landmarks drawn from [start, n) still separate
    // every tied class?
    bool feasible(const Classes& cls, Vertex start, int remaining) const {
        const int classes = 1 + *std::max_element(cls.begin(), cls.end());
        std::vector<VertexList> members(classes);
        for (Vertex v = 0; v < n_; ++v) members[cls[v]].push_back(v);
        long long capacity = 1;
        for (int i = 0; i < remaining && capacity < n_; ++i) capacity *= radix_;
        for (const auto& group : members) {
            if (group.size() < 2) continue;
            if (remaining == 0 || static_cast<long long>(group.size()) > capacity) return false;
            if (group.back() >= start) continue;  // a member can still be picked
            bool splittable = false;
            for (Vertex w = start; w < n_ && !splittable; ++w) {
                int first = d_(group.front(), w);
                splittable = std::any_of(group.begin() + 1, group.end(),
                                         [&](Vertex v) { return d_(v, w) != first; });
            }
            if (!splittable) return false;
        }
        return true;
    }

    const DistanceMatrix& d_;
    int n_;
    long long radix_;
};

DistanceMatrix connected_matrix(const Graph& g) {
    DistanceMatrix d(g);
    if (!d.all_finite()) throw DomainError("graph is disconnected; metric dimension undefined");
    return d;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

DimensionResult metric_dimension(const Graph& g, const SolverOptions& options) {
    if (g.order() < 2) throw PreconditionError("metric dimension needs at least two vertices");
    const DistanceMatrix d = connected_matrix(g);
    const SubsetSearch search(d);
    const int n = g.order();
    const int threads = resolve_threads(options.threads);

    DimensionResult result;
    for (int k = 1; k < n; ++k) {
        // Partition by first element; the least first element with a hit wins.
        const int firsts = n - k + 1;
        std::vector<VertexList> found(firsts);
        std::vector<std::uint64_t> examined(firsts, 0);
        std::atomic<int> next{0};
        std::atomic<int> best{std::numeric_limits<int>::max()};
        auto worker = [&] {
            for (int i = next++; i < firsts; i = next++) {
                if (i > best.load()) continue;
                found[i] = search.first_with_prefix(k, i, examined[i]);
                if (!found[i].empty()) {
                    int cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {}
                }
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < std::min(threads, firsts); ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        const int winner = best.load();
        const int upto = std::min(winner, firsts - 1);
        for (int i = 0; i <= upto; ++i) result.bases_examined += examined[i];
        if (winner != std::numeric_limits<int>::max()) {
            result.dimension = k;
            result.basis = found[winner];
            return result;
        }
    }
    // Unreachable for connected graphs: any n-1 vertices resolve.
    throw DomainError("no resolving set found");
}

std::vector<VertexList> all_bases(const Graph& g, int k) {
    const DistanceMatrix d = connected_matrix(g);
    if (k < 1 || k > g.order()) return {};
    const SubsetSearch search(d);
    std::vector<VertexList> sets;
    VertexList chosen;
    search.collect(k, 0, Classes(g.order(), 0), chosen, sets);
    // Keep only sets with no resolving proper subset; checking the k maximal
    // proper subsets suffices by monotonicity.
    std::vector<VertexList> minimal;
    for (const auto& s : sets) {
        bool is_minimal = true;
        for (std::size_t drop = 0; drop < s.size() && is_minimal && s.size() > 1; ++drop) {
            VertexList sub;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i != drop) sub.push_back(s[i]);
            }
            if (is_resolving_set(d, sub)) is_minimal = false;
        }
        if (is_minimal) minimal.push_back(s);
    }
    return minimal;
}

std::optional<std::pair<Vertex, Vertex>> dim_two_witness(const Graph& g) {
    if (g.order() < 2) return std::nullopt;
    const DistanceMatrix d = connected_matrix(g);
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
            const Vertex pair[2] = {a, b};
            if (is_resolving_set(d, pair)) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

std::uint64_t count_shortest_paths(const Graph& g, Vertex a, Vertex b) {
    auto dist = bfs_distances(g, a);
    if (dist[b] == kUnreachable) {
        throw DomainError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                          " are not connected");
    }
    VertexList order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex x, Vertex y) { return dist[x] < dist[y]; });
    std::vector<std::uint64_t> ways(g.order(), 0);
    ways[a] = 1;
    for (Vertex v : order) {
        if (dist[v] == kUnreachable || v == a) continue;
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] != kUnreachable && dist[w] + 1 == dist[v]) ways[v] += ways[w];
        }
    }
    return ways[b];
}

BasisPropertyReport basis_property_report(const Graph& g, std::pair<Vertex, Vertex> pair) {
    const DistanceMatrix d = connected_matrix(g);
    const Vertex landmarks[2] = {pair.first, pair.second};
    if (pair.first == pair.second || !is_resolving_set(d, landmarks)) {
        throw PreconditionError("pair {" + std::to_string(pair.first) + "," +
                                std::to_string(pair.second) + "} is not a resolving set");
    }
    BasisPropertyReport report;
    report.a = pair.first;
    report.b = pair.second;
    report.shortest_path_count = count_shortest_paths(g, report.a, report.b);
    report.deg_a = g.degree(report.a);
    report.deg_b = g.degree(report.b);
    // Internal vertices of shortest a-b paths: d(a,v) + d(v,b) = d(a,b).
    const int ab = d(report.a, report.b);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v == report.a || v == report.b) continue;
        if (d(report.a, v) + d(v, report.b) == ab) {
            report.max_internal_degree = std::max(report.max_internal_degree, g.degree(v));
        }
    }
    report.all_properties_hold = report.shortest_path_count == 1 && report.deg_a <= 3 &&
                                 report.deg_b <= 3 && report.max_internal_degree <= 5;
    return report;
}

}  // namespace mdim
