#include "mdim/families.hpp"

#include <algorithm>
#include <string>

#include "mdim/errors.hpp"

namespace mdim {

KPath make_k_path(int n, int k) {
    if (k < 1) throw InputError("k-path needs k >= 1");
    if (n <= k) {
        throw InputError("k-path needs n >= k+1 (got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n && j - i <= k; ++j) edges.emplace_back(i, j);
    }
    KPath out{Graph(n, edges), KPathLabeling{k, {}}};
    out.labeling.order.resize(n);
    for (int i = 0; i < n; ++i) out.labeling.order[i] = i;
    return out;
}

int k_path_distance(int r, int s, int k) {
    const int gap = r > s ? r - s : s - r;
    return (gap + k - 1) / k;
}

std::optional<EliminationOrder> find_elimination_order(const Graph& g, int k) {
    const int n = g.order();
    if (k < 1 || n < k + 1) return std::nullopt;
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

    auto live_neighbors = [&](Vertex v) {
        VertexList out;
        for (Vertex w : g.neighbors(v)) {
            if (alive[w]) out.push_back(w);
        }
        return out;
    };
    auto is_clique = [&](const VertexList& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!g.adjacent(vs[i], vs[j])) return false;
            }
        }
        return true;
    };

    EliminationOrder out;
    out.k = k;
    for (int remaining = n; remaining > k + 1; --remaining) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick < 0; ++v) {
            if (alive[v] && degree[v] == k && is_clique(live_neighbors(v))) pick = v;
        }
        if (pick < 0) return std::nullopt;
        alive[pick] = 0;
        for (Vertex w : g.neighbors(pick)) --degree[w];
        out.order.push_back(pick);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) out.base.push_back(v);
    }
    if (!is_clique(out.base)) return std::nullopt;
    return out;
}

namespace {

class OrderingSearch {
public:
    OrderingSearch(const Graph& g, int k, std::span<const Vertex> pinned)
        : g_(g), k_(k), n_(g.order()), pinned_(pinned.begin(), pinned.end()),
          placed_(n_, 0) {}

    std::optional<VertexList> run() {
        if (expected_edges() != g_.size()) return std::nullopt;
        if (extend()) return order_;
        return std::nullopt;
    }

private:
    long long expected_edges() const {
        long long total = 0;
        for (int i = 0; i < n_; ++i) total += std::min(k_, n_ - 1 - i);
        return total;
    }

    int expected_degree(int pos) const {
        return std::min(pos, k_) + std::min(n_ - 1 - pos, k_);
    }

    bool fits(Vertex c, int pos) const {
        if (placed_[c] || g_.degree(c) != expected_degree(pos)) return false;
        for (int q = 0; q < pos; ++q) {
            bool near = pos - q <= k_;
            if (g_.adjacent(c, order_[q]) != near) return false;
        }
        return true;
    }

    bool extend() {
        const int pos = static_cast<int>(order_.size());
        if (pos == n_) return true;
        auto try_vertex = [&](Vertex c) {
            if (!fits(c, pos)) return false;
            placed_[c] = 1;
            order_.push_back(c);
            if (extend()) return true;
            order_.pop_back();
            placed_[c] = 0;
            return false;
        };
        if (pos < static_cast<int>(pinned_.size()) && pinned_[pos] >= 0) {
            return try_vertex(pinned_[pos]);
        }
        if (pos > 0) {
            // Later vertices are adjacent to the previous one; scan its
            // neighborhood instead of the whole vertex set.
            for (Vertex c : g_.neighbors(order_.back())) {
                if (try_vertex(c)) return true;
            }
            return false;
        }
        for (Vertex c = 0; c < n_; ++c) {
            if (try_vertex(c)) return true;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int n_;
    VertexList pinned_;
    std::vector<char> placed_;
    VertexList order_;
};

}  // namespace

std::optional<KPathLabeling> find_k_path_ordering(const Graph& g, int k,
                                                  std::span<const Vertex> pinned) {
    if (k < 1 || g.order() < k + 1) return std::nullopt;
    if (static_cast<int>(pinned.size()) > g.order()) return std::nullopt;
    auto order = OrderingSearch(g, k, pinned).run();
    if (!order) return std::nullopt;
    return KPathLabeling{k, std::move(*order)};
}

std::optional<KPathLabeling> find_k_path_ordering(const Graph& g, int k) {
    return find_k_path_ordering(g, k, std::span<const Vertex>{});
}

Cane make_cane(int t) {
    if (t < 4) throw InputError("cane handle needs t >= 4 (got " + std::to_string(t) + ")");
    KPath handle = make_k_path(t, 2);
    std::vector<Edge> edges = handle.graph.edges();
    const Vertex apex = t;
    edges.emplace_back(0, apex);
    edges.emplace_back(2, apex);
    return Cane{Graph(t + 1, edges), CaneDecomposition{handle.labeling, apex}};
}

std::optional<CaneDecomposition> find_cane_decomposition(const Graph& g) {
    const int n = g.order();
    if (n < 5) return std::nullopt;
    for (Vertex apex = 0; apex < n; ++apex) {
        if (g.degree(apex) != 2) continue;
        const Vertex p = g.neighbors(apex)[0];
        const Vertex q = g.neighbors(apex)[1];
        if (!g.adjacent(p, q)) continue;

        VertexList rest;
        VertexList index(n, -1);
        for (Vertex v = 0; v < n; ++v) {
            if (v == apex) continue;
            index[v] = static_cast<Vertex>(rest.size());
            rest.push_back(v);
        }
        const Graph handle = g.induced(rest);
        for (auto [first, third] : {std::pair{p, q}, std::pair{q, p}}) {
            const Vertex pinned[3] = {index[first], -1, index[third]};
            auto labeling = find_k_path_ordering(handle, 2, pinned);
            if (!labeling) continue;
            for (auto& v : labeling->order) v = rest[v];
            return CaneDecomposition{std::move(*labeling), apex};
        }
    }
    return std::nullopt;
}

}  // namespace mdim
