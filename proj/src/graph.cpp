#include "mdim/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mdim/errors.hpp"

namespace mdim {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(n);
    adj_matrix_.assign(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (adj_matrix_[static_cast<std::size_t>(u) * n + v]) continue;
        adj_matrix_[static_cast<std::size_t>(u) * n + v] = 1;
        adj_matrix_[static_cast<std::size_t>(v) * n + u] = 1;
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (auto [u, v] : edges_) {
        if (index[u] >= 0 && index[v] >= 0) sub.emplace_back(index[u], index[v]);
    }
    return Graph(static_cast<int>(vertices.size()), sub);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> moved;
    moved.reserve(edges_.size());
    for (auto [u, v] : edges_) moved.emplace_back(perm[u], perm[v]);
    return Graph(n_, moved);
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
    d_.reserve(static_cast<std::size_t>(n_) * n_);
    for (Vertex s = 0; s < n_; ++s) {
        auto row = bfs_distances(g, s);
        d_.insert(d_.end(), row.begin(), row.end());
    }
}

bool DistanceMatrix::all_finite() const {
    return std::none_of(d_.begin(), d_.end(), [](int x) { return x == kUnreachable; });
}

int DistanceMatrix::diameter() const {
    if (!all_finite()) throw DomainError("diameter of a disconnected graph");
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

bool MetricRepresentation::injective() const {
    auto sorted = vectors;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

void check_landmarks(int n, std::span<const Vertex> landmarks) {
    if (landmarks.empty()) throw PreconditionError("landmark set is empty");
    std::vector<char> seen(n, 0);
    for (Vertex w : landmarks) {
        if (w < 0 || w >= n) throw InputError("landmark " + std::to_string(w) + " out of range");
        if (seen[w]) throw InputError("landmark " + std::to_string(w) + " repeated");
        seen[w] = 1;
    }
}

const DistanceMatrix& require_connected(const DistanceMatrix& d) {
    if (!d.all_finite()) {
        throw DomainError("metric representations need a connected graph");
    }
    return d;
}

}  // namespace

MetricRepresentation metric_representation(const Graph& g,
                                           std::span<const Vertex> landmarks) {
    check_landmarks(g.order(), landmarks);
    DistanceMatrix d(g);
    require_connected(d);
    MetricRepresentation rep;
    rep.landmarks.assign(landmarks.begin(), landmarks.end());
    rep.vectors.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        rep.vectors[v].reserve(landmarks.size());
        for (Vertex w : landmarks) rep.vectors[v].push_back(d(v, w));
    }
    return rep;
}

bool resolves(const DistanceMatrix& d, std::span<const Vertex> landmarks,
              std::span<const Vertex> targets) {
    check_landmarks(d.order(), landmarks);
    require_connected(d);
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) continue;
            bool split = std::any_of(landmarks.begin(), landmarks.end(), [&](Vertex w) {
                return d(targets[i], w) != d(targets[j], w);
            });
            if (!split) return false;
        }
    }
    return true;
}

bool is_resolving_set(const DistanceMatrix& d, std::span<const Vertex> landmarks) {
    check_landmarks(d.order(), landmarks);
    require_connected(d);
    std::vector<std::vector<int>> codes(d.order());
    for (Vertex v = 0; v < d.order(); ++v) {
        for (Vertex w : landmarks) codes[v].push_back(d(v, w));
    }
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

bool is_resolving_set(const Graph& g, std::span<const Vertex> landmarks) {
    return is_resolving_set(DistanceMatrix(g), landmarks);
}

bool resolves(const Graph& g, std::span<const Vertex> landmarks,
              std::span<const Vertex> targets) {
    return resolves(DistanceMatrix(g), landmarks, targets);
}

}  // namespace mdim
