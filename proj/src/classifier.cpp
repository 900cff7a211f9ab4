#include "mdim/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mdim/errors.hpp"
#include "mdim/families.hpp"

namespace mdim {
namespace {

Triangle make_triangle(Vertex x, Vertex y, Vertex z) {
    Triangle t{x, y, z};
    std::sort(t.begin(), t.end());
    return t;
}

Edge make_edge(Vertex x, Vertex y) { return x < y ? Edge{x, y} : Edge{y, x}; }

void require_two_tree(const Graph& g) {
    if (!find_elimination_order(g, 2)) throw DomainError("graph is not a 2-tree");
}

}  // namespace

const char* to_string(SpineForm form) { return form == SpineForm::A ? "A" : "B"; }

const char* to_string(EdgeCategory category) {
    switch (category) {
        case EdgeCategory::Top: return "top";
        case EdgeCategory::Bottom: return "bottom";
        case EdgeCategory::Vertical: return "vertical";
        case EdgeCategory::Oblique: return "oblique";
    }
    return "?";
}

const char* to_string(BranchKind kind) {
    switch (kind) {
        case BranchKind::TwoPath: return "two-path";
        case BranchKind::Cane: return "cane";
        case BranchKind::Neither: return "neither";
    }
    return "?";
}

// ---------------------------------------------------------------------------

TriangleTree triangle_tree(const Graph& g) {
    auto elimination = find_elimination_order(g, 2);
    if (!elimination) throw DomainError("triangle tree needs a 2-tree");

    TriangleTree tree;
    std::map<Edge, int> first_holder;
    std::vector<char> present(g.order(), 0);
    auto add = [&](Triangle t, int parent) {
        const int id = tree.node_count();
        tree.triangles.push_back(t);
        tree.children.emplace_back();
        if (parent >= 0) {
            tree.children[parent].push_back(id);
            tree.children[id].push_back(parent);
            tree.links.emplace_back(std::min(parent, id), std::max(parent, id));
        }
        for (auto e : {make_edge(t[0], t[1]), make_edge(t[0], t[2]), make_edge(t[1], t[2])}) {
            first_holder.emplace(e, id);
        }
    };

    const auto& base = elimination->base;
    add(make_triangle(base[0], base[1], base[2]), -1);
    for (Vertex v : base) present[v] = 1;
    for (auto it = elimination->order.rbegin(); it != elimination->order.rend(); ++it) {
        const Vertex v = *it;
        VertexList attach;
        for (Vertex w : g.neighbors(v)) {
            if (present[w]) attach.push_back(w);
        }
        present[v] = 1;
        add(make_triangle(attach[0], attach[1], v), first_holder.at(make_edge(attach[0], attach[1])));
    }
    return tree;
}

// ---------------------------------------------------------------------------

bool SpineCertificate::contains(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

int SpineCertificate::edge_index(Vertex x, Vertex y) const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) return static_cast<int>(i);
    }
    return -1;
}

bool operator<(const SpineCertificate& x, const SpineCertificate& y) {
    return std::tie(x.form, x.a_row, x.b_row, x.m) < std::tie(y.form, y.a_row, y.b_row, y.m);
}

bool operator==(const SpineCertificate& x, const SpineCertificate& y) {
    return std::tie(x.form, x.a_row, x.b_row, x.m) == std::tie(y.form, y.a_row, y.b_row, y.m);
}

namespace {

std::vector<Triangle> all_triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (auto [u, v] : g.edges()) {
        for (Vertex w : g.neighbors(v)) {
            if (w > v && g.adjacent(u, w)) out.push_back({u, v, w});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexList shared(const Triangle& s, const Triangle& t) {
    VertexList out;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
    return out;
}

Vertex lone(const Triangle& t, const VertexList& pair) {
    for (Vertex v : t) {
        if (v != pair[0] && v != pair[1]) return v;
    }
    return kAbsent;
}

// Row letter per sequence position.
using Pattern = std::vector<char>;

std::vector<std::pair<SpineForm, Pattern>> row_patterns(int length) {
    std::vector<std::pair<SpineForm, Pattern>> out;
    for (char start : {'a', 'b'}) {
        Pattern p(length);
        for (int i = 0; i < length; ++i) p[i] = (i % 2 == 0) ? start : (start == 'a' ? 'b' : 'a');
        out.emplace_back(SpineForm::A, p);
        // One repeated b at positions d-1, d.
        for (int d = 1; d < length; ++d) {
            if (p[d - 1] != 'b') continue;
            Pattern q(length);
            for (int i = 0; i < length; ++i) {
                const int phase = i < d ? i : i - 1;
                q[i] = (phase % 2 == 0) ? start : (start == 'a' ? 'b' : 'a');
            }
            out.emplace_back(SpineForm::B, q);
        }
    }
    return out;
}

std::set<Edge> induced_edges(const Graph& g, const VertexList& vertices) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) out.insert(make_edge(vertices[i], vertices[j]));
        }
    }
    return out;
}

// Labels a vertex sequence by a row pattern; returns the certificate when
// the template edges coincide with the graph's edges on the sequence.
std::optional<SpineCertificate> label_sequence(const Graph& g, const VertexList& sequence,
                                               SpineForm form, const Pattern& pattern) {
    const int length = static_cast<int>(sequence.size());
    SpineCertificate spine;
    spine.form = form;
    int defect = -1;  // first position after the repeated b
    for (int i = 1; i < length; ++i) {
        if (pattern[i] == 'b' && pattern[i - 1] == 'b') defect = i;
    }
    std::map<int, Vertex> b_at;
    int a_seen = 0;
    for (int i = 0; i < length; ++i) {
        if (pattern[i] == 'a') {
            spine.a_row.push_back(sequence[i]);
            ++a_seen;
        } else {
            int index = a_seen + 1;
            if (form == SpineForm::B && i < defect) index = a_seen;
            if (!b_at.emplace(index, sequence[i]).second) return std::nullopt;
        }
    }
    const int k = spine.k();
    if (k < 2) return std::nullopt;
    spine.b_row.assign(k + 2, kAbsent);
    // Form A runs a_1, b_2, a_2, ..., b_k, a_k; a b_1 is carried as a
    // branch on a_1 b_2 instead. Form B has the full b-row b_1..b_k.
    const int first_b = form == SpineForm::A ? 2 : 1;
    for (auto [j, v] : b_at) {
        if (j < first_b || j > k) return std::nullopt;
        spine.b_row[j] = v;
    }
    if (static_cast<int>(b_at.size()) != k - first_b + 1) return std::nullopt;
    if (form == SpineForm::B) {
        spine.m = 0;
        for (int i = 0; i < defect; ++i) {
            if (pattern[i] == 'a') ++spine.m;
        }
        if (spine.m < 2 || spine.m > k - 1) return std::nullopt;
    }

    auto add_edge = [&](Vertex x, Vertex y, EdgeCategory c, int ai, int bj) {
        spine.edges.push_back(SpineEdge{x, y, c, ai, bj});
    };
    for (int i = 1; i < k; ++i) add_edge(spine.a(i), spine.a(i + 1), EdgeCategory::Top, i, 0);
    for (int j = 0; j <= k; ++j) {
        if (spine.b(j) != kAbsent && spine.b(j + 1) != kAbsent) {
            add_edge(spine.b(j), spine.b(j + 1), EdgeCategory::Bottom, 0, j);
        }
    }
    for (int i = 1; i <= k; ++i) {
        if (spine.b(i) != kAbsent) add_edge(spine.a(i), spine.b(i), EdgeCategory::Vertical, i, i);
        const bool left = form == SpineForm::B && i <= spine.m;
        const bool right = form == SpineForm::A || i >= spine.m;
        if (left && spine.b(i - 1) != kAbsent) {
            add_edge(spine.a(i), spine.b(i - 1), EdgeCategory::Oblique, i, i - 1);
        }
        if (right && spine.b(i + 1) != kAbsent) {
            add_edge(spine.a(i), spine.b(i + 1), EdgeCategory::Oblique, i, i + 1);
        }
    }

    spine.vertices = sequence;
    std::sort(spine.vertices.begin(), spine.vertices.end());
    std::set<Edge> expected;
    for (const auto& e : spine.edges) expected.insert(make_edge(e.u, e.v));
    if (expected != induced_edges(g, spine.vertices)) return std::nullopt;
    if (form == SpineForm::B) {
        int deg = 0;
        for (Vertex w : spine.vertices) deg += g.adjacent(spine.a(spine.m), w);
        if (deg != 5) return std::nullopt;
    }

    // Spine triangles, classified by which row holds two of their vertices.
    std::vector<char> row_a(g.order(), 0);
    for (Vertex v : spine.a_row) row_a[v] = 1;
    for (std::size_t x = 0; x < spine.vertices.size(); ++x) {
        for (std::size_t y = x + 1; y < spine.vertices.size(); ++y) {
            for (std::size_t z = y + 1; z < spine.vertices.size(); ++z) {
                const Vertex p = spine.vertices[x], q = spine.vertices[y], r = spine.vertices[z];
                if (!g.adjacent(p, q) || !g.adjacent(p, r) || !g.adjacent(q, r)) continue;
                SpineTriangle t;
                t.vertices = {p, q, r};
                t.edges = {spine.edge_index(p, q), spine.edge_index(p, r), spine.edge_index(q, r)};
                const int a_count = row_a[p] + row_a[q] + row_a[r];
                t.top = a_count == 2;
                for (int e : t.edges) {
                    const auto& se = spine.edges[e];
                    if (t.top && se.category == EdgeCategory::Top) t.index = se.a_index;
                    if (!t.top && se.category == EdgeCategory::Bottom) t.index = se.b_index;
                }
                spine.triangles.push_back(t);
            }
        }
    }
    return spine;
}

// Vertex sequences read off a triangle path: the first triangle's free
// vertex, its shared edge in either order, then each new vertex in turn.
std::vector<VertexList> path_sequences(const std::vector<Triangle>& path) {
    std::vector<VertexList> out;
    if (path.size() == 1) {
        Triangle t = path[0];
        do {
            out.push_back({t[0], t[1], t[2]});
        } while (std::next_permutation(t.begin(), t.end()));
        return out;
    }
    const auto first_shared = shared(path[0], path[1]);
    VertexList tail;
    for (std::size_t j = 1; j < path.size(); ++j) tail.push_back(lone(path[j], shared(path[j - 1], path[j])));
    for (int flip = 0; flip < 2; ++flip) {
        VertexList seq{lone(path[0], first_shared), first_shared[flip], first_shared[1 - flip]};
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(std::move(seq));
    }
    return out;
}

}  // namespace

std::vector<SpineCertificate> find_spine_candidates(const Graph& g) {
    require_two_tree(g);
    const auto triangles = all_triangles(g);
    const int count = static_cast<int>(triangles.size());
    std::vector<std::vector<int>> near(count);
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (shared(triangles[i], triangles[j]).size() == 2) {
                near[i].push_back(j);
                near[j].push_back(i);
            }
        }
    }

    std::set<SpineCertificate> found;
    auto consider = [&](const std::vector<int>& ids) {
        std::vector<Triangle> path;
        for (int id : ids) path.push_back(triangles[id]);
        for (int dir = 0; dir < 2; ++dir) {
            for (const auto& seq : path_sequences(path)) {
                for (const auto& [form, pattern] : row_patterns(static_cast<int>(seq.size()))) {
                    if (auto spine = label_sequence(g, seq, form, pattern)) found.insert(std::move(*spine));
                }
            }
            std::reverse(path.begin(), path.end());
        }
    };

    // Simple triangle paths; no three consecutive triangles on one edge
    // (those never lie in a spine). Each path is read in both directions.
    std::vector<int> path;
    std::vector<char> used(count, 0);
    auto grow = [&](auto&& self) -> void {
        if (path.front() <= path.back()) consider(path);
        const int last = path.back();
        for (int next : near[last]) {
            if (used[next]) continue;
            if (path.size() >= 2 &&
                shared(triangles[path[path.size() - 2]], triangles[last]) ==
                    shared(triangles[last], triangles[next])) {
                continue;
            }
            used[next] = 1;
            path.push_back(next);
            self(self);
            path.pop_back();
            used[next] = 0;
        }
    };
    for (int start = 0; start < count; ++start) {
        used[start] = 1;
        path = {start};
        grow(grow);
        used[start] = 0;
    }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------

int Branch::inner_degree(const Graph& g, Vertex x) const {
    int deg = 0;
    for (Vertex w : g.neighbors(x)) deg += std::binary_search(vertices.begin(), vertices.end(), w);
    return deg;
}

namespace {

// Kind of the branch piece `h` (vertex i of h is vertices[i]) attached on
// {u, v}; fills handle order, apex and orientation.
void recognize_branch(const Graph& h, const VertexList& vertices, int u, int v, Branch& out) {
    for (auto [first, second] : {std::pair{u, v}, std::pair{v, u}}) {
        const Vertex pinned[2] = {first, second};
        if (auto order = find_k_path_ordering(h, 2, pinned)) {
            out.kind = BranchKind::TwoPath;
            out.u = vertices[first];
            out.v = vertices[second];
            for (Vertex x : order->order) out.handle_order.push_back(vertices[x]);
            return;
        }
    }
    if (h.order() < 5) return;
    for (Vertex apex = 0; apex < h.order(); ++apex) {
        if (apex == u || apex == v || h.degree(apex) != 2) continue;
        const Vertex p = h.neighbors(apex)[0], q = h.neighbors(apex)[1];
        if (!h.adjacent(p, q)) continue;
        VertexList rest;
        VertexList index(h.order(), -1);
        for (Vertex x = 0; x < h.order(); ++x) {
            if (x == apex) continue;
            index[x] = static_cast<Vertex>(rest.size());
            rest.push_back(x);
        }
        const Graph handle = h.induced(rest);
        for (auto [first, second] : {std::pair{u, v}, std::pair{v, u}}) {
            Vertex third = kAbsent;
            if (p == first) third = q;
            if (q == first) third = p;
            if (third == kAbsent || third == second) continue;
            const Vertex pinned[3] = {index[first], index[second], index[third]};
            if (auto order = find_k_path_ordering(handle, 2, pinned)) {
                out.kind = BranchKind::Cane;
                out.u = vertices[first];
                out.v = vertices[second];
                for (Vertex x : order->order) out.handle_order.push_back(vertices[rest[x]]);
                out.apex = vertices[apex];
                return;
            }
        }
    }
}

}  // namespace

std::optional<std::vector<Branch>> branch_decomposition(const Graph& g,
                                                         const SpineCertificate& spine) {
    const int n = g.order();
    std::vector<int> component(n, -1);
    int pieces = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (component[s] >= 0 || spine.contains(s)) continue;
        VertexList stack{s};
        component[s] = pieces;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(x)) {
                if (component[w] < 0 && !spine.contains(w)) {
                    component[w] = pieces;
                    stack.push_back(w);
                }
            }
        }
        ++pieces;
    }

    std::vector<Branch> branches;
    for (int piece = 0; piece < pieces; ++piece) {
        VertexList inside, attach;
        for (Vertex x = 0; x < n; ++x) {
            if (component[x] == piece) inside.push_back(x);
        }
        for (Vertex x : spine.vertices) {
            bool touches = std::any_of(inside.begin(), inside.end(),
                                       [&](Vertex y) { return g.adjacent(x, y); });
            if (touches) attach.push_back(x);
        }
        if (attach.size() != 2) return std::nullopt;
        const int e = spine.edge_index(attach[0], attach[1]);
        if (e < 0) return std::nullopt;

        Branch branch;
        branch.spine_edge = e;
        branch.category = spine.edges[e].category;
        branch.vertices = inside;
        branch.vertices.insert(branch.vertices.end(), attach.begin(), attach.end());
        std::sort(branch.vertices.begin(), branch.vertices.end());
        branch.length = static_cast<int>(branch.vertices.size()) - 2;
        branch.u = spine.edges[e].u;
        branch.v = spine.edges[e].v;

        // The attachment edge lies in exactly one triangle of the branch.
        int common = 0;
        for (Vertex y : inside) common += g.adjacent(y, attach[0]) && g.adjacent(y, attach[1]);
        if (common != 1) return std::nullopt;

        const Graph h = g.induced(branch.vertices);
        auto local = [&](Vertex x) {
            return static_cast<int>(std::lower_bound(branch.vertices.begin(), branch.vertices.end(), x) -
                                    branch.vertices.begin());
        };
        recognize_branch(h, branch.vertices, local(branch.u), local(branch.v), branch);
        branches.push_back(std::move(branch));
    }
    std::sort(branches.begin(), branches.end(), [](const Branch& x, const Branch& y) {
        return std::tie(x.spine_edge, x.vertices) < std::tie(y.spine_edge, y.vertices);
    });
    return branches;
}

// ---------------------------------------------------------------------------

bool ConditionChecklist::all() const {
    return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

int ConditionChecklist::first_violation() const {
    for (int i = 0; i < kConditionCount; ++i) {
        if (!holds[i]) return i + 1;
    }
    return 0;
}

namespace {

// True when a branch on {near, far} fans out from `far`: a cane, or a
// 2-path of length > 1 whose degree-2 end is not `near`.
bool fans_from_far(const Graph& g, const Branch& br, Vertex near) {
    if (br.kind == BranchKind::Cane) return true;
    return br.length > 1 && br.inner_degree(g, near) != 2;
}

}  // namespace

ConditionChecklist check_f_conditions(const Graph& g, const SpineCertificate& spine,
                                      const std::vector<Branch>& branches,
                                      const ConditionParams& params) {
    ConditionChecklist out;
    auto& c = out.holds;
    const int edges = static_cast<int>(spine.edges.size());
    std::vector<std::vector<const Branch*>> on_edge(edges);
    for (const auto& br : branches) on_edge[br.spine_edge].push_back(&br);

    auto on = [&](Vertex x, Vertex y) -> std::vector<const Branch*> {
        if (x == kAbsent || y == kAbsent) return {};
        const int e = spine.edge_index(x, y);
        return e < 0 ? std::vector<const Branch*>{} : on_edge[e];
    };

    c[0] = true;

    c[1] = std::all_of(on_edge.begin(), on_edge.end(), [](const auto& list) { return list.size() <= 1; });

    c[2] = std::none_of(branches.begin(), branches.end(),
                        [](const Branch& br) { return br.category == EdgeCategory::Top; });

    c[3] = std::none_of(branches.begin(), branches.end(),
                        [](const Branch& br) { return br.kind == BranchKind::Neither; });

    // Side branches (vertical or oblique): at most one per a_i, a_i keeps
    // degree 2 inside it, and the end vertices a_1, a_k stay at degree 3.
    c[4] = true;
    std::vector<int> side_count(spine.k() + 1, 0);
    for (const auto& br : branches) {
        if (br.category != EdgeCategory::Vertical && br.category != EdgeCategory::Oblique) continue;
        const auto& e = spine.edges[br.spine_edge];
        if ((e.a_index == 1 || e.a_index == spine.k()) && g.degree(e.u) > 3) c[4] = false;
        if (++side_count[e.a_index] > 1) c[4] = false;
        if (br.inner_degree(g, e.u) != 2) c[4] = false;
    }
    // A long side branch at an end a-vertex shares its b-vertex with the
    // next bottom edge inward; a branch there may not fan out from the far end.
    const int first_b = spine.form == SpineForm::A ? 2 : 1;
    const std::array<std::array<int, 3>, 2> ends{{{1, first_b, first_b + 1}, {spine.k(), spine.k(), spine.k() - 1}}};
    for (const auto& [i, near, far] : ends) {
        const Vertex a = spine.a(i), b_near = spine.b(near), b_far = spine.b(far);
        bool long_side = false;
        for (const Branch* br : on(a, b_near)) long_side = long_side || br->length > 1;
        if (!long_side) continue;
        for (const Branch* br : on(b_near, b_far)) {
            if (fans_from_far(g, *br, b_near)) c[4] = false;
        }
    }

    c[5] = true;
    if (spine.form == SpineForm::B) {
        const Vertex am = spine.a(spine.m);
        for (const auto& br : branches) {
            const auto& e = spine.edges[br.spine_edge];
            if (e.u == am || e.v == am) c[5] = false;
        }
    }

    c[6] = true;
    c[8] = true;
    for (const auto& t : spine.triangles) {
        int total = 0, long_ones = 0;
        for (int e : t.edges) {
            total += static_cast<int>(on_edge[e].size());
            for (const Branch* br : on_edge[e]) long_ones += br->length > 1;
        }
        if (!t.top && total > 1) c[6] = false;
        if (t.top && long_ones > 1) c[8] = false;
    }

    c[7] = true;
    for (Vertex b : spine.b_row) {
        if (b != kAbsent && g.degree(b) > params.max_b_degree) c[7] = false;
    }

    // Beyond the stated rule, the outer end (b_{m-1} or b_{m+1}) keeps
    // degree 2 in the branch, and a branch there excludes a long vertical
    // branch at the outer column and a branch fanning out from the far end
    // of the next bottom edge.
    c[9] = true;
    if (spine.form == SpineForm::B) {
        const int m = spine.m;
        int long_ones = 0;
        for (int outer : {m - 1, m + 1}) {
            const Vertex b_outer = spine.b(outer);
            const auto here = on(spine.b(m), b_outer);
            for (const Branch* br : here) {
                if (br->kind != BranchKind::TwoPath || br->inner_degree(g, b_outer) != 2) c[9] = false;
                long_ones += br->length > 1;
            }
            if (here.empty()) continue;
            for (const Branch* br : on(spine.a(outer), b_outer)) {
                if (br->length > 1) c[9] = false;
            }
            const int next = outer < m ? outer - 1 : outer + 1;
            for (const Branch* br : on(b_outer, spine.b(next))) {
                if (fans_from_far(g, *br, b_outer)) c[9] = false;
            }
        }
        if (long_ones > 1) c[9] = false;
    }

    c[10] = true;
    auto has_cane = [&](Vertex x, Vertex y) {
        const auto list = on(x, y);
        return std::any_of(list.begin(), list.end(),
                           [](const Branch* br) { return br->kind == BranchKind::Cane; });
    };
    for (int j = 1; j <= spine.k(); ++j) {
        if (spine.b(j) == kAbsent) continue;
        if (has_cane(spine.b(j - 1), spine.b(j)) && has_cane(spine.b(j), spine.b(j + 1))) c[10] = false;
    }

    c[11] = std::all_of(branches.begin(), branches.end(), [](const Branch& br) {
        const bool side = br.category == EdgeCategory::Vertical || br.category == EdgeCategory::Oblique;
        return !side || br.kind == BranchKind::TwoPath;
    });
    return out;
}

// ---------------------------------------------------------------------------

std::pair<Vertex, Vertex> witness_basis(const FCertificate& cert) {
    if (!cert.member()) throw PreconditionError("witness requested for a non-member certificate");
    const Vertex first = cert.spine.a(1);
    const Vertex last = cert.spine.a(cert.spine.k());
    return {std::min(first, last), std::max(first, last)};
}

std::optional<SpineCertificate> label_spine(const Graph& g, const VertexList& sequence,
                                            SpineForm form, const std::string& rows) {
    if (rows.size() != sequence.size()) throw InputError("row string and sequence differ in length");
    return label_sequence(g, sequence, form, Pattern(rows.begin(), rows.end()));
}

ClassificationOutcome classify(const Graph& g, const ConditionParams& params) {
    require_two_tree(g);
    ClassificationOutcome outcome;
    auto candidates = find_spine_candidates(g);
    // Largest spine first; it is the natural reading of the graph.
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
        return x.vertices.size() > y.vertices.size();
    });
    for (auto& spine : candidates) {
        auto branches = branch_decomposition(g, spine);
        if (!branches) {
            outcome.diagnosis.push_back(CandidateDiagnosis{std::move(spine), false, 0, {}});
            continue;
        }
        auto conditions = check_f_conditions(g, spine, *branches, params);
        if (!conditions.all()) {
            outcome.diagnosis.push_back(
                CandidateDiagnosis{std::move(spine), true, conditions.first_violation(), conditions});
            continue;
        }
        FCertificate cert{std::move(spine), std::move(*branches), conditions, {}, false};
        cert.witness = witness_basis(cert);
        const Vertex pair[2] = {cert.witness.first, cert.witness.second};
        cert.witness_resolves = is_resolving_set(g, pair);
        outcome.member = true;
        outcome.certificate = std::move(cert);
        outcome.diagnosis.clear();
        return outcome;
    }
    return outcome;
}

}  // namespace mdim
