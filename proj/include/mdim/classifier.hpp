#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// ---------------------------------------------------------------------------
// Triangle tree of a 2-tree
// ---------------------------------------------------------------------------

using Triangle = std::array<Vertex, 3>;  // sorted

/// Triangles of a 2-tree joined into a tree along shared edges.
///
/// A new triangle is hung under the first-created triangle that holds its
/// base edge, following the construction order recovered from an
/// elimination order, so the result is a tree on n-2 nodes.
struct TriangleTree {
    std::vector<Triangle> triangles;
    std::vector<std::vector<int>> children;  // adjacency, both directions
    std::vector<Edge> links;                 // (i, j) node pairs, i < j

    int node_count() const { return static_cast<int>(triangles.size()); }
    int node_degree(int i) const { return static_cast<int>(children[i].size()); }
};

TriangleTree triangle_tree(const Graph& g);

// ---------------------------------------------------------------------------
// Spine (the backbone the branches hang on)
// ---------------------------------------------------------------------------

enum class SpineForm { A, B };
enum class EdgeCategory { Top, Bottom, Vertical, Oblique };

const char* to_string(SpineForm form);
const char* to_string(EdgeCategory category);

inline constexpr Vertex kAbsent = -1;

struct SpineEdge {
    Vertex u = 0;  // a-row end for vertical/oblique, lower index for top/bottom
    Vertex v = 0;
    EdgeCategory category = EdgeCategory::Top;
    int a_index = 0;  // 1-based; 0 for bottom edges
    int b_index = 0;  // 1-based; 0 for top edges
};

struct SpineTriangle {
    Triangle vertices;
    bool top = false;  // holds a_i a_{i+1}; otherwise holds b_j b_{j+1}
    int index = 0;     // i for a_i a_{i+1}, j for b_j b_{j+1}
    std::array<int, 3> edges{};  // indices into SpineCertificate::edges
};

/// Row labeling of a spine.
///
/// The a-row a_1..a_k is complete (k >= 2) and both ends of the spine are
/// a_1 and a_k. Form A is a 2-path with zigzag order a_1, b_2, a_2, ...,
/// b_k, a_k (vertical a_i b_i, oblique a_i b_{i+1}); a vertex in the b_1
/// position is treated as a branch on a_1 b_2. Form B glues two 2-paths on
/// a_m b_m with b-row b_1..b_k: obliques are a_i b_{i-1} for i <= m and
/// a_i b_{i+1} for i >= m, so a_m is the unique spine vertex of degree 5.
/// b_row has size k+2 and position j holds b_j or kAbsent.
struct SpineCertificate {
    SpineForm form = SpineForm::A;
    VertexList a_row;
    VertexList b_row;  // size k+2, position j holds b_j
    int m = 0;         // form B only
    VertexList vertices;  // sorted
    std::vector<SpineEdge> edges;
    std::vector<SpineTriangle> triangles;

    int k() const { return static_cast<int>(a_row.size()); }
    Vertex a(int i) const { return a_row[i - 1]; }
    Vertex b(int j) const {
        return j < 0 || j >= static_cast<int>(b_row.size()) ? kAbsent : b_row[j];
    }
    bool contains(Vertex v) const;
    /// Index into `edges` of the spine edge {x, y}, or -1.
    int edge_index(Vertex x, Vertex y) const;

    friend bool operator<(const SpineCertificate& x, const SpineCertificate& y);
    friend bool operator==(const SpineCertificate& x, const SpineCertificate& y);
};

/// Every labeled spine of g: each simple path of edge-sharing triangles is
/// read as a vertex sequence and matched against the form-A and form-B
/// templates under all row assignments. Sorted and deduplicated.
std::vector<SpineCertificate> find_spine_candidates(const Graph& g);

// ---------------------------------------------------------------------------
// Branches
// ---------------------------------------------------------------------------

enum class BranchKind { TwoPath, Cane, Neither };

const char* to_string(BranchKind kind);

/// A piece of the graph hanging off one spine edge {u, v}.
struct Branch {
    Vertex u = 0;  // x_1 of the handle when kind != Neither
    Vertex v = 0;  // x_2
    int spine_edge = 0;
    EdgeCategory category = EdgeCategory::Top;
    BranchKind kind = BranchKind::Neither;
    int length = 0;        // triangle count, |V(H)| - 2
    VertexList vertices;   // sorted, includes u and v
    VertexList handle_order;  // x_1..x_t (excludes the apex)
    std::optional<Vertex> apex;

    /// Degree of x inside the branch.
    int inner_degree(const Graph& g, Vertex x) const;
};

std::optional<std::vector<Branch>> branch_decomposition(const Graph& g,
                                                         const SpineCertificate& spine);

// ---------------------------------------------------------------------------
// Membership conditions
// ---------------------------------------------------------------------------

inline constexpr int kConditionCount = 12;

struct ConditionChecklist {
    std::array<bool, kConditionCount> holds{};

    bool all() const;
    /// 1-based number of the first failing condition, 0 if none fail.
    int first_violation() const;
    bool operator[](int number) const { return holds[number - 1]; }
};

/// Tunable thresholds; the defaults are the family's. Tests override them
/// to confirm the verification campaign catches a wrong classifier.
struct ConditionParams {
    int max_b_degree = 7;
};

/// Evaluates the twelve structural conditions. No distances are computed.
///
///  c1  spine is of form A or B (true by construction)
///  c2  at most one branch per spine edge
///  c3  no branch on a top edge a_i a_{i+1}
///  c4  every branch is a 2-path or a cane
///  c5  side (vertical or oblique) branches: at most one per a_i, a_i has
///      degree 2 in it, an end a_1/a_k keeps degree <= 3 in g, and a long
///      end side branch excludes a branch fanning out from the far end of
///      the neighbouring bottom edge
///  c6  form B: no branch contains a_m
///  c7  at most one branch on the edges of each spine triangle holding b_j b_{j+1}
///  c8  every b_j has degree <= 7 in g
///  c9  at most one branch of length > 1 on the edges of each spine triangle
///      holding a_i a_{i+1}
///  c10 form B: the (b_{m-1}, b_m)- and (b_m, b_{m+1})-branches are 2-paths
///      with b_{m-1} (b_{m+1}) of degree 2 in them, at most one of them is
///      longer than one, and each excludes a long vertical branch on the
///      outer column and a branch fanning out from the far end of the next
///      bottom edge
///  c11 no b_j has cane branches on both b_{j-1} b_j and b_j b_{j+1}
///  c12 every vertical and oblique branch is a 2-path
ConditionChecklist check_f_conditions(const Graph& g, const SpineCertificate& spine,
                                      const std::vector<Branch>& branches,
                                      const ConditionParams& params = {});

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct FCertificate {
    SpineCertificate spine;
    std::vector<Branch> branches;
    ConditionChecklist conditions;
    std::pair<Vertex, Vertex> witness{};
    bool witness_resolves = false;  // checked with graph distances

    bool member() const { return conditions.all(); }
};

struct CandidateDiagnosis {
    SpineCertificate spine;
    bool decomposed = false;  // false: some piece hangs off a non-edge
    int first_violation = 0;  // 1..12 when decomposed
    ConditionChecklist conditions;  // meaningful when decomposed
};

struct ClassificationOutcome {
    bool member = false;
    std::optional<FCertificate> certificate;   // member
    std::vector<CandidateDiagnosis> diagnosis;  // non-member; empty = no spine candidate
};

/// Decides membership of a 2-tree in the family; throws DomainError otherwise.
/// Candidates are tried largest spine first (certificate order among equal
/// sizes) and the first passing one is reported; the diagnosis follows the
/// same order.
ClassificationOutcome classify(const Graph& g, const ConditionParams& params = {});

/// {a_1, a_k} of a member certificate.
std::pair<Vertex, Vertex> witness_basis(const FCertificate& cert);

/// Labels `sequence` with row letters ('a'/'b', one per vertex) and returns
/// the certificate when the spine template matches g on those vertices.
std::optional<SpineCertificate> label_spine(const Graph& g, const VertexList& sequence,
                                            SpineForm form, const std::string& rows);

// ---------------------------------------------------------------------------
// Building members from a declarative description
// ---------------------------------------------------------------------------

struct BranchSpec {
    std::string edge;  // spine edge name, e.g. "b2-b3" or "a4-b5"
    BranchKind kind = BranchKind::TwoPath;
    int length = 1;
    std::string from;  // attachment vertex playing x_1; defaults to the first named
};

/// Form A: a_1..a_k over b_2..b_k (zigzag a_1, b_2, a_2, ..., b_k, a_k).
/// Form B: a_1..a_k over b_1..b_k glued at column m.
/// Vertex ids: a_i = i-1, then the b-row in index order, then branch
/// vertices in spec order.
struct FamilySpec {
    SpineForm form = SpineForm::A;
    int k = 2;
    int m = 0;
    std::vector<BranchSpec> branches;
};

struct BuiltMember {
    Graph graph;
    SpineCertificate spine;
};

/// Builds the graph a spec describes. Throws InputError on unknown edges or
/// impossible shapes; membership conditions are not checked here.
BuiltMember build_family_member(const FamilySpec& spec);

/// Parses the text form:
///   spine A <k>            |  spine B <k> <m>
///   branch <edge> two-path <length> [from <vertex>]
///   branch <edge> cane <length> [from <vertex>]
/// '#' starts a comment line.
FamilySpec parse_family_spec(const std::string& text);

}  // namespace mdim
