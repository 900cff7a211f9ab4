#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mdim/classifier.hpp"
#include "mdim/graph.hpp"

namespace mdim {

inline constexpr int kMaxCanonicalOrder = 16;

/// Permutation-invariant adjacency code.
///
/// Bit (i, j), i < j in canonical order, sits at i*(2n-i-1)/2 + (j-i-1) and
/// bits are packed most-significant first, so comparing `bytes`
/// lexicographically compares the bit strings.
struct CanonicalCode {
    int n = 0;
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    static CanonicalCode from_hex(int n, const std::string& hex);
    Graph graph() const;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Least code over all vertex orderings, searched by individualization and
/// degree refinement. Throws CapacityError above kMaxCanonicalOrder.
CanonicalCode canonical_code(const Graph& g);

bool are_isomorphic(const Graph& g1, const Graph& g2);

/// One representative per isomorphism class of 2-trees of order n, in
/// ascending code order. Children of distinct parents are canonicalized on
/// `threads` workers; the result does not depend on it.
std::vector<CanonicalCode> enumerate_2tree_codes(int n, int threads = 1);
/// Next order from the full list of one order (a warm cache, say).
std::vector<CanonicalCode> extend_2tree_codes(const std::vector<CanonicalCode>& parents,
                                              int threads = 1);
std::vector<Graph> enumerate_2trees(int n, int threads = 1);

// Cache files "2trees-<n>.codes": sorted hex codes, one per line.
std::filesystem::path cache_file(const std::filesystem::path& dir, int n);
void write_code_cache(const std::filesystem::path& dir, int n,
                      const std::vector<CanonicalCode>& codes);
/// Empty when the file is missing.
std::vector<CanonicalCode> read_code_cache(const std::filesystem::path& dir, int n);

// ---------------------------------------------------------------------------
// Verification campaigns
// ---------------------------------------------------------------------------

struct Mismatch {
    std::string code;        // hex canonical code of the offending graph
    int n = 0;
    std::string verdict;     // classifier verdict or recognizer result
    int dimension = 0;       // solver answer, 0 when not computed
    std::string detail;
};

struct CampaignReport {
    std::string name;
    int n_min = 0;
    int n_max = 0;
    std::map<int, int> counts;  // instances examined per order
    std::vector<Mismatch> mismatches;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return mismatches.empty(); }
};

struct CampaignOptions {
    int threads = 1;
    ConditionParams conditions;
};

/// Classifier verdict against (metric dimension == 2) on every 2-tree of
/// order 3..n_max. A member whose witness fails to resolve is a mismatch.
CampaignReport verify_equivalence(int n_max, const CampaignOptions& options = {});

/// Every 2-tree with an adjacent basis pair must be a 2-path or a cane.
CampaignReport verify_adjacent_basis(int n_max, const CampaignOptions& options = {});

/// Every basis of every 2-dimensional 2-tree passes basis_property_report.
CampaignReport verify_basis_properties(int n_max, const CampaignOptions& options = {});

/// A graph with a designated branch H on {u, v} and a basis {a, b} meeting
/// H only inside {u, v}.
struct BranchInstance {
    Graph graph;
    VertexList branch;  // sorted, includes u and v
    Vertex u = 0;
    Vertex v = 0;
    Vertex a = 0;
    Vertex b = 0;
};

/// {u, v} must resolve V(H) using H's own distances.
CampaignReport verify_branch_lemma(const std::vector<BranchInstance>& instances);

/// `count` random family members (fixed seed) expanded to one instance per
/// branch, with the member's witness as the basis.
std::vector<BranchInstance> random_branch_instances(int count, std::uint32_t seed);

}  // namespace mdim
