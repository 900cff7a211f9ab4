#include "mdim/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "mdim/errors.hpp"
#include "mdim/families.hpp"
#include "mdim/solver.hpp"

namespace mdim {

// ---------------------------------------------------------------------------
// Canonical codes
// ---------------------------------------------------------------------------

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto byte : bytes) {
        out += digits[byte >> 4];
        out += digits[byte & 0xf];
    }
    return out;
}

CanonicalCode CanonicalCode::from_hex(int n, const std::string& hex) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (hex.size() != 2 * ((bits + 7) / 8)) throw InputError("code '" + hex + "' has the wrong length");
    CanonicalCode code{n, {}};
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        code.bytes.push_back(static_cast<std::uint8_t>(std::stoul(hex.substr(i, 2), nullptr, 16)));
    }
    return code;
}

Graph CanonicalCode::graph() const {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (bytes[bit / 8] & (0x80 >> (bit % 8))) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

namespace {

using Cells = std::vector<VertexList>;

// Splits cells by neighbor counts into every cell until stable. Split cells
// keep their position and their parts are ordered by count signature, so
// the result only depends on the graph up to isomorphism.
Cells refine(const Graph& g, Cells cells) {
    const int n = g.order();
    while (true) {
        std::vector<int> cell_of(n);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
        }
        Cells next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, Vertex>> keyed;
            for (Vertex v : cell) {
                std::vector<int> counts(cells.size(), 0);
                for (Vertex w : g.neighbors(v)) ++counts[cell_of[w]];
                keyed.emplace_back(std::move(counts), v);
            }
            std::sort(keyed.begin(), keyed.end());
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
                next.back().push_back(keyed[i].second);
            }
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

std::vector<std::uint8_t> code_for(const Graph& g, const VertexList& order) {
    const int n = g.order();
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<std::uint8_t> bytes((bits + 7) / 8, 0);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (g.adjacent(order[i], order[j])) bytes[bit / 8] |= static_cast<std::uint8_t>(0x80 >> (bit % 8));
        }
    }
    return bytes;
}

void search_min(const Graph& g, const Cells& cells, std::vector<std::uint8_t>& best, bool& have) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const VertexList& c) { return c.size() > 1; });
    if (target == cells.end()) {
        VertexList order;
        for (const auto& c : cells) order.push_back(c[0]);
        auto bytes = code_for(g, order);
        if (!have || bytes < best) {
            best = std::move(bytes);
            have = true;
        }
        return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    for (Vertex v : *target) {
        Cells split(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
        split.push_back({v});
        VertexList rest;
        for (Vertex w : *target) {
            if (w != v) rest.push_back(w);
        }
        split.push_back(std::move(rest));
        split.insert(split.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
        search_min(g, refine(g, std::move(split)), best, have);
    }
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw CapacityError("canonical codes support n <= " + std::to_string(kMaxCanonicalOrder));
    }
    CanonicalCode code{n, {}};
    if (n == 0) return code;
    // Initial cells by degree, ascending.
    std::map<int, VertexList> by_degree;
    for (Vertex v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
    Cells cells;
    for (auto& [deg, vs] : by_degree) cells.push_back(std::move(vs));
    bool have = false;
    search_min(g, refine(g, std::move(cells)), code.bytes, have);
    return code;
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
    return canonical_code(g1) == canonical_code(g2);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<CanonicalCode> extend_2tree_codes(const std::vector<CanonicalCode>& parents,
                                              int threads) {
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::vector<CanonicalCode>> produced(parents.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < parents.size(); i = next++) {
            const Graph parent = parents[i].graph();
            const int order = parent.order() + 1;
            std::set<CanonicalCode> local;
            for (auto [u, v] : parent.edges()) {
                std::vector<Edge> edges = parent.edges();
                edges.emplace_back(u, order - 1);
                edges.emplace_back(v, order - 1);
                local.insert(canonical_code(Graph(order, edges)));
            }
            produced[i].assign(local.begin(), local.end());
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::set<CanonicalCode> merged;
    for (auto& list : produced) merged.insert(list.begin(), list.end());
    return {merged.begin(), merged.end()};
}

std::vector<CanonicalCode> enumerate_2tree_codes(int n, int threads) {
    if (n < 3) throw InputError("2-trees have at least three vertices");
    const std::array<Edge, 3> triangle{Edge{0, 1}, Edge{0, 2}, Edge{1, 2}};
    std::vector<CanonicalCode> level{canonical_code(Graph(3, triangle))};
    for (int order = 4; order <= n; ++order) level = extend_2tree_codes(level, threads);
    return level;
}

std::vector<Graph> enumerate_2trees(int n, int threads) {
    std::vector<Graph> out;
    for (const auto& code : enumerate_2tree_codes(n, threads)) out.push_back(code.graph());
    return out;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
    return dir / ("2trees-" + std::to_string(n) + ".codes");
}

void write_code_cache(const std::filesystem::path& dir, int n,
                      const std::vector<CanonicalCode>& codes) {
    std::vector<std::string> lines;
    for (const auto& c : codes) lines.push_back(c.hex());
    std::sort(lines.begin(), lines.end());
    std::ofstream out(cache_file(dir, n), std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + cache_file(dir, n).string());
    for (const auto& line : lines) out << line << '\n';
    if (!out) throw InputError("failed writing " + cache_file(dir, n).string());
}

std::vector<CanonicalCode> read_code_cache(const std::filesystem::path& dir, int n) {
    std::ifstream in(cache_file(dir, n));
    std::vector<CanonicalCode> out;
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(CanonicalCode::from_hex(n, line));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

// Runs `check` on every 2-tree of order 3..n_max across `threads` workers
// and collects mismatches in enumeration order.
template <typename Check>
CampaignReport run_over_2trees(const std::string& name, int n_max, int threads, Check check) {
    if (n_max < 3) throw InputError("campaigns need n_max >= 3");
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto start = Clock::now();
    CampaignReport report;
    report.name = name;
    report.n_min = 3;
    report.n_max = n_max;
    for (int n = 3; n <= n_max; ++n) {
        const auto codes = enumerate_2tree_codes(n, threads);
        std::vector<std::vector<Mismatch>> found(codes.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < codes.size(); i = next++) {
                check(codes[i], codes[i].graph(), found[i]);
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        report.counts[n] = static_cast<int>(codes.size());
        for (auto& list : found) {
            for (auto& m : list) report.mismatches.push_back(std::move(m));
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
}

}  // namespace

CampaignReport verify_equivalence(int n_max, const CampaignOptions& options) {
    return run_over_2trees("equivalence", n_max, options.threads,
                           [&](const CanonicalCode& code, const Graph& g, std::vector<Mismatch>& out) {
        const auto outcome = classify(g, options.conditions);
        const int dim = metric_dimension(g).dimension;
        const std::string verdict = outcome.member ? "member" : "non-member";
        if (outcome.member != (dim == 2)) {
            out.push_back({code.hex(), g.order(), verdict, dim, "verdict disagrees with solver"});
        }
        if (outcome.member && !outcome.certificate->witness_resolves) {
            out.push_back({code.hex(), g.order(), verdict, dim, "witness does not resolve"});
        }
    });
}

CampaignReport verify_adjacent_basis(int n_max, const CampaignOptions& options) {
    return run_over_2trees("adjacent-basis", n_max, options.threads,
                           [](const CanonicalCode& code, const Graph& g, std::vector<Mismatch>& out) {
        const auto result = metric_dimension(g);
        if (result.dimension != 2) return;
        const auto bases = all_bases(g, 2);
        const bool adjacent = std::any_of(bases.begin(), bases.end(),
                                          [&](const VertexList& s) { return g.adjacent(s[0], s[1]); });
        if (!adjacent) return;
        const bool two_path = find_k_path_ordering(g, 2).has_value();
        const bool cane = find_cane_decomposition(g).has_value();
        if (!two_path && !cane) {
            out.push_back({code.hex(), g.order(), "neither 2-path nor cane", 2,
                           "adjacent basis on a graph outside both families"});
        }
    });
}

CampaignReport verify_basis_properties(int n_max, const CampaignOptions& options) {
    return run_over_2trees("basis-properties", n_max, options.threads,
                           [](const CanonicalCode& code, const Graph& g, std::vector<Mismatch>& out) {
        if (metric_dimension(g).dimension != 2) return;
        for (const auto& basis : all_bases(g, 2)) {
            const auto report = basis_property_report(g, {basis[0], basis[1]});
            if (!report.all_properties_hold) {
                out.push_back({code.hex(), g.order(), "property violated", 2,
                               "basis {" + std::to_string(basis[0]) + "," + std::to_string(basis[1]) + "}"});
            }
        }
    });
}

CampaignReport verify_branch_lemma(const std::vector<BranchInstance>& instances) {
    const auto start = Clock::now();
    CampaignReport report;
    report.name = "branch-lemma";
    for (const auto& inst : instances) {
        const int n = inst.graph.order();
        auto inside = [&](Vertex x) {
            return std::binary_search(inst.branch.begin(), inst.branch.end(), x) && x != inst.u && x != inst.v;
        };
        if (inside(inst.a) || inside(inst.b)) continue;  // hypothesis not met
        report.n_min = report.n_min == 0 ? n : std::min(report.n_min, n);
        report.n_max = std::max(report.n_max, n);
        ++report.counts[n];
        auto fail = [&](const std::string& why) {
            std::string code = n <= kMaxCanonicalOrder ? canonical_code(inst.graph).hex() : std::string{};
            report.mismatches.push_back({code, n, "branch not resolved", 0, why});
        };
        const Vertex basis[2] = {inst.a, inst.b};
        if (!is_resolving_set(inst.graph, basis)) {
            fail("designated basis does not resolve the host graph");
            continue;
        }
        // Distances inside H only.
        const Graph h = inst.graph.induced(inst.branch);
        auto local = [&](Vertex x) {
            return static_cast<Vertex>(std::lower_bound(inst.branch.begin(), inst.branch.end(), x) -
                                       inst.branch.begin());
        };
        const Vertex pair[2] = {local(inst.u), local(inst.v)};
        VertexList all(h.order());
        for (Vertex x = 0; x < h.order(); ++x) all[x] = x;
        if (!resolves(h, pair, all)) {
            fail("{u,v} = {" + std::to_string(inst.u) + "," + std::to_string(inst.v) +
                 "} does not resolve its branch");
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
}

std::vector<BranchInstance> random_branch_instances(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::vector<BranchInstance> out;
    int members = 0;
    while (members < count) {
        FamilySpec spec;
        spec.form = pick(0, 1) ? SpineForm::B : SpineForm::A;
        spec.k = pick(spec.form == SpineForm::B ? 3 : 2, 7);
        if (spec.form == SpineForm::B) spec.m = pick(2, spec.k - 1);

        // Candidate attachment edges, drawn without regard to the
        // conditions; invalid draws are discarded below.
        std::vector<std::pair<std::string, std::string>> edges;  // name, a-end
        auto name = [](char row, int i) { return std::string(1, row) + std::to_string(i); };
        const int first_b = spec.form == SpineForm::A ? 2 : 1;
        for (int j = first_b; j < spec.k; ++j) edges.emplace_back(name('b', j) + "-" + name('b', j + 1), "");
        for (int i = first_b; i <= spec.k; ++i) edges.emplace_back(name('a', i) + "-" + name('b', i), name('a', i));
        for (int i = 1; i <= spec.k; ++i) {
            const bool left = spec.form == SpineForm::B && i <= spec.m;
            const bool right = spec.form == SpineForm::A || i >= spec.m;
            if (left && i >= 2) edges.emplace_back(name('a', i) + "-" + name('b', i - 1), name('a', i));
            if (right && i < spec.k) edges.emplace_back(name('a', i) + "-" + name('b', i + 1), name('a', i));
        }
        std::shuffle(edges.begin(), edges.end(), rng);
        const int wanted = pick(1, std::min<int>(3, static_cast<int>(edges.size())));
        for (int t = 0; t < wanted; ++t) {
            BranchSpec br;
            br.edge = edges[t].first;
            br.from = edges[t].second;
            const bool bottom = br.edge[0] == 'b';
            br.kind = bottom && pick(0, 2) == 0 ? BranchKind::Cane : BranchKind::TwoPath;
            br.length = br.kind == BranchKind::Cane ? pick(3, 5) : pick(1, 4);
            if (bottom && br.from.empty()) br.from = pick(0, 1) ? br.edge.substr(0, br.edge.find('-'))
                                                                 : br.edge.substr(br.edge.find('-') + 1);
            spec.branches.push_back(br);
        }

        const BuiltMember built = build_family_member(spec);
        auto branches = branch_decomposition(built.graph, built.spine);
        if (!branches || !check_f_conditions(built.graph, built.spine, *branches).all()) continue;

        ++members;
        const Vertex a = built.spine.a(1);
        const Vertex b = built.spine.a(built.spine.k());
        for (const auto& br : *branches) {
            out.push_back({built.graph, br.vertices, br.u, br.v, a, b});
        }
    }
    return out;
}

}  // namespace mdim
