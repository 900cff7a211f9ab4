#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdim/classifier.hpp"
#include "mdim/enumerate.hpp"
#include "mdim/errors.hpp"
#include "mdim/families.hpp"
#include "mdim/solver.hpp"

namespace mdim::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised when a campaign or an inline witness check fails.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int thread_count(int parallel) {
    if (parallel > 0) return parallel;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string list_text(const VertexList& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

Json input_json(const std::string& file, const Graph& g) {
    return Json{{"file", file}, {"n", g.order()}, {"m", g.size()}};
}

Json report(const std::string& command, Json input, Json result, Json diagnostics) {
    Json j;
    j["command"] = command;
    j["input"] = std::move(input);
    j["result"] = std::move(result);
    j["diagnostics"] = std::move(diagnostics);
    return j;
}

// ---------------------------------------------------------------------------
// dim

int cmd_dim(const std::string& file, bool json, bool table, int threads, std::ostream& out) {
    const Graph g = read_edge_list(file);
    if (g.order() < 2 || !g.connected()) throw DomainError("graph must be connected with n >= 2");
    const auto r = metric_dimension(g, SolverOptions{threads});
    const auto rep = metric_representation(g, r.basis);
    if (json) {
        Json result{{"dimension", r.dimension}, {"basis", r.basis}};
        if (table) result["representations"] = rep.vectors;
        out << report("dim", input_json(file, g), std::move(result),
                      Json{{"bases_examined", r.bases_examined}})
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "dim=" << r.dimension << " basis=" << list_text(r.basis) << '\n';
    if (table) {
        out << "vertex representation\n";
        for (Vertex v = 0; v < g.order(); ++v) out << v << ' ' << list_text(rep.vectors[v]) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// classify

std::string edge_name(const SpineEdge& e) {
    const auto a = [](int i) { return "a" + std::to_string(i); };
    const auto b = [](int j) { return "b" + std::to_string(j); };
    switch (e.category) {
        case EdgeCategory::Top: return a(e.a_index) + "-" + a(e.a_index + 1);
        case EdgeCategory::Bottom: return b(e.b_index) + "-" + b(e.b_index + 1);
        default: return a(e.a_index) + "-" + b(e.b_index);
    }
}

Json spine_json(const SpineCertificate& s) {
    Json b_row = Json::object();
    for (int j = 0; j < static_cast<int>(s.b_row.size()); ++j) {
        if (s.b(j) != kAbsent) b_row["b" + std::to_string(j)] = s.b(j);
    }
    Json j{{"form", to_string(s.form)}, {"k", s.k()}, {"a_row", s.a_row}, {"b_row", std::move(b_row)}};
    j["m"] = s.form == SpineForm::B ? Json(s.m) : Json(nullptr);
    return j;
}

Json conditions_json(const ConditionChecklist& c) {
    Json j = Json::object();
    for (int i = 1; i <= kConditionCount; ++i) j["c" + std::to_string(i)] = c[i];
    return j;
}

std::string conditions_text(const ConditionChecklist& c) {
    std::string s;
    for (int i = 1; i <= kConditionCount; ++i) {
        s += (i > 1 ? " " : "") + ("c" + std::to_string(i)) + "=" + (c[i] ? "true" : "false");
    }
    return s;
}

std::string spine_text(const SpineCertificate& s) {
    std::string text = "form=" + std::string(to_string(s.form)) + " k=" + std::to_string(s.k());
    if (s.form == SpineForm::B) text += " m=" + std::to_string(s.m);
    VertexList b;
    for (Vertex v : s.b_row) {
        if (v != kAbsent) b.push_back(v);
    }
    return text + " a=" + list_text(s.a_row) + " b=" + list_text(b);
}

// The candidate with the most spine vertices, earliest first: the natural
// reading of the graph, used for the top-level checklist.
const CandidateDiagnosis* headline(const std::vector<CandidateDiagnosis>& diagnosis) {
    const CandidateDiagnosis* best = nullptr;
    for (const auto& d : diagnosis) {
        if (!d.decomposed) continue;
        if (!best || d.spine.vertices.size() > best->spine.vertices.size()) best = &d;
    }
    return best;
}

void write_dot(std::ostream& out, const Graph& g, const SpineCertificate* spine) {
    out << "graph G {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (spine) {
            for (int i = 1; i <= spine->k(); ++i) {
                if (spine->a(i) == v) out << " [label=\"a" << i << "\", pos=\"" << 2 * i << ",1!\"]";
            }
            for (int j = 0; j < static_cast<int>(spine->b_row.size()); ++j) {
                if (spine->b(j) == v) {
                    // Form A leans right of its a-vertex, form B left of m.
                    const int x = spine->form == SpineForm::A || j > spine->m ? 2 * j - 1 : 2 * j + 1;
                    out << " [label=\"b" << j << "\", pos=\"" << x << ",0!\"]";
                }
            }
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

const char* shape_of(const Graph& g) {
    if (find_k_path_ordering(g, 2)) return "two-path";
    if (find_cane_decomposition(g)) return "cane";
    return "other";
}

int cmd_classify(const std::string& file, bool json, bool dot, const ConditionParams& params,
                 std::ostream& out) {
    const Graph g = read_edge_list(file);
    const auto outcome = classify(g, params);
    const auto& cert = outcome.certificate;

    if (dot) {
        write_dot(out, g, cert ? &cert->spine : nullptr);
        return cert && !cert->witness_resolves ? kMismatch : kOk;
    }

    Json result;
    if (cert) {
        const Vertex w[2] = {cert->witness.first, cert->witness.second};
        const auto rep = metric_representation(g, w);
        Json branches = Json::array();
        for (const auto& br : cert->branches) {
            Json b{{"attachment", {br.u, br.v}},
                   {"edge", edge_name(cert->spine.edges[br.spine_edge])},
                   {"category", to_string(br.category)},
                   {"kind", to_string(br.kind)},
                   {"length", br.length}};
            b["apex"] = br.apex ? Json(*br.apex) : Json(nullptr);
            branches.push_back(std::move(b));
        }
        result["verdict"] = "member";
        result["shape"] = shape_of(g);
        result["spine"] = spine_json(cert->spine);
        result["branches"] = std::move(branches);
        result["conditions"] = conditions_json(cert->conditions);
        result["witness"] = {cert->witness.first, cert->witness.second};
        result["witness_resolves"] = cert->witness_resolves;
        result["representations"] = rep.vectors;
        if (json) {
            out << report("classify", input_json(file, g), std::move(result), Json::object()).dump(2) << '\n';
        } else {
            out << "member shape=" << shape_of(g) << " " << spine_text(cert->spine) << " witness=["
                << cert->witness.first << "," << cert->witness.second << "]\n";
            for (const auto& b : result["branches"]) {
                out << "branch " << b["edge"].get<std::string>() << " "
                    << b["kind"].get<std::string>() << " length=" << b["length"].get<int>() << '\n';
            }
            out << conditions_text(cert->conditions) << '\n';
            for (Vertex v = 0; v < g.order(); ++v) out << "r(" << v << ")=" << list_text(rep.vectors[v]) << '\n';
            out << "witness " << (cert->witness_resolves ? "resolves" : "DOES NOT RESOLVE") << '\n';
        }
        if (!cert->witness_resolves) throw MismatchError("member witness fails to resolve the graph");
        return kOk;
    }

    result["verdict"] = "non-member";
    const auto* best = headline(outcome.diagnosis);
    result["conditions"] = best ? conditions_json(best->conditions) : Json(nullptr);
    Json candidates = Json::array();
    for (const auto& d : outcome.diagnosis) {
        Json c{{"spine", spine_json(d.spine)}, {"decomposed", d.decomposed}};
        c["first_violation"] = d.decomposed ? Json("c" + std::to_string(d.first_violation)) : Json(nullptr);
        c["conditions"] = d.decomposed ? conditions_json(d.conditions) : Json(nullptr);
        candidates.push_back(std::move(c));
    }
    result["candidates"] = std::move(candidates);
    if (json) {
        out << report("classify", input_json(file, g), std::move(result),
                      Json{{"candidates_examined", outcome.diagnosis.size()}})
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "non-member\n";
    if (outcome.diagnosis.empty()) out << "no spine candidate\n";
    if (best) out << conditions_text(best->conditions) << '\n';
    for (const auto& d : outcome.diagnosis) {
        out << "candidate " << spine_text(d.spine) << ": ";
        if (d.decomposed) {
            out << "violates c" << d.first_violation << '\n';
        } else {
            out << "pieces hang off a non-edge\n";
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen_family(const std::string& file, std::ostream& out, std::ostream& err) {
    std::ifstream in(file);
    if (!in) {
        err << "error: cannot read " << file << '\n';
        return kUsage;
    }
    std::stringstream text;
    text << in.rdbuf();
    try {
        write_edge_list(out, build_family_member(parse_family_spec(text.str())).graph);
    } catch (const InputError& e) {
        err << "error: invalid family description: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(int n, const std::string& cache, bool json, int threads, std::ostream& out) {
    if (n < 3) throw InputError("--n must be >= 3");
    if (n > kMaxCanonicalOrder) throw InputError("--n must be <= " + std::to_string(kMaxCanonicalOrder));
    const bool cached = !cache.empty();
    if (cached) {
        std::error_code ec;
        std::filesystem::create_directories(cache, ec);
        if (ec || !std::filesystem::is_directory(cache)) throw InputError("cannot create cache dir " + cache);
    }
    std::vector<CanonicalCode> codes;
    Json counts = Json::object();
    for (int order = 3; order <= n; ++order) {
        auto warm = cached ? read_code_cache(cache, order) : std::vector<CanonicalCode>{};
        if (!warm.empty()) {
            codes = std::move(warm);
        } else if (order == 3) {
            codes = enumerate_2tree_codes(3);
        } else {
            codes = extend_2tree_codes(codes, threads);
        }
        if (cached) write_code_cache(cache, order, codes);
        counts[std::to_string(order)] = codes.size();
        if (!json) out << "n=" << order << " count=" << codes.size() << '\n';
    }
    if (json) {
        Json input{{"n", n}};
        input["cache"] = cached ? Json(cache) : Json(nullptr);
        out << report("enumerate", std::move(input), Json{{"counts", std::move(counts)}}, Json::object()).dump(2)
            << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

CampaignReport verify_k_paths(int n_max) {
    CampaignReport r;
    r.name = "k-path-dimension";
    r.n_min = 2;
    r.n_max = n_max;
    for (int k = 1; k <= 4; ++k) {
        for (int n = k + 1; n <= n_max; ++n) {
            const auto p = make_k_path(n, k);
            const int d = metric_dimension(p.graph).dimension;
            ++r.counts[n];
            if (d != k) {
                r.mismatches.push_back(Mismatch{canonical_code(p.graph).hex(), n, "k=" + std::to_string(k), d,
                                                "k-path dimension differs from k"});
            }
        }
    }
    return r;
}

Json campaign_json(const CampaignReport& r) {
    Json counts = Json::object();
    int total = 0;
    for (const auto& [n, c] : r.counts) {
        counts[std::to_string(n)] = c;
        total += c;
    }
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches) {
        mismatches.push_back(Json{{"code", m.code}, {"n", m.n}, {"verdict", m.verdict},
                                  {"dimension", m.dimension}, {"detail", m.detail}});
    }
    return Json{{"name", r.name}, {"passed", r.passed()}, {"n_min", r.n_min}, {"n_max", r.n_max},
                {"instances", total}, {"counts", std::move(counts)}, {"mismatches", std::move(mismatches)}};
}

int cmd_verify(int n_max, bool json, int threads, const ConditionParams& params, std::ostream& out,
               std::ostream& err) {
    if (n_max < 3) throw InputError("--n-max must be >= 3");
    if (n_max > kMaxCanonicalOrder) throw InputError("--n-max must be <= " + std::to_string(kMaxCanonicalOrder));
    const CampaignOptions options{threads, params};
    std::vector<CampaignReport> reports;
    reports.push_back(verify_k_paths(n_max));
    reports.push_back(verify_equivalence(n_max, options));
    reports.push_back(verify_adjacent_basis(n_max, options));
    reports.push_back(verify_basis_properties(n_max, options));
    reports.push_back(verify_branch_lemma(random_branch_instances(200, 12345)));

    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed();
    if (json) {
        Json campaigns = Json::array();
        for (const auto& r : reports) campaigns.push_back(campaign_json(r));
        out << report("verify", Json{{"n_max", n_max}},
                      Json{{"passed", passed}, {"campaigns", std::move(campaigns)}}, Json::object())
                   .dump(2)
            << '\n';
    } else {
        for (const auto& r : reports) {
            int total = 0;
            for (const auto& [n, c] : r.counts) total += c;
            out << r.name << " instances=" << total << " mismatches=" << r.mismatches.size() << ' '
                << (r.passed() ? "PASS" : "FAIL") << '\n';
            for (const auto& m : r.mismatches) {
                out << "  mismatch n=" << m.n << " code=" << m.code << " verdict=" << m.verdict
                    << " dim=" << m.dimension << " " << m.detail << '\n';
            }
        }
        out << (passed ? "all campaigns passed" : "verification FAILED") << '\n';
    }
    // Timing goes to stderr so stdout stays identical across runs.
    for (const auto& r : reports) err << r.name << ": " << r.elapsed.count() << " ms\n";
    return passed ? kOk : kMismatch;
}

}  // namespace

// ---------------------------------------------------------------------------

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string& into) {
        while (std::getline(in, into)) {
            ++line_no;
            const auto start = into.find_first_not_of(" \t\r");
            if (start == std::string::npos || into[start] == '#') continue;
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string& why) {
        throw InputError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (!next_line(line)) throw InputError("edge list is empty");
    long long n = 0, m = 0;
    {
        std::istringstream words(line);
        std::string extra;
        if (!(words >> n >> m) || (words >> extra)) fail("expected header 'n m'");
        if (n < 1 || m < 0) fail("header values out of range");
    }
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (next_line(line)) {
        std::istringstream words(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(words >> u >> v) || (words >> extra)) fail("expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex id out of range");
        if (u == v) fail("self-loop");
        const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert(e).second) fail("duplicate edge");
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw InputError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metric dimension of graphs and the 2-trees of dimension two", "mdim"};
    app.require_subcommand(1);
    app.fallthrough();
    int parallel = 1;
    app.add_option("--parallel", parallel, "worker threads (0 = auto)")->check(CLI::NonNegativeNumber);

    std::string file;
    bool json = false, table = false, dot = false;
    int c8 = ConditionParams{}.max_b_degree;

    auto* dim = app.add_subcommand("dim", "exact metric dimension and least basis");
    dim->add_option("file", file, "edge-list file")->required();
    dim->add_flag("--json", json);
    dim->add_flag("--table", table, "print every vertex representation");

    auto* cls = app.add_subcommand("classify", "decide membership of a 2-tree in the dimension-two family");
    cls->add_option("file", file, "edge-list file")->required();
    cls->add_flag("--json", json);
    cls->add_flag("--dot", dot, "emit DOT with the spine laid out in two rows");
    cls->add_option("--c8-threshold", c8, "max degree of a b-vertex (fault injection)");
    cls->get_option("--json")->excludes(cls->get_option("--dot"));

    auto* gen = app.add_subcommand("gen", "print a generated graph as an edge list");
    gen->require_subcommand(1);
    int n = 0, k = 0, t = 0;
    auto* kpath = gen->add_subcommand("kpath", "k-path on n vertices");
    kpath->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    kpath->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    auto* cane = gen->add_subcommand("cane", "cane with a t-vertex handle");
    cane->add_option("--t", t)->required();
    auto* family = gen->add_subcommand("family-f", "family member from a spine and branch description file");
    family->add_option("file", file, "description file")->required();

    auto* en = app.add_subcommand("enumerate", "non-isomorphic 2-trees up to order n");
    en->add_option("--n", n)->required();
    std::string cache;
    en->add_option("--cache", cache, "directory for 2trees-<n>.codes files");
    en->add_flag("--json", json);

    auto* ver = app.add_subcommand("verify", "run every verification campaign");
    int n_max = 0;
    ver->add_option("--n-max", n_max)->required();
    ver->add_flag("--json", json);
    ver->add_option("--c8-threshold", c8, "max degree of a b-vertex (fault injection)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
            err << "run '" << sub->get_name() << " --help' for usage\n";
        }
        return kUsage;
    }

    const int threads = thread_count(parallel);
    const ConditionParams params{c8};
    try {
        if (dim->parsed()) return cmd_dim(file, json, table, threads, out);
        if (cls->parsed()) return cmd_classify(file, json, dot, params, out);
        if (kpath->parsed()) {
            if (k >= n) {
                err << "error: a k-path needs n > k\n";
                return kUsage;
            }
            write_edge_list(out, make_k_path(n, k).graph);
            return kOk;
        }
        if (cane->parsed()) {
            if (t < 4) {
                err << "error: a cane needs t >= 4\n";
                return kUsage;
            }
            write_edge_list(out, make_cane(t).graph);
            return kOk;
        }
        if (family->parsed()) return cmd_gen_family(file, out, err);
        if (en->parsed()) return cmd_enumerate(n, cache, json, threads, out);
        if (ver->parsed()) return cmd_verify(n_max, json, threads, params, out, err);
    } catch (const MismatchError& e) {
        err << "mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kUsage;
}

}  // namespace mdim::cli
