#include "coxindex/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <array>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace coxindex {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

// "# key: value" on a line of its own carries the document name or a metadata entry.
std::optional<std::pair<std::string, std::string>> header_comment(std::string_view line) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos || line[start] != '#') return std::nullopt;
    line.remove_prefix(start + 1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    auto colon = line.find(": ");
    if (colon == std::string_view::npos || colon == 0) return std::nullopt;
    std::string_view key = line.substr(0, colon);
    for (char ch : key) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-' && ch != '.') return std::nullopt;
    }
    std::string_view value = line.substr(colon + 2);
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.remove_suffix(1);
    return std::make_pair(std::string(key), std::string(value));
}

GraphDocument parse_edgelist(std::string_view text) {
    GraphDocument doc;
    std::unordered_map<std::string, int> index;
    std::set<std::string> declared;
    auto touch = [&](const std::string& label) {
        if (index.emplace(label, static_cast<int>(doc.vertices.size())).second) doc.vertices.push_back(label);
    };

    int line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (auto meta = header_comment(line)) {
            if (meta->first == "name") doc.name = meta->second;
            else doc.metadata[meta->first] = meta->second;
            continue;
        }
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<std::string> tok = tokens(line);
        if (tok.empty()) continue;
        if (tok.size() == 1) {
            if (!declared.insert(tok[0]).second) throw ParseError(line_no, "duplicate vertex declaration '" + tok[0] + "'");
            touch(tok[0]);
        } else if (tok.size() == 2) {
            if (tok[0] == tok[1]) throw ParseError(line_no, "self-loop at '" + tok[0] + "'");
            touch(tok[0]);
            touch(tok[1]);
            doc.edges.emplace_back(tok[0], tok[1]);
        } else {
            throw ParseError(line_no, "expected 'u v' or a single vertex, got " + std::to_string(tok.size()) + " fields");
        }
    }
    return doc;
}

GraphDocument parse_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(0, "graph document must be a JSON object");

    GraphDocument doc;
    std::set<std::string> known;
    try {
        if (j.contains("name")) doc.name = j.at("name").get<std::string>();
        if (j.contains("vertices")) {
            for (const auto& v : j.at("vertices")) {
                auto label = v.get<std::string>();
                if (!known.insert(label).second) throw ParseError(0, "duplicate vertex declaration '" + label + "'");
                doc.vertices.push_back(label);
            }
        }
        const bool implicit = !j.contains("vertices");
        if (j.contains("edges")) {
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2) throw ParseError(0, "each edge must be a two-element array");
                auto a = e[0].get<std::string>();
                auto b = e[1].get<std::string>();
                if (a == b) throw ParseError(0, "self-loop at '" + a + "'");
                for (const auto& x : {a, b}) {
                    if (known.count(x)) continue;
                    if (!implicit) throw ParseError(0, "edge uses undeclared vertex '" + x + "'");
                    known.insert(x);
                    doc.vertices.push_back(x);
                }
                doc.edges.emplace_back(a, b);
            }
        }
        if (j.contains("metadata")) {
            for (const auto& [k, v] : j.at("metadata").items()) doc.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed graph document: ") + e.what());
    }
    return doc;
}

json labels_of(const SimplicialGraph& g, VertexSet s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(g.label(v)); });
    return arr;
}

std::string braces(const SimplicialGraph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    });
    return out + "}";
}

std::string finish(const json& j) { return j.dump() + "\n"; }

const char* origin_name(HyperedgeOrigin o) {
    switch (o) {
        case HyperedgeOrigin::WideSeed: return "wide";
        case HyperedgeOrigin::StripSeed: return "strip";
        case HyperedgeOrigin::Merge: return "merge";
    }
    return "merge";
}

const char* reason_name(InfiniteReason r) { return r == InfiniteReason::OmegaEmpty ? "omega_empty" : "stabilized"; }

json index_json(const SimplicialGraph& g, const IndexReport& r) {
    json j;
    if (r.finite()) {
        j["index"] = *r.index;
        j["witness"] = labels_of(g, *r.witness);
    } else {
        j["index"] = "infinite";
        j["reason"] = reason_name(*r.reason_infinite);
    }
    j["levels_computed"] = r.levels_computed;
    j["vertex_count"] = g.size();
    return j;
}

std::string index_text(const IndexReport& r) {
    if (r.finite()) return "hypergraph index: " + std::to_string(*r.index);
    return std::string("hypergraph index: infinite (") + reason_name(*r.reason_infinite) + ")";
}

json bounds_json(const BoundsReport& b) {
    json j;
    j["index"] = b.index;
    j["thick_upper"] = b.thick_upper;
    j["divergence_degree_upper"] = b.divergence_degree_upper;
    j["alg_thick_upper"] = b.alg_thick_upper;
    if (b.exact_low_order) {
        j["classification"] = b.index == 0 ? "thick and algebraically thick of order 0, linear divergence"
                                           : "thick and algebraically thick of order 1, quadratic divergence";
    }
    return j;
}

json exact_json(const SimplicialGraph& g, const BoundsReport::ExactClaims& e) {
    json j;
    j["n"] = e.n;
    j["u"] = g.label(e.u);
    j["v"] = g.label(e.v);
    j["thick_order"] = e.thick_order;
    j["divergence_degree"] = e.divergence_degree;
    j["alg_thick_lower_exclusive"] = e.alg_thick_lower_exclusive;
    j["alg_thick_upper"] = e.alg_thick_upper;
    return j;
}

json certificate_json(const SimplicialGraph& g, const Thm72Certificate& c) {
    json j;
    j["passed"] = c.passed();
    j["u"] = g.label(c.u);
    j["v"] = g.label(c.v);
    j["b_vertices"] = labels_of(g, c.b_vertices);
    j["b_index"] = c.b_index ? json(*c.b_index) : json("infinite");
    j["n"] = c.n ? json(*c.n) : json(nullptr);
    json checks = json::array();
    for (int i = 0; i < 4; ++i) {
        checks.push_back({{"hypothesis", i + 1}, {"passed", c.checks[i].passed}, {"detail", c.checks[i].detail}});
    }
    j["checks"] = checks;
    if (c.conclusion) {
        json conc = bounds_json(*c.conclusion);
        conc["exact"] = exact_json(g, *c.conclusion->exact);
        j["conclusion"] = conc;
    } else {
        j["conclusion"] = nullptr;
    }
    return j;
}

// Twelve distinguishable Graphviz colours, cycled by hyperedge position.
constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#e7ba52"};

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

GraphDocument parse_graph(std::string_view text, GraphFormat format) {
    GraphDocument doc = format == GraphFormat::Json ? parse_json(text) : parse_edgelist(text);
    to_graph(doc);  // validates
    return doc;
}

GraphFormat detect_format(std::string_view path, std::string_view text) {
    auto ends_with = [&](std::string_view ext) {
        return path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext;
    };
    if (ends_with(".json")) return GraphFormat::Json;
    for (std::string_view ext : {".edges", ".edgelist", ".el", ".txt"}) {
        if (ends_with(ext)) return GraphFormat::EdgeList;
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return GraphFormat::Json;
    return GraphFormat::EdgeList;
}

SimplicialGraph to_graph(const GraphDocument& doc) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(doc.vertices.size()); ++i) {
        if (!index.emplace(doc.vertices[i], i).second) throw ParseError(0, "duplicate vertex '" + doc.vertices[i] + "'");
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : doc.edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) throw ParseError(0, "edge uses undeclared vertex");
        if (ia->second == ib->second) throw ParseError(0, "self-loop at '" + a + "'");
        edges.emplace_back(ia->second, ib->second);
    }
    return SimplicialGraph(doc.vertices, edges);
}

GraphDocument to_document(const SimplicialGraph& g, std::string name) {
    GraphDocument doc;
    doc.name = std::move(name);
    doc.vertices = g.labels();
    for (auto [a, b] : g.edges()) doc.edges.emplace_back(g.label(a), g.label(b));
    return doc;
}

GraphDocument canonical(const GraphDocument& doc) {
    GraphDocument out = to_document(to_graph(doc), doc.name);
    out.metadata = doc.metadata;
    return out;
}

std::string emit_document(const GraphDocument& doc, GraphFormat format) {
    GraphDocument c = canonical(doc);
    if (format == GraphFormat::Json) {
        json j;
        j["name"] = c.name;
        j["vertices"] = c.vertices;
        json edges = json::array();
        for (const auto& [a, b] : c.edges) edges.push_back({a, b});
        j["edges"] = edges;
        json meta = json::object();
        for (const auto& [k, v] : c.metadata) meta[k] = v;
        j["metadata"] = meta;
        return finish(j);
    }
    std::string out;
    if (!c.name.empty()) out += "# name: " + c.name + "\n";
    for (const auto& [k, v] : c.metadata) out += "# " + k + ": " + v + "\n";
    for (const auto& v : c.vertices) out += v + "\n";
    for (const auto& [a, b] : c.edges) out += a + " " + b + "\n";
    return out;
}

SimplicialGraph cycle_graph(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        edges.emplace_back(i, (i + 1) % n);
    }
    return SimplicialGraph(labels, edges);
}

SimplicialGraph complete_graph(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return SimplicialGraph(labels, edges);
}

SimplicialGraph theta8() {
    // x and y are both joined to b1, b2, d1, d2; a hangs off {b1, b2}, c off {d1, d2}.
    std::vector<std::string> labels = {"x", "y", "a", "c", "b1", "b2", "d1", "d2"};
    std::vector<std::pair<int, int>> edges;
    for (int hub : {0, 1}) {
        for (int leaf : {4, 5, 6, 7}) edges.emplace_back(hub, leaf);
    }
    edges.insert(edges.end(), {{2, 4}, {2, 5}, {3, 6}, {3, 7}});
    return SimplicialGraph(labels, edges);
}

SimplicialGraph builtin_graph(const std::string& name) {
    if (name == "theta8") return theta8();
    if (name == "c4") return SimplicialGraph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    if (name == "c4_pendant") return SimplicialGraph({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    if (name == "path3") return SimplicialGraph({"x", "a", "y"}, {{0, 1}, {1, 2}});
    if (name.size() >= 2 && name[0] == 'c') {
        int n = std::stoi(name.substr(1));
        if (n >= 3 && n <= kMaxVertices) return cycle_graph(n);
    }
    if (name.size() >= 2 && name[0] == 'k') {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= kMaxVertices) return complete_graph(n);
    }
    throw InputError("unknown builtin graph '" + name + "'");
}

std::string emit_index(const SimplicialGraph& g, const IndexReport& r, ReportFormat f) {
    if (f == ReportFormat::Json) return finish(index_json(g, r));
    std::string out = index_text(r) + "\n";
    if (r.finite()) out += "witness: " + braces(g, *r.witness) + "\n";
    out += "levels computed: " + std::to_string(r.levels_computed) + "\n";
    return out;
}

std::string emit_lambda(const SimplicialGraph& g, const LambdaSequence& seq, int level, ReportFormat f) {
    if (level > seq.top_level() || level < -1) throw InputError("level " + std::to_string(level) + " not computed");
    const int lo = level < 0 ? 0 : level;
    const int hi = level < 0 ? seq.top_level() : level;

    if (f == ReportFormat::Json) {
        json levels = json::array();
        for (int i = lo; i <= hi; ++i) {
            json edges = json::array();
            for (int id = 0; id < static_cast<int>(seq.levels[i].size()); ++id) {
                const Hyperedge& h = seq.levels[i][id];
                json e;
                e["id"] = id;
                e["vertices"] = labels_of(g, h.vertices);
                e["origin"] = origin_name(h.origin);
                e["members"] = h.members;
                e["parent"] = i < seq.top_level() ? json(seq.parent[i][id]) : json(nullptr);
                edges.push_back(e);
            }
            levels.push_back({{"level", i}, {"hyperedges", edges}});
        }
        json j;
        j["levels"] = levels;
        j["stabilized_at"] = seq.stabilized_at ? json(*seq.stabilized_at) : json(nullptr);
        j["covering"] = seq.covering ? json{{"level", seq.covering->level}, {"id", seq.covering->id}} : json(nullptr);
        j["levels_computed"] = seq.levels_computed;
        return finish(j);
    }
    std::string out;
    for (int i = lo; i <= hi; ++i) {
        out += "level " + std::to_string(i) + ":\n";
        for (int id = 0; id < static_cast<int>(seq.levels[i].size()); ++id) {
            const Hyperedge& h = seq.levels[i][id];
            out += "  [" + std::to_string(id) + "] " + braces(g, h.vertices) + " " + origin_name(h.origin);
            if (i < seq.top_level()) out += " -> " + std::to_string(seq.parent[i][id]);
            out += "\n";
        }
    }
    if (seq.covering) out += "covered at level " + std::to_string(seq.covering->level) + "\n";
    if (seq.stabilized_at) out += "stabilized at level " + std::to_string(*seq.stabilized_at) + "\n";
    return out;
}

std::string emit_joins(const SimplicialGraph& g, const std::vector<JoinWitness>& ws, ReportFormat f) {
    if (f == ReportFormat::Json) {
        json arr = json::array();
        for (const auto& w : ws) {
            json e;
            e["kind"] = w.kind == JoinKind::Wide ? "wide" : "strip";
            e["vertices"] = labels_of(g, w.vertices);
            e["side_a"] = labels_of(g, w.side_a);
            e["side_b"] = labels_of(g, w.side_b);
            arr.push_back(e);
        }
        return finish(json{{"count", ws.size()}, {"subgraphs", arr}});
    }
    std::string out;
    for (const auto& w : ws) out += braces(g, w.side_a) + " * " + braces(g, w.side_b) + "\n";
    out += std::to_string(ws.size()) + " subgraph(s)\n";
    return out;
}

std::string emit_spectrum(const SimplicialGraph& g, const SpectrumReport& r, ReportFormat f) {
    if (f == ReportFormat::Json) {
        json subsets = json::array();
        for (const auto& e : r.maximal_subsets) subsets.push_back({{"vertices", labels_of(g, e.vertices)}, {"index", e.index}});
        json amb = json::array();
        for (auto [a, b] : r.ambiguous_containers) amb.push_back({a, b});
        json j;
        j["spectrum"] = r.spectrum;
        j["maximal_subsets"] = subsets;
        j["whole_graph"] = index_json(g, r.whole_graph_index);
        j["triangle_free"] = r.triangle_free;
        j["ambiguous_containers"] = amb;
        return finish(j);
    }
    std::string out = "spectrum: {";
    for (std::size_t i = 0; i < r.spectrum.size(); ++i) out += (i ? "," : "") + std::to_string(r.spectrum[i]);
    out += "}\n";
    for (const auto& e : r.maximal_subsets) out += "  " + braces(g, e.vertices) + " index " + std::to_string(e.index) + "\n";
    if (!r.triangle_free) out += "note: graph contains a triangle\n";
    return out;
}

std::string emit_rank(const SimplicialGraph& g, int s, int t, const RankTable& table, ReportFormat f) {
    std::vector<bool> col = table.column(s, t);
    if (f == ReportFormat::Json) {
        json levels = json::array();
        for (std::size_t i = 0; i < col.size(); ++i) levels.push_back({{"n", i + 1}, {"rank", static_cast<bool>(col[i])}});
        return finish(json{{"s", g.label(s)}, {"t", g.label(t)}, {"levels", levels}});
    }
    std::string out;
    for (std::size_t i = 0; i < col.size(); ++i) {
        out += "rank " + std::to_string(i + 1) + ": " + (col[i] ? "true" : "false") + "\n";
    }
    return out;
}

std::string emit_bounds(const SimplicialGraph& g, const BoundsResult& r, ReportFormat f) {
    if (f == ReportFormat::Json) {
        json j;
        if (!r.bounds) {
            j["index"] = "infinite";
            j["reason"] = reason_name(*r.index.reason_infinite);
            j["relatively_hyperbolic"] = true;
            j["see"] = "spectrum";
            return finish(j);
        }
        j = bounds_json(*r.bounds);
        j["exact"] = r.bounds->exact ? exact_json(g, *r.bounds->exact) : json(nullptr);
        return finish(j);
    }
    if (!r.bounds) return index_text(r.index) + "\nrelatively hyperbolic; use the spectrum command\n";
    const BoundsReport& b = *r.bounds;
    std::string out = "hypergraph index: " + std::to_string(b.index) + "\n";
    out += "thick of order at most " + std::to_string(b.thick_upper) + "\n";
    out += "divergence bounded by a polynomial of degree " + std::to_string(b.divergence_degree_upper) + "\n";
    out += "algebraically thick of order at most " + std::to_string(b.alg_thick_upper) + "\n";
    if (b.exact_low_order) out += "orders and divergence degree are exact\n";
    if (b.exact) {
        out += "exact: thick of order " + std::to_string(b.exact->thick_order) + ", divergence degree " +
               std::to_string(b.exact->divergence_degree) + ", algebraic thickness in (" +
               std::to_string(b.exact->alg_thick_lower_exclusive) + ", " + std::to_string(b.exact->alg_thick_upper) + "]\n";
    }
    return out;
}

std::string emit_certificate(const SimplicialGraph& g, const Thm72Certificate& c, ReportFormat f) {
    if (f == ReportFormat::Json) return finish(certificate_json(g, c));
    std::string out = std::string("certificate: ") + (c.passed() ? "pass" : "fail") + "\n";
    for (int i = 0; i < 4; ++i) {
        out += "  hypothesis " + std::to_string(i + 1) + ": " + (c.checks[i].passed ? "pass" : "FAIL") + " (" +
               c.checks[i].detail + ")\n";
    }
    if (c.n) out += "n = " + std::to_string(*c.n) + "\n";
    return out;
}

std::string emit_dot(const SimplicialGraph& g, const LambdaSequence& seq, int level) {
    if (level < 0 || level > seq.top_level()) throw InputError("level " + std::to_string(level) + " not computed");
    std::ostringstream out;
    out << "graph lambda_" << level << " {\n";
    out << "  label=" << dot_quote("level " + std::to_string(level)) << ";\n";
    out << "  compound=true;\n";
    out << "  subgraph cluster_graph {\n    label=\"graph\";\n    color=black;\n";
    for (int v = 0; v < g.size(); ++v) out << "    v" << v << " [label=" << dot_quote(g.label(v)) << "];\n";
    for (auto [a, b] : g.edges()) out << "    v" << a << " -- v" << b << ";\n";
    out << "  }\n";

    // Hyperedges overlap; each cluster gets its own copies of the vertices, and the
    // copies carry the count of hyperedges containing the vertex.
    std::vector<int> multiplicity(g.size(), 0);
    for (const auto& h : seq.levels[level]) h.vertices.for_each([&](int v) { ++multiplicity[v]; });
    for (int id = 0; id < static_cast<int>(seq.levels[level].size()); ++id) {
        const Hyperedge& h = seq.levels[level][id];
        const char* color = kPalette[id % kPalette.size()];
        out << "  subgraph cluster_h" << id << " {\n";
        out << "    label=" << dot_quote("H" + std::to_string(id) + " (" + origin_name(h.origin) + ")") << ";\n";
        out << "    color=" << dot_quote(color) << ";\n";
        h.vertices.for_each([&](int v) {
            out << "    h" << id << "_v" << v << " [label=" << dot_quote(g.label(v)) << ", color=" << dot_quote(color)
                << (multiplicity[v] > 1 ? ", style=dashed, tooltip=" + dot_quote("in " + std::to_string(multiplicity[v]) + " hyperedges")
                                        : std::string())
                << "];\n";
        });
        for (auto [a, b] : g.edges()) {
            if (h.vertices.contains(a) && h.vertices.contains(b)) out << "    h" << id << "_v" << a << " -- h" << id << "_v" << b << ";\n";
        }
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace coxindex
