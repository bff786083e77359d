#include "coxindex/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace coxindex {

bool canonical_less(VertexSet a, VertexSet b) {
    // Lexicographic comparison of the ascending index lists.
    std::uint64_t x = a.bits();
    std::uint64_t y = b.bits();
    while (x != 0 && y != 0) {
        int i = std::countr_zero(x);
        int j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

void sort_canonical(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size()) {
    if (labels_.size() > static_cast<std::size_t>(kMaxVertices)) {
        throw ResourceLimitError("graph has " + std::to_string(labels_.size()) +
                                 " vertices; at most " + std::to_string(kMaxVertices) + " supported");
    }
    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < size(); ++i) {
        if (!seen.emplace(labels_[i], i).second) throw InputError("duplicate vertex label '" + labels_[i] + "'");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= size() || v >= size()) {
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        if (u == v) throw InputError("self-loop at vertex '" + labels_[u] + "'");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

SimplicialGraph SimplicialGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return SimplicialGraph(std::move(labels), edges);
}

SimplicialGraph SimplicialGraph::from_adjacency(std::vector<std::string> labels, std::vector<VertexSet> adjacency) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < static_cast<int>(adjacency.size()); ++u) {
        adjacency[u].for_each([&](int v) {
            if (u <= v) edges.emplace_back(u, v);
        });
    }
    SimplicialGraph g(std::move(labels), edges);
    for (int u = 0; u < g.size(); ++u) {
        if (g.adj_[u] != adjacency[u]) throw InputError("adjacency is not symmetric");
    }
    return g;
}

std::optional<int> SimplicialGraph::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

int SimplicialGraph::index_of(const std::string& label) const {
    if (auto v = find(label)) return *v;
    throw InputError("unknown vertex '" + label + "'");
}

std::vector<std::pair<int, int>> SimplicialGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u) {
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

int SimplicialGraph::edge_count() const {
    int twice = 0;
    for (auto s : adj_) twice += s.size();
    return twice / 2;
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, VertexSet t) {
    if (!t.subset_of(g.vertices())) throw InputError("vertex set is not contained in the graph");
    std::vector<int> keep = t.indices();
    std::vector<int> pos(g.size(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) pos[keep[i]] = i;

    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        labels.push_back(g.label(keep[i]));
        (g.neighbors(keep[i]) & t).for_each([&](int w) {
            if (pos[w] > i) edges.emplace_back(i, pos[w]);
        });
    }
    return SimplicialGraph(std::move(labels), edges);
}

VertexSet link(const SimplicialGraph& g, int v) {
    if (v < 0 || v >= g.size()) throw InputError("vertex index out of range: " + std::to_string(v));
    return g.neighbors(v);
}

VertexSet star(const SimplicialGraph& g, int v) { return link(g, v) | VertexSet::single(v); }

VertexSet common_neighbors(const SimplicialGraph& g, VertexSet t) {
    VertexSet out = g.vertices();
    t.for_each([&](int v) { out &= g.neighbors(v); });
    return out;
}

bool is_clique(const SimplicialGraph& g, VertexSet t) {
    bool ok = true;
    t.for_each([&](int v) {
        if (!(t - VertexSet::single(v)).subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

bool has_non_edge(const SimplicialGraph& g, VertexSet t) { return !is_clique(g, t); }

std::vector<VertexSet> complement_components(const SimplicialGraph& g, VertexSet t) {
    std::vector<VertexSet> comps;
    VertexSet rest = t;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            int v = frontier.first();
            frontier.erase(v);
            VertexSet fresh = (rest - g.neighbors(v) - VertexSet::single(v)) - comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comps.push_back(comp);
        rest -= comp;
    }
    return comps;
}

std::optional<JoinPartition> wide_join_partition(const SimplicialGraph& g, VertexSet t) {
    // A complement component with two or more vertices carries a non-edge of g;
    // singleton components are adjacent to everything else in t.
    std::optional<VertexSet> first_wide;
    bool second_wide = false;
    for (VertexSet c : complement_components(g, t)) {
        if (c.size() < 2) continue;
        if (!first_wide) first_wide = c;
        else second_wide = true;
    }
    if (!second_wide) return std::nullopt;
    return JoinPartition{*first_wide, t - *first_wide};
}

std::optional<JoinPartition> is_join_with_wide_parts(const SimplicialGraph& g) {
    return wide_join_partition(g, g.vertices());
}

std::vector<std::pair<int, int>> non_adjacent_pairs(const SimplicialGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

bool is_triangle_free(const SimplicialGraph& g) {
    for (auto [u, v] : g.edges()) {
        if ((g.neighbors(u) & g.neighbors(v)).size() > 0) return false;
    }
    return true;
}

std::vector<VertexSet> induced_squares(const SimplicialGraph& g) {
    // Each induced square is {s,t} * {p,q} with both pairs non-adjacent; enumerate it
    // once from the diagonal containing its smallest vertex.
    std::vector<VertexSet> out;
    for (auto [s, t] : non_adjacent_pairs(g)) {
        std::vector<int> common = (g.neighbors(s) & g.neighbors(t)).indices();
        for (std::size_t i = 0; i < common.size(); ++i) {
            for (std::size_t j = i + 1; j < common.size(); ++j) {
                int p = common[i];
                int q = common[j];
                if (g.adjacent(p, q)) continue;
                if (std::min(p, q) < s) continue;
                out.push_back(VertexSet::of({s, t, p, q}));
            }
        }
    }
    sort_canonical(out);
    return out;
}

}  // namespace coxindex
