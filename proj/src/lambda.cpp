#include "coxindex/lambda.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace coxindex {

namespace {

bool shares_non_edge(const SimplicialGraph& g, VertexSet a, VertexSet b) {
    return has_non_edge(g, a & b);
}

struct DisjointSets {
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> parent;
};

bool same_family(const std::vector<Hyperedge>& a, const std::vector<Hyperedge>& b) {
    if (a.size() != b.size()) return false;
    auto family = [](const std::vector<Hyperedge>& level) {
        std::vector<VertexSet> sets;
        for (const auto& h : level) sets.push_back(h.vertices);
        sort_canonical(sets);
        return sets;
    };
    return family(a) == family(b);
}

std::optional<int> covering_id(const SimplicialGraph& g, const std::vector<Hyperedge>& level) {
    for (std::size_t i = 0; i < level.size(); ++i) {
        if (level[i].vertices == g.vertices()) return static_cast<int>(i);
    }
    return std::nullopt;
}

}  // namespace

HyperedgeRef LambdaSequence::member_of(HyperedgeRef from, int to_level) const {
    if (to_level < from.level || to_level > top_level()) throw InputError("level out of range");
    HyperedgeRef cur = from;
    while (cur.level < to_level) cur = {cur.level + 1, parent.at(cur.level).at(cur.id)};
    return cur;
}

std::vector<int> equivalent_chain(const SimplicialGraph& g, const std::vector<Hyperedge>& edges, int e1, int e2) {
    const int n = static_cast<int>(edges.size());
    if (e1 < 0 || e2 < 0 || e1 >= n || e2 >= n) throw InputError("hyperedge id out of range");
    if (edges[e1].level != edges[e2].level) throw InputError("hyperedges lie on different levels");

    std::vector<int> prev(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<int> frontier;
    frontier.push(e1);
    seen[e1] = true;
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        if (cur == e2) break;
        for (int nb = 0; nb < n; ++nb) {
            if (seen[nb] || edges[nb].level != edges[e1].level) continue;
            if (!shares_non_edge(g, edges[cur].vertices, edges[nb].vertices)) continue;
            seen[nb] = true;
            prev[nb] = cur;
            frontier.push(nb);
        }
    }
    if (!seen[e2]) return {};
    std::vector<int> chain;
    for (int at = e2; at != -1; at = prev[at]) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

NextLevel next_level(const SimplicialGraph& g, const std::vector<Hyperedge>& level) {
    const int n = static_cast<int>(level.size());
    DisjointSets classes(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (classes.find(i) == classes.find(j)) continue;
            if (shares_non_edge(g, level[i].vertices, level[j].vertices)) classes.unite(i, j);
        }
    }

    std::vector<VertexSet> unions(n);
    for (int i = 0; i < n; ++i) unions[classes.find(i)] |= level[i].vertices;

    std::vector<VertexSet> distinct;
    for (int i = 0; i < n; ++i) {
        if (classes.find(i) == i) distinct.push_back(unions[i]);
    }
    sort_canonical(distinct);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const int next_lvl = n == 0 ? 1 : level.front().level + 1;
    NextLevel out;
    out.hyperedges.reserve(distinct.size());
    for (VertexSet v : distinct) out.hyperedges.push_back({v, next_lvl, HyperedgeOrigin::Merge, {}});
    out.membership.resize(n);
    for (int i = 0; i < n; ++i) {
        VertexSet u = unions[classes.find(i)];
        auto it = std::lower_bound(distinct.begin(), distinct.end(), u, canonical_less);
        int id = static_cast<int>(it - distinct.begin());
        out.membership[i] = id;
        out.hyperedges[id].members.push_back(i);
    }
    return out;
}

LambdaSequence lambda_sequence(const SimplicialGraph& g) {
    LambdaSequence seq;
    seq.omega = enumerate_wide(g);
    seq.psi = enumerate_strip(g, seq.omega);

    std::vector<Hyperedge> level0;
    for (const auto& w : seq.omega) level0.push_back({w.vertices, 0, HyperedgeOrigin::WideSeed, {}});
    for (const auto& s : seq.psi) level0.push_back({s.vertices, 0, HyperedgeOrigin::StripSeed, {}});
    seq.levels.push_back(std::move(level0));

    if (seq.levels[0].empty()) {
        seq.stabilized_at = 0;
        return seq;
    }
    if (auto c = covering_id(g, seq.levels[0])) {
        seq.covering = HyperedgeRef{0, *c};
        return seq;
    }
    // Each non-final step strictly reduces the number of hyperedges, so this terminates.
    while (true) {
        NextLevel next = next_level(g, seq.levels.back());
        ++seq.levels_computed;
        if (same_family(next.hyperedges, seq.levels.back())) {
            seq.stabilized_at = seq.top_level();
            return seq;
        }
        seq.parent.push_back(std::move(next.membership));
        seq.levels.push_back(std::move(next.hyperedges));
        if (auto c = covering_id(g, seq.levels.back())) {
            seq.covering = HyperedgeRef{seq.top_level(), *c};
            return seq;
        }
    }
}

IndexReport index_from_sequence(const SimplicialGraph& g, const LambdaSequence& seq) {
    (void)g;
    IndexReport r;
    r.levels_computed = seq.levels_computed;
    if (seq.omega.empty()) {
        r.reason_infinite = InfiniteReason::OmegaEmpty;
    } else if (seq.covering) {
        r.index = seq.covering->level;
        r.witness = seq.at(*seq.covering).vertices;
    } else {
        r.reason_infinite = InfiniteReason::Stabilized;
    }
    return r;
}

IndexReport hypergraph_index(const SimplicialGraph& g) { return index_from_sequence(g, lambda_sequence(g)); }

std::vector<Hyperedge> non_strip_hyperedges(const SimplicialGraph& g, const LambdaSequence& seq, int level) {
    (void)g;
    if (level < 0 || level > seq.top_level()) throw InputError("level " + std::to_string(level) + " not computed");
    std::vector<Hyperedge> out;
    for (const auto& h : seq.levels[level]) {
        bool is_strip = std::any_of(seq.psi.begin(), seq.psi.end(),
                                    [&](const JoinWitness& s) { return s.vertices == h.vertices; });
        if (!is_strip) out.push_back(h);
    }
    return out;
}

}  // namespace coxindex
