#include "coxindex/enumeration.hpp"

#include <algorithm>

namespace coxindex {

namespace {

// Closed sets of X -> CN(CN(X)) are exactly the sides of maximal "cross-complete"
// pairs (A, B) with A = CN(B) and B = CN(A). Every maximal wide vertex set is the
// union of such a pair with both sides non-cliques, so enumerating closed sets with
// Close-by-One (each closed set visited once) and keeping the maximal unions is
// complete. A branch dies as soon as CN(A) becomes a clique, since CN only shrinks
// along a branch.
class ClosedPairEnumerator {
public:
    explicit ClosedPairEnumerator(const SimplicialGraph& g) : g_(g), n_(g.size()) {}

    std::vector<JoinPartition> run() {
        VertexSet start = closure(VertexSet{});
        visit(start, 0);
        return std::move(found_);
    }

private:
    VertexSet closure(VertexSet a) const { return common_neighbors(g_, common_neighbors(g_, a)); }

    void visit(VertexSet a, int from) {
        VertexSet b = common_neighbors(g_, a);
        if (is_clique(g_, b)) return;
        if (has_non_edge(g_, a)) found_.push_back({a, b});
        for (int j = from; j < n_; ++j) {
            if (a.contains(j)) continue;
            VertexSet next = closure(a | VertexSet::single(j));
            VertexSet below = VertexSet::range(j);
            if ((next & below) != (a & below)) continue;  // not canonical
            visit(next, j + 1);
        }
    }

    const SimplicialGraph& g_;
    int n_;
    std::vector<JoinPartition> found_;
};

std::vector<VertexSet> keep_maximal(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet x, VertexSet y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return canonical_less(x, y);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return s.subset_of(k); });
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

void bron_kerbosch(const SimplicialGraph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Tomita pivot: the vertex of P u X covering most of P.
    int pivot = -1;
    int best = -1;
    (p | x).for_each([&](int u) {
        int c = (p & g.neighbors(u)).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    VertexSet branch = p - g.neighbors(pivot);
    branch.for_each([&](int v) {
        VertexSet nv = g.neighbors(v);
        bron_kerbosch(g, r | VertexSet::single(v), p & nv, x & nv, out);
        p.erase(v);
        x.insert(v);
    });
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const SimplicialGraph& g, VertexSet within) {
    std::vector<VertexSet> out;
    if (within.empty()) return out;
    bron_kerbosch(g, VertexSet{}, within, VertexSet{}, out);
    sort_canonical(out);
    return out;
}

std::vector<JoinWitness> enumerate_wide(const SimplicialGraph& g) {
    std::vector<JoinPartition> pairs = ClosedPairEnumerator(g).run();
    std::vector<VertexSet> unions;
    unions.reserve(pairs.size());
    for (const auto& p : pairs) unions.push_back(p.side_a | p.side_b);
    std::vector<VertexSet> maximal = keep_maximal(std::move(unions));
    sort_canonical(maximal);

    std::vector<JoinWitness> out;
    out.reserve(maximal.size());
    for (VertexSet m : maximal) {
        // Report the closed pair whose first side holds the smallest vertex; among
        // those prefer the smaller first side so K vertices land on side B.
        const JoinPartition* chosen = nullptr;
        for (const auto& p : pairs) {
            if ((p.side_a | p.side_b) != m || !p.side_a.contains(m.first())) continue;
            if (chosen == nullptr || p.side_a.size() < chosen->side_a.size() ||
                (p.side_a.size() == chosen->side_a.size() && canonical_less(p.side_a, chosen->side_a))) {
                chosen = &p;
            }
        }
        out.push_back({m, chosen->side_a, chosen->side_b, JoinKind::Wide});
    }
    return out;
}

std::vector<JoinWitness> enumerate_strip(const SimplicialGraph& g, const std::vector<JoinWitness>& wide) {
    std::vector<JoinWitness> candidates;
    for (auto [s, t] : non_adjacent_pairs(g)) {
        VertexSet pair = VertexSet::of({s, t});
        VertexSet common = g.neighbors(s) & g.neighbors(t);
        for (VertexSet k : maximal_cliques(g, common)) {
            VertexSet all = pair | k;
            bool inside_wide = std::any_of(wide.begin(), wide.end(), [&](const JoinWitness& w) {
                return all.subset_of(w.vertices);
            });
            if (!inside_wide) candidates.push_back({all, pair, k, JoinKind::Strip});
        }
    }
    std::vector<JoinWitness> out;
    for (const auto& c : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const JoinWitness& o) {
            return c.vertices.proper_subset_of(o.vertices);
        });
        if (!dominated) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const JoinWitness& x, const JoinWitness& y) {
        return canonical_less(x.vertices, y.vertices);
    });
    return out;
}

WideDecomposition wide_decomposition(const SimplicialGraph& g, const JoinWitness& w) {
    if (w.kind != JoinKind::Wide || !verify_witness(g, w)) {
        throw ContractError("witness is not a wide join of the graph");
    }
    VertexSet k;
    w.vertices.for_each([&](int v) {
        if ((w.vertices - VertexSet::single(v)).subset_of(g.neighbors(v))) k.insert(v);
    });
    return {w.side_a - k, w.side_b - k, k};
}

bool verify_witness(const SimplicialGraph& g, const JoinWitness& w) {
    if (!w.vertices.subset_of(g.vertices())) return false;
    if (w.side_a.intersects(w.side_b) || (w.side_a | w.side_b) != w.vertices) return false;
    bool complete = true;
    w.side_a.for_each([&](int a) {
        if (!w.side_b.subset_of(g.neighbors(a))) complete = false;
    });
    if (!complete) return false;
    if (w.kind == JoinKind::Wide) return has_non_edge(g, w.side_a) && has_non_edge(g, w.side_b);
    return w.side_a.size() == 2 && has_non_edge(g, w.side_a) && !w.side_b.empty() && is_clique(g, w.side_b);
}

}  // namespace coxindex
