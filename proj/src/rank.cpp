#include "coxindex/rank.hpp"

#include <algorithm>

namespace coxindex {

RankTable::RankTable(const SimplicialGraph& g, int max_level)
    : n_vertices_(g.size()), max_level_(max_level), pairs_(non_adjacent_pairs(g)), id_(g.size() * g.size(), -1) {
    if (max_level < 1) throw InputError("rank level must be at least 1");
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
        auto [s, t] = pairs_[i];
        id_[s * n_vertices_ + t] = i;
        id_[t * n_vertices_ + s] = i;
    }

    const std::size_t m = pairs_.size();
    table_.assign(max_level, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        auto [s, t] = pairs_[i];
        table_[0][i] = is_clique(g, g.neighbors(s) & g.neighbors(t));
    }

    // Pairs inside each link, computed once.
    std::vector<std::vector<int>> link_pairs(n_vertices_);
    for (int v = 0; v < n_vertices_; ++v) {
        VertexSet l = g.neighbors(v);
        for (std::size_t i = 0; i < m; ++i) {
            if (l.contains(pairs_[i].first) && l.contains(pairs_[i].second)) link_pairs[v].push_back(static_cast<int>(i));
        }
    }
    for (int level = 1; level < max_level; ++level) {
        const auto& below = table_[level - 1];
        auto all_below = [&](int v) {
            return std::all_of(link_pairs[v].begin(), link_pairs[v].end(), [&](int p) { return below[p]; });
        };
        for (std::size_t i = 0; i < m; ++i) {
            auto [s, t] = pairs_[i];
            table_[level][i] = all_below(s) || all_below(t);
        }
    }
}

int RankTable::pair_id(int s, int t) const {
    if (s < 0 || t < 0 || s >= n_vertices_ || t >= n_vertices_) throw InputError("vertex index out of range");
    int id = id_[s * n_vertices_ + t];
    if (id < 0) throw InputError("not a non-commuting pair");
    return id;
}

bool RankTable::rank(int s, int t, int n) const {
    if (n < 1 || n > max_level_) throw InputError("rank level " + std::to_string(n) + " outside computed range");
    return table_[n - 1][pair_id(s, t)];
}

std::vector<bool> RankTable::column(int s, int t) const {
    int id = pair_id(s, t);
    std::vector<bool> out;
    for (const auto& level : table_) out.push_back(level[id]);
    return out;
}

RankTable rank_table(const SimplicialGraph& g, int max_level) { return RankTable(g, max_level); }

BoundsReport bounds_for_index(int h) {
    if (h < 0) throw InputError("index must be non-negative");
    BoundsReport r;
    r.index = h;
    r.thick_upper = h;
    r.divergence_degree_upper = h + 1;
    r.alg_thick_upper = h == 0 ? 0 : 2 * h - 1;
    r.exact_low_order = h <= 1;
    return r;
}

namespace {

std::string quote(const SimplicialGraph& g, int v) { return "'" + g.label(v) + "'"; }

HypothesisCheck check_link(const SimplicialGraph& g, int w, VertexSet b) {
    VertexSet l = g.neighbors(w);
    if (l.size() != 2) {
        return {false, "link of " + quote(g, w) + " has " + std::to_string(l.size()) + " vertices, expected 2"};
    }
    if (!l.subset_of(b)) return {false, "link of " + quote(g, w) + " leaves B"};
    auto idx = l.indices();
    if (g.adjacent(idx[0], idx[1])) {
        return {false, "link of " + quote(g, w) + " is the adjacent pair " + quote(g, idx[0]) + "," + quote(g, idx[1])};
    }
    return {true, "link of " + quote(g, w) + " is " + quote(g, idx[0]) + "," + quote(g, idx[1])};
}

std::optional<std::string> rank_failure(const SimplicialGraph& g, const RankTable& table, int w, int n) {
    std::optional<std::string> bad;
    (g.vertices() - star(g, w)).for_each([&](int s) {
        if (!bad && !table.rank(w, s, n)) {
            bad = "(" + quote(g, w) + "," + quote(g, s) + ") is not rank " + std::to_string(n);
        }
    });
    return bad;
}

Thm72Certificate evaluate(const SimplicialGraph& g, int u, int v, std::optional<int> b_index) {
    Thm72Certificate c;
    c.u = u;
    c.v = v;
    c.b_vertices = g.vertices() - VertexSet::of({u, v});
    c.b_index = b_index;
    c.checks[0] = {true, "B has " + std::to_string(c.b_vertices.size()) + " vertices"};

    if (!b_index) {
        c.checks[1] = {false, "B has infinite hypergraph index"};
    } else if (*b_index < 1) {
        c.checks[1] = {false, "B has hypergraph index 0; n must exceed 1"};
    } else {
        c.n = *b_index + 1;
        c.checks[1] = {true, "B has hypergraph index " + std::to_string(*b_index)};
    }

    HypothesisCheck lu = check_link(g, u, c.b_vertices);
    HypothesisCheck lv = check_link(g, v, c.b_vertices);
    c.checks[2] = {lu.passed && lv.passed, lu.passed ? lv.detail : lu.detail};
    if (lu.passed && lv.passed) c.checks[2].detail = lu.detail + "; " + lv.detail;

    if (!c.n) {
        c.checks[3] = {false, "rank level undefined without a valid index for B"};
    } else {
        RankTable table(g, *c.n);
        auto bad = rank_failure(g, table, u, *c.n);
        if (!bad) bad = rank_failure(g, table, v, *c.n);
        c.checks[3] = bad ? HypothesisCheck{false, *bad}
                          : HypothesisCheck{true, "all pairs through u and v are rank " + std::to_string(*c.n)};
    }

    if (c.passed()) {
        int n = *c.n;
        BoundsReport r = bounds_for_index(n);
        r.exact = BoundsReport::ExactClaims{n, n, n + 1, n, 2 * n - 1, u, v};
        c.conclusion = r;
    }
    return c;
}

void check_pair(const SimplicialGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) throw InputError("vertex index out of range");
    if (u == v) throw InputError("u and v must be distinct");
}

}  // namespace

int Thm72Certificate::first_failure() const {
    for (int i = 0; i < 4; ++i) {
        if (!checks[i].passed) return i + 1;
    }
    return 0;
}

Thm72Certificate check_thm72(const SimplicialGraph& g, int u, int v) {
    check_pair(g, u, v);
    VertexSet b = g.vertices() - VertexSet::of({u, v});
    return evaluate(g, u, v, hypergraph_index(induced_subgraph(g, b)).index);
}

BoundsResult bounds(const SimplicialGraph& g) {
    BoundsResult out;
    out.index = hypergraph_index(g);
    if (!out.index.finite()) return out;
    out.bounds = bounds_for_index(*out.index.index);

    for (int u = 0; u < g.size(); ++u) {
        if (g.neighbors(u).size() != 2) continue;
        for (int v = u + 1; v < g.size(); ++v) {
            if (g.neighbors(v).size() != 2 || g.adjacent(u, v)) continue;
            Thm72Certificate c = check_thm72(g, u, v);
            if (c.passed() && *c.n == *out.index.index) {
                out.bounds->exact = c.conclusion->exact;
                return out;
            }
        }
    }
    return out;
}

namespace {

std::string fresh_label(const SimplicialGraph& g, std::string base) {
    while (g.find(base)) base += "'";
    return base;
}

SimplicialGraph adjoin(const SimplicialGraph& b, const std::string& u_label, const std::string& v_label,
                       std::pair<int, int> u_link, std::pair<int, int> v_link) {
    std::vector<std::string> labels = b.labels();
    labels.push_back(u_label);
    labels.push_back(v_label);
    std::vector<std::pair<int, int>> edges = b.edges();
    const int u = b.size();
    const int v = b.size() + 1;
    edges.emplace_back(u, u_link.first);
    edges.emplace_back(u, u_link.second);
    edges.emplace_back(v, v_link.first);
    edges.emplace_back(v, v_link.second);
    return SimplicialGraph(std::move(labels), edges);
}

}  // namespace

GammaN generate_gamma_n(int n, const SimplicialGraph& seed, const AttachmentRule& rule) {
    if (n < 2) throw InputError("n must be at least 2");
    SimplicialGraph current = seed;
    GammaN out;
    std::optional<int> current_index = hypergraph_index(seed).index;

    for (int k = 2; k <= n; ++k) {
        const std::string u_label = fresh_label(current, "u" + std::to_string(k));
        std::string v_label = "v" + std::to_string(k);
        while (current.find(v_label) || v_label == u_label) v_label += "'";
        const int u = current.size();
        const int v = u + 1;
        const std::size_t step = static_cast<std::size_t>(k - 2);

        auto accept = [&](const SimplicialGraph& candidate, const Thm72Certificate& cert, StepLinks links) {
            out.links.push_back(links);
            out.certificate = cert;
            current_index = k;
            current = candidate;
        };

        if (step < rule.explicit_steps.size()) {
            const LinkLabels& named = rule.explicit_steps[step];
            StepLinks links{{current.index_of(named.u_first), current.index_of(named.u_second)},
                            {current.index_of(named.v_first), current.index_of(named.v_second)}};
            if (links.u_link.first == links.u_link.second || links.v_link.first == links.v_link.second) {
                throw GenerationError(k, 3, "step " + std::to_string(k) + ": a link needs two distinct vertices");
            }
            SimplicialGraph candidate = adjoin(current, u_label, v_label, links.u_link, links.v_link);
            Thm72Certificate cert = evaluate(candidate, u, v, current_index);
            if (!cert.passed()) {
                int h = cert.first_failure();
                throw GenerationError(k, h, "step " + std::to_string(k) + ": hypothesis " + std::to_string(h) +
                                                " fails: " + cert.checks[h - 1].detail);
            }
            if (*cert.n != k) {
                throw GenerationError(k, 2, "step " + std::to_string(k) + ": B has index " +
                                                std::to_string(*cert.b_index) + ", expected " + std::to_string(k - 1));
            }
            std::optional<int> idx = hypergraph_index(candidate).index;
            if (idx != k) {
                throw GenerationError(k, 0, "step " + std::to_string(k) + ": generated graph has index " +
                                                (idx ? std::to_string(*idx) : std::string("infinite")) +
                                                ", expected " + std::to_string(k));
            }
            accept(candidate, cert, links);
            continue;
        }

        if (current_index != k - 1) {
            throw GenerationError(k, 2, "step " + std::to_string(k) + ": B has index " +
                                            (current_index ? std::to_string(*current_index) : std::string("infinite")) +
                                            ", expected " + std::to_string(k - 1));
        }
        std::vector<std::pair<int, int>> choices = non_adjacent_pairs(current);
        bool found = false;
        for (std::size_t i = 0; i < choices.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < choices.size() && !found; ++j) {
                StepLinks links{choices[i], choices[j]};
                SimplicialGraph candidate = adjoin(current, u_label, v_label, links.u_link, links.v_link);
                Thm72Certificate cert = evaluate(candidate, u, v, current_index);
                if (!cert.passed()) continue;
                if (hypergraph_index(candidate).index != k) continue;
                accept(candidate, cert, links);
                found = true;
            }
        }
        if (!found) {
            throw GenerationError(k, 4, "step " + std::to_string(k) + ": no pair of links satisfies every hypothesis");
        }
    }
    out.graph = current;
    out.u = out.graph.size() - 2;
    out.v = out.graph.size() - 1;
    return out;
}

}  // namespace coxindex
