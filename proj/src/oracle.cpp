#include "coxindex/oracle.hpp"

#include <algorithm>
#include <set>

#include "coxindex/enumeration.hpp"

namespace coxindex::oracle {

namespace {

void require_cap(const SimplicialGraph& g, int cap, const char* what) {
    if (g.size() > cap) {
        throw ResourceLimitError(std::string(what) + " oracle supports at most " + std::to_string(cap) +
                                 " vertices, graph has " + std::to_string(g.size()));
    }
}

bool non_adjacent_pair_inside(const SimplicialGraph& g, VertexSet t) {
    std::vector<int> vs = t.indices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.adjacent(vs[i], vs[j])) return true;
        }
    }
    return false;
}

bool all_cross_edges(const SimplicialGraph& g, VertexSet a, VertexSet b) {
    for (int x : a.indices()) {
        for (int y : b.indices()) {
            if (!g.adjacent(x, y)) return false;
        }
    }
    return true;
}

// Tries every split of t into two sides that are unions of complement components
// (any join side must be one) and checks the definition literally.
bool is_wide_form(const SimplicialGraph& g, VertexSet t) {
    if (t.size() < 4) return false;
    std::vector<VertexSet> comps = complement_components(g, t);
    const std::size_t c = comps.size();
    if (c < 2) return false;
    for (std::uint64_t coloring = 1; coloring + 1 < (std::uint64_t{1} << c); ++coloring) {
        VertexSet a;
        for (std::size_t i = 0; i < c; ++i) {
            if ((coloring >> i) & 1U) a |= comps[i];
        }
        VertexSet b = t - a;
        if (all_cross_edges(g, a, b) && non_adjacent_pair_inside(g, a) && non_adjacent_pair_inside(g, b)) return true;
    }
    return false;
}

bool is_strip_form(const SimplicialGraph& g, VertexSet t) {
    if (t.size() < 3) return false;
    std::vector<int> vs = t.indices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int s = vs[i];
            int u = vs[j];
            if (g.adjacent(s, u)) continue;
            VertexSet k = t - VertexSet::of({s, u});
            bool ok = true;
            for (int x : k.indices()) {
                if (!g.adjacent(x, s) || !g.adjacent(x, u)) ok = false;
                for (int y : k.indices()) {
                    if (x != y && !g.adjacent(x, y)) ok = false;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

// has_super[T] = some S with S ⊋ T (strict) satisfies flag.
std::vector<bool> strict_superset_flags(int n, const std::vector<bool>& flag) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> inclusive(total, false);
    std::vector<bool> strict(total, false);
    for (std::uint64_t m = total; m-- > 0;) {
        bool any = false;
        for (int v = 0; v < n; ++v) {
            if (!((m >> v) & 1U) && inclusive[m | (std::uint64_t{1} << v)]) any = true;
        }
        strict[m] = any;
        inclusive[m] = any || flag[m];
    }
    return strict;
}

std::vector<VertexSet> canonical(std::set<std::uint64_t> masks) {
    std::vector<VertexSet> out;
    for (auto m : masks) out.emplace_back(m);
    sort_canonical(out);
    return out;
}

}  // namespace

OmegaPsi brute_omega_psi(const SimplicialGraph& g) {
    require_cap(g, kOmegaPsiCap, "omega/psi");
    const int n = g.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> wide(total), strip(total), wide_or_strip(total);
    for (std::uint64_t m = 0; m < total; ++m) {
        wide[m] = is_wide_form(g, VertexSet(m));
        strip[m] = !wide[m] && is_strip_form(g, VertexSet(m));
        wide_or_strip[m] = wide[m] || strip[m];
    }
    std::vector<bool> above_wide = strict_superset_flags(n, wide);
    std::vector<bool> above_any = strict_superset_flags(n, wide_or_strip);

    std::set<std::uint64_t> omega, psi;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (wide[m] && !above_wide[m]) omega.insert(m);
        if (strip[m] && !above_any[m]) psi.insert(m);
    }
    return {canonical(omega), canonical(psi)};
}

LambdaFamilies brute_lambda(const SimplicialGraph& g) {
    OmegaPsi seeds = brute_omega_psi(g);
    LambdaFamilies out;
    std::set<std::uint64_t> level;
    for (VertexSet w : seeds.wide) level.insert(w.bits());
    for (VertexSet s : seeds.strips) level.insert(s.bits());
    out.levels.push_back(canonical(level));

    const std::uint64_t all = g.vertices().bits();
    auto covers = [&](const std::set<std::uint64_t>& l) { return l.count(all) > 0; };
    if (level.empty()) {
        out.stabilized = true;
        return out;
    }
    if (covers(level)) {
        out.covered = true;
        return out;
    }
    while (true) {
        std::vector<std::uint64_t> edges(level.begin(), level.end());
        const std::size_t k = edges.size();
        // Reflexive-transitive closure of "intersection holds a non-adjacent pair".
        std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                reach[i][j] = i == j || non_adjacent_pair_inside(g, VertexSet(edges[i] & edges[j]));
            }
        }
        for (std::size_t m = 0; m < k; ++m) {
            for (std::size_t i = 0; i < k; ++i) {
                if (!reach[i][m]) continue;
                for (std::size_t j = 0; j < k; ++j) {
                    if (reach[m][j]) reach[i][j] = true;
                }
            }
        }
        std::set<std::uint64_t> next;
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t u = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if (reach[i][j]) u |= edges[j];
            }
            next.insert(u);
        }
        ++out.steps;
        if (next == level) {
            out.stabilized = true;
            return out;
        }
        level = std::move(next);
        out.levels.push_back(canonical(level));
        if (covers(level)) {
            out.covered = true;
            return out;
        }
    }
}

IndexReport brute_index(const SimplicialGraph& g) {
    OmegaPsi seeds = brute_omega_psi(g);
    LambdaFamilies fam = brute_lambda(g);
    IndexReport r;
    r.levels_computed = fam.steps;
    if (seeds.wide.empty()) {
        r.reason_infinite = InfiniteReason::OmegaEmpty;
    } else if (fam.covered) {
        r.index = static_cast<int>(fam.levels.size()) - 1;
        r.witness = g.vertices();
    } else {
        r.reason_infinite = InfiniteReason::Stabilized;
    }
    return r;
}

SpectrumReport brute_spectrum(const SimplicialGraph& g) {
    require_cap(g, kSpectrumCap, "spectrum");
    const int n = g.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> finite(total, false);
    std::vector<std::optional<int>> idx(total);
    for (std::uint64_t m = 0; m < total; ++m) {
        idx[m] = brute_index(induced_subgraph(g, VertexSet(m))).index;
        finite[m] = idx[m].has_value();
    }
    std::vector<bool> above = strict_superset_flags(n, finite);

    SpectrumReport r;
    r.whole_graph_index = brute_index(g);
    r.triangle_free = is_triangle_free(g);
    std::set<int> distinct;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (finite[m] && !above[m]) {
            r.maximal_subsets.push_back({VertexSet(m), *idx[m]});
            distinct.insert(*idx[m]);
        }
    }
    std::sort(r.maximal_subsets.begin(), r.maximal_subsets.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return canonical_less(a.vertices, b.vertices); });
    r.spectrum.assign(distinct.begin(), distinct.end());
    return r;
}

std::uint64_t census_size(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

SimplicialGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b, ++bit) {
            if ((mask >> bit) & 1U) edges.emplace_back(a, b);
        }
    }
    return SimplicialGraph::from_edges(n, edges);
}

void enumerate_all_graphs(int n, const std::function<void(const SimplicialGraph&)>& visit) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    if (n > kCensusCap) {
        throw ResourceLimitError("census supports at most " + std::to_string(kCensusCap) + " vertices");
    }
    const std::uint64_t total = census_size(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_mask(n, mask));
}

Diff diff(const SimplicialGraph& g, bool with_spectrum) {
    Diff d;
    LambdaSequence seq = lambda_sequence(g);
    OmegaPsi seeds = brute_omega_psi(g);

    auto sets_of = [](const std::vector<JoinWitness>& ws) {
        std::vector<VertexSet> out;
        for (const auto& w : ws) out.push_back(w.vertices);
        sort_canonical(out);
        return out;
    };
    d.omega_equal = sets_of(seq.omega) == seeds.wide;
    d.psi_equal = sets_of(seq.psi) == seeds.strips;

    LambdaFamilies fam = brute_lambda(g);
    std::vector<std::vector<VertexSet>> main_levels;
    for (const auto& level : seq.levels) {
        std::vector<VertexSet> sets;
        for (const auto& h : level) sets.push_back(h.vertices);
        sort_canonical(sets);
        main_levels.push_back(sets);
    }
    d.lambda_equal = main_levels == fam.levels && fam.covered == seq.covering.has_value() &&
                     fam.stabilized == seq.stabilized_at.has_value() && fam.steps == seq.levels_computed;

    IndexReport main_index = index_from_sequence(g, seq);
    IndexReport brute = brute_index(g);
    d.index_equal = main_index.index == brute.index && main_index.reason_infinite == brute.reason_infinite &&
                    main_index.levels_computed == brute.levels_computed;

    if (with_spectrum && g.size() <= kSpectrumCap) {
        d.spectrum_checked = true;
        SpectrumReport a = spectrum(g, kSpectrumCap);
        SpectrumReport b = brute_spectrum(g);
        d.spectrum_equal = a.maximal_subsets == b.maximal_subsets && a.spectrum == b.spectrum;
    }
    return d;
}

}  // namespace coxindex::oracle
