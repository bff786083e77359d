#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "coxindex/graph.hpp"
#include "coxindex/io.hpp"

namespace testing_support {

inline coxindex::VertexSet labels(const coxindex::SimplicialGraph& g, std::initializer_list<std::string> names) {
    coxindex::VertexSet s;
    for (const auto& n : names) s.insert(g.index_of(n));
    return s;
}

inline std::vector<coxindex::VertexSet> sorted(std::vector<coxindex::VertexSet> sets) {
    coxindex::sort_canonical(sets);
    return sets;
}

inline coxindex::SimplicialGraph from_text(const std::string& text) {
    return coxindex::to_graph(coxindex::parse_graph(text, coxindex::GraphFormat::EdgeList));
}

// {p,q} * {r,s} * {m}
inline coxindex::SimplicialGraph triple_join() {
    return from_text("p r\np s\nq r\nq s\nm p\nm q\nm r\nm s\n");
}

// Strip {2,5}*{0} lies inside the covering level-1 hyperedge without being a member of it.
inline coxindex::SimplicialGraph membership_subtlety() {
    return coxindex::SimplicialGraph::from_edges(
        6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
}

}  // namespace testing_support
