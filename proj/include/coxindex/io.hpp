#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxindex/enumeration.hpp"
#include "coxindex/graph.hpp"
#include "coxindex/lambda.hpp"
#include "coxindex/rank.hpp"
#include "coxindex/spectrum.hpp"

namespace coxindex {

class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { EdgeList, Json };
enum class ReportFormat { Json, Text };

struct GraphDocument {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::string> metadata;

    bool operator==(const GraphDocument&) const = default;
};

/// Edge list: one "u v" pair per line, a lone label declares a vertex, '#' starts
/// a comment, blank lines are skipped. Vertices are numbered in order of first appearance.
GraphDocument parse_graph(std::string_view text, GraphFormat format);
GraphFormat detect_format(std::string_view path, std::string_view text);

SimplicialGraph to_graph(const GraphDocument& doc);
GraphDocument to_document(const SimplicialGraph& g, std::string name = {});
/// Sorted, deduplicated edges in vertex-index order with the lower index first.
GraphDocument canonical(const GraphDocument& doc);

std::string emit_document(const GraphDocument& doc, GraphFormat format);

/// Built-in graphs: theta8, c4, c5, c6, k1..k9, c4_pendant, path3.
SimplicialGraph builtin_graph(const std::string& name);
SimplicialGraph theta8();
SimplicialGraph cycle_graph(int n);
SimplicialGraph complete_graph(int n);

std::string emit_index(const SimplicialGraph& g, const IndexReport& r, ReportFormat f);
std::string emit_lambda(const SimplicialGraph& g, const LambdaSequence& seq, int level, ReportFormat f);
std::string emit_joins(const SimplicialGraph& g, const std::vector<JoinWitness>& ws, ReportFormat f);
std::string emit_spectrum(const SimplicialGraph& g, const SpectrumReport& r, ReportFormat f);
std::string emit_rank(const SimplicialGraph& g, int s, int t, const RankTable& table, ReportFormat f);
std::string emit_bounds(const SimplicialGraph& g, const BoundsResult& r, ReportFormat f);
std::string emit_certificate(const SimplicialGraph& g, const Thm72Certificate& c, ReportFormat f);

/// Graphviz rendering of one lambda level: the graph once, plus one coloured cluster
/// per hyperedge holding copies of its vertices. Throws InputError for levels not computed.
std::string emit_dot(const SimplicialGraph& g, const LambdaSequence& seq, int level);

}  // namespace coxindex
