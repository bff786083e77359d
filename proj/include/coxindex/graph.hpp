#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxindex {

/// Thrown for malformed input: unknown vertices, out-of-range indices, bad files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a hard size cap is exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an argument violates an operation's precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr int kMaxVertices = 64;

/// A set of vertex indices of one graph, stored as a 64-bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Ascending index order; used for canonical listings.
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

/// Canonical order on vertex sets: lexicographic on ascending index lists.
bool canonical_less(VertexSet a, VertexSet b);
void sort_canonical(std::vector<VertexSet>& sets);

/// Finite undirected simple graph with labelled vertices. Immutable after construction.
class SimplicialGraph {
public:
    SimplicialGraph() = default;

    /// Edges are index pairs; duplicates collapse. Throws InputError on self-loops,
    /// out-of-range indices or duplicate labels.
    SimplicialGraph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

    /// Unlabelled graph on n vertices, labels "0".."n-1".
    static SimplicialGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static SimplicialGraph from_adjacency(std::vector<std::string> labels, std::vector<VertexSet> adjacency);

    int size() const { return static_cast<int>(labels_.size()); }
    VertexSet vertices() const { return VertexSet::range(size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    /// Index of the vertex with this label; throws InputError if absent.
    int index_of(const std::string& label) const;
    std::optional<int> find(const std::string& label) const;

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    const std::vector<VertexSet>& adjacency() const { return adj_; }
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    bool operator==(const SimplicialGraph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
};

/// Certified join partition of a vertex set.
struct JoinPartition {
    VertexSet side_a;
    VertexSet side_b;
};

SimplicialGraph induced_subgraph(const SimplicialGraph& g, VertexSet t);

VertexSet link(const SimplicialGraph& g, int v);
VertexSet star(const SimplicialGraph& g, int v);

/// Common neighbours of every vertex of t (all vertices when t is empty).
VertexSet common_neighbors(const SimplicialGraph& g, VertexSet t);

bool is_clique(const SimplicialGraph& g, VertexSet t);

/// True when t contains two non-adjacent vertices.
bool has_non_edge(const SimplicialGraph& g, VertexSet t);

/// Connected components of the complement of g restricted to t, ordered by smallest vertex.
std::vector<VertexSet> complement_components(const SimplicialGraph& g, VertexSet t);

/// Join partition of the subgraph induced by t with a non-adjacent pair on each side.
std::optional<JoinPartition> wide_join_partition(const SimplicialGraph& g, VertexSet t);
std::optional<JoinPartition> is_join_with_wide_parts(const SimplicialGraph& g);

std::vector<std::pair<int, int>> non_adjacent_pairs(const SimplicialGraph& g);
bool is_triangle_free(const SimplicialGraph& g);

/// Induced 4-cycles (both diagonals absent), in canonical order.
std::vector<VertexSet> induced_squares(const SimplicialGraph& g);

}  // namespace coxindex
