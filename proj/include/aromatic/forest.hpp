#pragma once

// Aromatic forests: isomorphism classes of directed graphs in which every
// vertex has at most one outgoing edge. Every connected component is either a
// rooted tree or a set of trees hung on a single directed cycle (an aroma).
//
// Text grammar (canonical interchange format):
//
//   forest    := "1" | component (" " component)*
//   component := tree | cycle
//   tree      := "b" | "b[" tree ("," tree)* "]"     children = direct predecessors
//   cycle     := "<" tree ("," tree)* ">"            root of tree i -> root of tree i+1
//
// Canonical text sorts children and components lexicographically and rotates
// each cycle to its lexicographically smallest rendering. Vertex ids of the
// canonical graph are the positions of the 'b' symbols in the canonical text.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aromatic {

/// Thrown for text that does not conform to the forest grammar.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Directed graph on vertices 0..n-1 with out-degree at most one.
class DirectedGraph {
public:
    DirectedGraph() = default;
    explicit DirectedGraph(std::size_t vertex_count);

    /// Builds a graph from opaque vertex labels; throws std::invalid_argument on
    /// unknown labels, duplicate labels or a vertex of out-degree >= 2.
    static DirectedGraph from_labels(const std::vector<std::string>& vertices,
                                     const std::vector<std::pair<std::string, std::string>>& edges);

    /// `successors[v]` is the head of the edge out of v, or -1.
    static DirectedGraph from_successors(std::vector<int> successors);

    /// Adds (tail, head). Re-adding an existing edge is a no-op; a second,
    /// different out-edge is rejected.
    void add_edge(int tail, int head);

    std::size_t size() const noexcept { return succ_.size(); }
    std::optional<int> successor(int v) const;
    const std::vector<int>& successors() const noexcept { return succ_; }
    std::vector<std::vector<int>> predecessors() const;
    std::size_t edge_count() const noexcept;
    std::size_t root_count() const noexcept { return size() - edge_count(); }

    /// Vertex v of *this becomes vertex new_id[v] of the result.
    DirectedGraph relabeled(std::span<const int> new_id) const;

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

private:
    std::vector<int> succ_;
};

/// Canonical representative of an isomorphism class of aromatic graphs.
/// Immutable; ordered and compared by canonical text.
class AromaticForest {
public:
    /// The empty forest, the unit "1".
    AromaticForest();

    const std::string& text() const noexcept { return text_; }
    const DirectedGraph& graph() const noexcept { return graph_; }
    std::size_t size() const noexcept { return graph_.size(); }
    std::size_t root_count() const noexcept { return root_count_; }
    std::uint64_t sigma() const noexcept { return sigma_; }
    bool is_unit() const noexcept { return graph_.size() == 0; }

    /// Connected components, each as its own canonical forest, in text order.
    std::vector<AromaticForest> components() const;

    friend bool operator==(const AromaticForest& a, const AromaticForest& b) { return a.text_ == b.text_; }
    friend std::strong_ordering operator<=>(const AromaticForest& a, const AromaticForest& b)
    {
        return a.text_ <=> b.text_;
    }

private:
    friend AromaticForest canonicalize(const DirectedGraph& g);

    std::string text_;
    DirectedGraph graph_;
    std::size_t root_count_ = 0;
    std::uint64_t sigma_ = 1;
};

/// Membership flags for the standard subsets of aromatic forests.
struct ForestClass {
    bool is_rootless = false;            // no roots
    bool is_connected_rootless = false;  // a single aroma
    bool is_aromatic_tree = false;       // exactly one root
    bool is_rooted_tree = false;         // connected, one root
    bool is_loopless_forest = false;     // no cycles
};

/// Filters accepted by `enumerate`.
enum class ForestFilter { AF, AT, T, A, AConnected, F };

ForestClass classify(const AromaticForest& forest);
bool matches(ForestFilter filter, const AromaticForest& forest);
ForestFilter parse_filter(std::string_view name);

AromaticForest canonicalize(const DirectedGraph& g);
AromaticForest parse(std::string_view text);
std::string render(const AromaticForest& forest);

/// Builds the (not yet canonical) graph described by `text`, numbering
/// vertices in order of appearance.
DirectedGraph parse_graph(std::string_view text);

/// Order of the automorphism group, computed structurally.
std::uint64_t sigma(const AromaticForest& forest);

/// Exhaustive edge-preserving vertex permutations of the canonical graph;
/// perm[v] is the image of v. Throws std::length_error above `size_bound`.
std::vector<std::vector<int>> automorphisms(const AromaticForest& forest, std::size_t size_bound = 10);

/// All canonical forests with exactly n vertices in the class, in graded order.
std::vector<AromaticForest> enumerate(std::size_t n, ForestFilter filter);
/// Concatenation of `enumerate(k, filter)` for k = 0..max_size.
std::vector<AromaticForest> enumerate_up_to(std::size_t max_size, ForestFilter filter);

/// Size, then number of components, then text. Used for presentation order.
bool graded_less(const AromaticForest& a, const AromaticForest& b);

/// Disjoint union.
AromaticForest concat(const AromaticForest& a, const AromaticForest& b);

/// Removes the edge out of canonical vertex v; throws std::invalid_argument if v is a root.
AromaticForest delete_out_edge(const AromaticForest& forest, int v);

/// Canonical forest of the subgraph of g induced by the vertices in `mask`.
AromaticForest induced_forest(const DirectedGraph& g, std::uint64_t mask);

}  // namespace aromatic

template <>
struct std::hash<aromatic::AromaticForest> {
    std::size_t operator()(const aromatic::AromaticForest& f) const noexcept
    {
        return std::hash<std::string>{}(f.text());
    }
};
