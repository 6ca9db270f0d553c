#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsl {

/// Bad user input: malformed files, invalid layerings, broken preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive-search routine was asked for an instance above its size cap.
struct size_guard_error : std::runtime_error {
    explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Edges are kept sorted and deduplicated (canonical order); adjacency
/// lists mirror the edge set and are sorted ascending. Immutable after
/// construction.
class Graph {
  public:
    Graph() = default;

    /// Throws input_error on self-loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int a, int b) const;

    /// Index of edge {a,b} in edges(), or -1.
    int edge_index(int a, int b) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Vertex -> layer index map. Valid layerings let every edge stay within a
/// layer or join consecutive layers; empty layers may occur in restrictions
/// to induced subgraphs.
class Layering {
  public:
    Layering() = default;

    /// Throws input_error on negative layer indices.
    explicit Layering(std::vector<int> layer_of);

    int layer(int v) const { return layer_of_.at(static_cast<size_t>(v)); }
    int size() const { return static_cast<int>(layer_of_.size()); }

    /// max layer index + 1 (0 for an empty layering).
    int num_layers() const { return num_layers_; }

    const std::vector<int>& layer_map() const { return layer_of_; }

  private:
    std::vector<int> layer_of_;
    int num_layers_ = 0;
};

/// Bidirectional id translation between a graph and one of its induced
/// subgraphs. Subgraph ids are assigned in ascending parent-id order.
struct VertexSubsetMap {
    std::vector<int> to_parent; // sub id -> parent id
    std::vector<int> to_sub;    // parent id -> sub id, -1 if absent

    int parent_of(int s) const { return to_parent.at(static_cast<size_t>(s)); }
    int sub_of(int p) const { return to_sub.at(static_cast<size_t>(p)); }
    bool contains_parent(int p) const { return to_sub.at(static_cast<size_t>(p)) >= 0; }
};

struct BfsTree {
    int root = 0;
    Layering layering;       // layer(v) = BFS distance from root
    std::vector<int> parent; // parent[root] = -1
};

/// BFS-distance layering. Throws input_error if some vertex is unreachable
/// from root (the message names one).
Layering bfs_layering(const Graph& g, int root);

/// BFS layering plus the tree parent map.
BfsTree bfs_tree(const Graph& g, int root);

/// Every edge whose endpoint layers differ by two or more. Empty iff valid.
std::vector<Edge> validate_layering(const Graph& g, const Layering& layering);

/// Subgraph induced by `subset` plus the id translation map.
/// Throws input_error on out-of-range or duplicate ids.
std::pair<Graph, VertexSubsetMap> induced_subgraph(const Graph& g, const std::vector<int>& subset);

/// Layering of the subgraph keeping the parent's layer indices.
Layering restrict_layering(const Layering& layering, const VertexSubsetMap& map);

/// Connected components, each sorted ascending, ordered by minimum vertex id.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Text formats: graph files are "n m" then m lines "u v"; layering files
// are n lines, line v holding the layer of vertex v.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
Layering read_layering(std::istream& in, int n);
void write_layering(std::ostream& out, const Layering& layering);
Layering read_layering_file(const std::string& path, int n);

} // namespace lsl
