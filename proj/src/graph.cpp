#include "lsl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace lsl {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw input_error("graph: negative vertex count");
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw input_error("graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw input_error("graph: edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") out of range for n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(n), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int a, int b) const {
    return edge_index(a, b) >= 0;
}

int Graph::edge_index(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

Layering::Layering(std::vector<int> layer_of) : layer_of_(std::move(layer_of)) {
    for (size_t v = 0; v < layer_of_.size(); ++v) {
        if (layer_of_[v] < 0)
            throw input_error("layering: negative layer for vertex " + std::to_string(v));
        num_layers_ = std::max(num_layers_, layer_of_[v] + 1);
    }
}

Layering bfs_layering(const Graph& g, int root) {
    return bfs_tree(g, root).layering;
}

BfsTree bfs_tree(const Graph& g, int root) {
    const int n = g.num_vertices();
    if (root < 0 || root >= n)
        throw input_error("bfs: root " + std::to_string(root) + " out of range");
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::queue<int> queue;
    dist[static_cast<size_t>(root)] = 0;
    queue.push(root);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] >= 0) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
            parent[static_cast<size_t>(w)] = v;
            queue.push(w);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (dist[static_cast<size_t>(v)] < 0)
            throw input_error("bfs: vertex " + std::to_string(v) + " unreachable from root " +
                              std::to_string(root));
    }
    BfsTree tree;
    tree.root = root;
    tree.layering = Layering(std::move(dist));
    tree.parent = std::move(parent);
    return tree;
}

std::vector<Edge> validate_layering(const Graph& g, const Layering& layering) {
    if (layering.size() != g.num_vertices())
        throw input_error("layering covers " + std::to_string(layering.size()) + " vertices, graph has " +
                          std::to_string(g.num_vertices()));
    std::vector<Edge> bad;
    for (const Edge& e : g.edges()) {
        int d = layering.layer(e.u) - layering.layer(e.v);
        if (d < -1 || d > 1) bad.push_back(e);
    }
    return bad;
}

std::pair<Graph, VertexSubsetMap> induced_subgraph(const Graph& g, const std::vector<int>& subset) {
    const int n = g.num_vertices();
    VertexSubsetMap map;
    map.to_sub.assign(static_cast<size_t>(n), -1);
    map.to_parent = subset;
    std::sort(map.to_parent.begin(), map.to_parent.end());
    for (size_t i = 0; i < map.to_parent.size(); ++i) {
        int p = map.to_parent[i];
        if (p < 0 || p >= n)
            throw input_error("induced_subgraph: vertex " + std::to_string(p) + " out of range");
        if (map.to_sub[static_cast<size_t>(p)] >= 0)
            throw input_error("induced_subgraph: duplicate vertex " + std::to_string(p));
        map.to_sub[static_cast<size_t>(p)] = static_cast<int>(i);
    }
    std::vector<Edge> sub_edges;
    for (const Edge& e : g.edges()) {
        int su = map.to_sub[static_cast<size_t>(e.u)];
        int sv = map.to_sub[static_cast<size_t>(e.v)];
        if (su >= 0 && sv >= 0) sub_edges.emplace_back(su, sv);
    }
    return {Graph(static_cast<int>(map.to_parent.size()), std::move(sub_edges)), std::move(map)};
}

Layering restrict_layering(const Layering& layering, const VertexSubsetMap& map) {
    std::vector<int> layers;
    layers.reserve(map.to_parent.size());
    for (int p : map.to_parent) layers.push_back(layering.layer(p));
    return Layering(std::move(layers));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> comp;
        std::queue<int> queue;
        seen[static_cast<size_t>(start)] = true;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = true;
                queue.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // Scanning starts from ascending ids, so components are already ordered
    // by their minimum vertex id.
    return comps;
}

Graph read_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw input_error("graph file: expected header \"n m\"");
    if (n < 0 || m < 0) throw input_error("graph file: negative counts in header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw input_error("graph file: expected edge line " + std::to_string(i + 1) + " of " +
                              std::to_string(m));
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_graph(in);
}

Layering read_layering(std::istream& in, int n) {
    std::vector<int> layers(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (!(in >> layers[static_cast<size_t>(v)]))
            throw input_error("layering file: expected " + std::to_string(n) + " lines, got " +
                              std::to_string(v));
    }
    return Layering(std::move(layers));
}

void write_layering(std::ostream& out, const Layering& layering) {
    for (int v = 0; v < layering.size(); ++v) out << layering.layer(v) << '\n';
}

Layering read_layering_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open layering file: " + path);
    return read_layering(in, n);
}

} // namespace lsl
