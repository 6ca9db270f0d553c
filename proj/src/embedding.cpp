#include "lsl/embedding.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace lsl {

namespace {

// Position of each neighbor inside rot.order[v], keyed (v, neighbor),
// resolved by binary search per vertex.
struct RotationIndex {
    std::vector<std::vector<std::pair<int, int>>> at; // (neighbor, position), sorted

    explicit RotationIndex(const RotationSystem& rot) {
        at.resize(rot.order.size());
        for (size_t v = 0; v < rot.order.size(); ++v) {
            at[v].reserve(rot.order[v].size());
            for (size_t i = 0; i < rot.order[v].size(); ++i)
                at[v].emplace_back(rot.order[v][i], static_cast<int>(i));
            std::sort(at[v].begin(), at[v].end());
        }
    }

    int position(int v, int neighbor) const {
        const auto& row = at[static_cast<size_t>(v)];
        auto it = std::lower_bound(row.begin(), row.end(), std::pair<int, int>(neighbor, -1));
        return it->second;
    }
};

// Face successor of directed edge u->v with counterclockwise rotations:
// continue to v->w where w is the predecessor of u in rot[v]. This keeps
// the traced face on the left of each directed edge.
int face_next_target(const RotationSystem& rot, const RotationIndex& index, int u, int v) {
    const auto& ring = rot.order[static_cast<size_t>(v)];
    int pos = index.position(v, u);
    int prev = (pos == 0) ? static_cast<int>(ring.size()) - 1 : pos - 1;
    return ring[static_cast<size_t>(prev)];
}

template <typename PerFace>
void trace_faces(const Graph& g, const RotationSystem& rot, PerFace&& per_face) {
    RotationIndex index(rot);
    const auto& edges = g.edges();
    std::vector<bool> used(edges.size() * 2, false); // 2e: u->v, 2e+1: v->u
    auto dir_id = [&](int e, int from) {
        return static_cast<size_t>(2 * e) + (edges[static_cast<size_t>(e)].u == from ? 0u : 1u);
    };
    for (size_t start = 0; start < used.size(); ++start) {
        if (used[start]) continue;
        int e = static_cast<int>(start / 2);
        int u = (start % 2 == 0) ? edges[static_cast<size_t>(e)].u : edges[static_cast<size_t>(e)].v;
        int v = (start % 2 == 0) ? edges[static_cast<size_t>(e)].v : edges[static_cast<size_t>(e)].u;
        std::vector<int> walk;
        int cu = u, cv = v;
        do {
            used[dir_id(g.edge_index(cu, cv), cu)] = true;
            walk.push_back(cu);
            int w = face_next_target(rot, index, cu, cv);
            cu = cv;
            cv = w;
        } while (!(cu == u && cv == v));
        per_face(std::move(walk));
    }
}

} // namespace

void validate_rotation(const Graph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.order.size()) != g.num_vertices())
        throw input_error("rotation system covers " + std::to_string(rot.order.size()) +
                          " vertices, graph has " + std::to_string(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> ring = rot.order[static_cast<size_t>(v)];
        std::sort(ring.begin(), ring.end());
        if (ring != g.neighbors(v))
            throw input_error("rotation at vertex " + std::to_string(v) +
                              " does not match its adjacency list");
    }
}

int count_faces(const Graph& g, const RotationSystem& rot) {
    int faces = 0;
    trace_faces(g, rot, [&](std::vector<int>&&) { ++faces; });
    return faces;
}

void require_planar_embedding(const Graph& g, const RotationSystem& rot) {
    validate_rotation(g, rot);
    if (g.num_vertices() == 0) throw input_error("embedding: empty graph");
    if (static_cast<int>(connected_components(g).size()) != 1)
        throw input_error("embedding: graph is disconnected");
    int faces = count_faces(g, rot);
    int euler = g.num_vertices() - g.num_edges() + faces;
    if (euler != 2)
        throw input_error("rotation system is not planar: V - E + F = " + std::to_string(euler) +
                          " (expected 2)");
}

std::vector<std::vector<int>> face_walks(const Graph& g, const RotationSystem& rot) {
    std::vector<std::vector<int>> walks;
    trace_faces(g, rot, [&](std::vector<int>&& walk) { walks.push_back(std::move(walk)); });
    return walks;
}

RotationSystem read_rotation(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 0) throw input_error("embedding file: expected vertex count");
    RotationSystem rot;
    rot.order.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        int deg = 0;
        if (!(in >> deg) || deg < 0)
            throw input_error("embedding file: expected degree of vertex " + std::to_string(v));
        rot.order[static_cast<size_t>(v)].resize(static_cast<size_t>(deg));
        for (int i = 0; i < deg; ++i) {
            if (!(in >> rot.order[static_cast<size_t>(v)][static_cast<size_t>(i)]))
                throw input_error("embedding file: truncated rotation of vertex " + std::to_string(v));
        }
    }
    return rot;
}

void write_rotation(std::ostream& out, const RotationSystem& rot) {
    out << rot.order.size() << '\n';
    for (const auto& ring : rot.order) {
        out << ring.size();
        for (int w : ring) out << ' ' << w;
        out << '\n';
    }
}

RotationSystem read_rotation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open embedding file: " + path);
    return read_rotation(in);
}

} // namespace lsl
