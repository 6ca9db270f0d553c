#include "lsl/layout.hpp"

#include <algorithm>
#include <set>

namespace lsl {

long long flatten_channel(LayoutKind kind, int ell, const ChannelId& id) {
    long long base = static_cast<long long>(id.depth) * (kind == LayoutKind::stack ? 5 : 3) * ell;
    long long offset = 0;
    switch (id.cls) {
        case ChannelClass::intra: offset = 0; break;
        case ChannelClass::even_inter:
            if (kind != LayoutKind::stack) throw input_error("even_inter channel in a queue layout");
            offset = ell;
            break;
        case ChannelClass::odd_inter:
            if (kind != LayoutKind::stack) throw input_error("odd_inter channel in a queue layout");
            offset = 3LL * ell;
            break;
        case ChannelClass::inter:
            if (kind != LayoutKind::queue) throw input_error("inter channel in a stack layout");
            offset = ell;
            break;
    }
    return base + offset + (id.slot - 1);
}

std::vector<int> LinearLayout::positions() const {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (int p = 0; p < n; ++p) {
        int v = order[static_cast<size_t>(p)];
        if (v < 0 || v >= n || pos[static_cast<size_t>(v)] != -1)
            throw input_error("layout order is not a permutation of the vertices");
        pos[static_cast<size_t>(v)] = p;
    }
    return pos;
}

int count_distinct_channels(const LinearLayout& layout) {
    std::set<long long> flats;
    for (const auto& [edge, id] : layout.assignment) flats.insert(layout.flat_channel(id));
    return static_cast<int>(flats.size());
}

const char* to_string(LayoutKind kind) {
    return kind == LayoutKind::stack ? "stack" : "queue";
}

const char* to_string(ChannelClass cls) {
    switch (cls) {
        case ChannelClass::intra: return "intra";
        case ChannelClass::even_inter: return "even_inter";
        case ChannelClass::odd_inter: return "odd_inter";
        case ChannelClass::inter: return "inter";
    }
    return "?";
}

LayoutKind layout_kind_from_string(const std::string& s) {
    if (s == "stack") return LayoutKind::stack;
    if (s == "queue") return LayoutKind::queue;
    throw input_error("unknown layout kind: " + s);
}

ChannelClass channel_class_from_string(const std::string& s) {
    if (s == "intra") return ChannelClass::intra;
    if (s == "even_inter") return ChannelClass::even_inter;
    if (s == "odd_inter") return ChannelClass::odd_inter;
    if (s == "inter") return ChannelClass::inter;
    throw input_error("unknown channel class: " + s);
}

namespace {

std::vector<int> merge_layers(const LayeredOrder& rho, const std::vector<LayeredOrder>& children,
                              bool alternate) {
    std::set<int> layers;
    for (const auto& [layer, list] : rho) layers.insert(layer);
    for (const auto& child : children)
        for (const auto& [layer, list] : child) layers.insert(layer);

    std::vector<int> merged;
    for (int layer : layers) {
        if (auto it = rho.find(layer); it != rho.end())
            merged.insert(merged.end(), it->second.begin(), it->second.end());
        auto append_child = [&](const LayeredOrder& child) {
            if (auto it = child.find(layer); it != child.end())
                merged.insert(merged.end(), it->second.begin(), it->second.end());
        };
        if (alternate && layer % 2 == 1) {
            for (auto it = children.rbegin(); it != children.rend(); ++it) append_child(*it);
        } else {
            for (const auto& child : children) append_child(child);
        }
    }
    return merged;
}

int rank_in_rho(const SeparatorCert& cert, int layer, int v) {
    auto it = cert.per_layer.find(layer);
    if (it == cert.per_layer.end()) return 0;
    for (size_t i = 0; i < it->second.size(); ++i) {
        if (it->second[i] == v) return static_cast<int>(i) + 1;
    }
    return 0;
}

ChannelId assign_separator_edge(LayoutKind kind, Edge e, const Layering& layering,
                                const SeparatorCert& cert, int depth) {
    int lu = layering.layer(e.u);
    int lv = layering.layer(e.v);
    if (lu == lv) {
        // Separator vertices precede component vertices inside a layer, so
        // the endpoint earlier in the layout order is the one in S; with
        // both in S, the earlier one has the smaller rho rank.
        int ru = rank_in_rho(cert, lu, e.u);
        int rv = rank_in_rho(cert, lv, e.v);
        int slot = 0;
        if (ru && rv) slot = std::min(ru, rv);
        else slot = std::max(ru, rv);
        if (slot == 0)
            throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has no endpoint in the separator");
        return {depth, ChannelClass::intra, slot};
    }
    if (lu - lv > 1 || lv - lu > 1)
        throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") spans more than one layer");
    int lower = lu < lv ? e.u : e.v;
    int upper = lu < lv ? e.v : e.u;
    int i = std::min(lu, lv);
    ChannelClass cls = kind == LayoutKind::queue
                           ? ChannelClass::inter
                           : (i % 2 == 0 ? ChannelClass::even_inter : ChannelClass::odd_inter);
    if (int x = rank_in_rho(cert, i, lower); x > 0) return {depth, cls, x};
    if (int y = rank_in_rho(cert, i + 1, upper); y > 0) return {depth, cls, cert.ell + y};
    throw input_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has no endpoint in the separator");
}

struct LayoutBuilder {
    LayoutKind kind;
    int ell;
    const Layering& root_layering;
    const SeparatorProvider& find;
    std::map<Edge, ChannelId> assignment;

    std::vector<int> build(const Graph& sub, const Layering& subL, const std::vector<int>& ids,
                           int depth) {
        const int n = sub.num_vertices();
        if (n == 0) return {};
        if (n == 1) return {ids[0]};

        SeparatorCert cert = find(sub, subL, ids);
        auto bad = verify_separator(sub, subL, cert);
        if (!bad.empty())
            throw std::runtime_error("separator provider returned an invalid certificate: " +
                                     bad.front());
        for (const auto& [layer, rho] : cert.per_layer) {
            if (static_cast<int>(rho.size()) > ell)
                throw std::runtime_error("separator provider exceeded the per-layer cap " +
                                         std::to_string(ell));
        }
        cert.ell = ell; // slot arithmetic uses the construction-wide ell

        std::vector<char> in_sep(static_cast<size_t>(n), 0);
        for (int v : cert.vertices) in_sep[static_cast<size_t>(v)] = 1;

        for (const Edge& e : sub.edges()) {
            if (!in_sep[static_cast<size_t>(e.u)] && !in_sep[static_cast<size_t>(e.v)]) continue;
            ChannelId id = assign_separator_edge(kind, e, subL, cert, depth);
            assignment[Edge(ids[static_cast<size_t>(e.u)], ids[static_cast<size_t>(e.v)])] = id;
        }

        LayeredOrder rho;
        for (const auto& [layer, list] : cert.per_layer) {
            for (int v : list) rho[layer].push_back(ids[static_cast<size_t>(v)]);
        }

        std::vector<int> rest;
        for (int v = 0; v < n; ++v) {
            if (!in_sep[static_cast<size_t>(v)]) rest.push_back(v);
        }
        auto [rest_graph, rest_map] = induced_subgraph(sub, rest);

        std::vector<LayeredOrder> children;
        for (const auto& comp : connected_components(rest_graph)) {
            std::vector<int> comp_in_sub;
            comp_in_sub.reserve(comp.size());
            for (int c : comp) comp_in_sub.push_back(rest_map.parent_of(c));
            auto [child_graph, child_map] = induced_subgraph(sub, comp_in_sub);
            std::vector<int> child_ids;
            child_ids.reserve(child_map.to_parent.size());
            for (int s : child_map.to_parent) child_ids.push_back(ids[static_cast<size_t>(s)]);
            Layering child_layering = restrict_layering(subL, child_map);
            std::vector<int> child_order = build(child_graph, child_layering, child_ids, depth + 1);
            LayeredOrder by_layer;
            for (int v : child_order) by_layer[root_layering.layer(v)].push_back(v);
            children.push_back(std::move(by_layer));
        }
        return kind == LayoutKind::stack ? boustrophedon_merge(rho, children)
                                         : ascending_merge(rho, children);
    }
};

LinearLayout construct_layout(LayoutKind kind, const Graph& g, const Layering& layering,
                              const SeparatorProvider& find, int ell) {
    if (ell < 0) throw input_error("layout construction: negative ell");
    auto bad_edges = validate_layering(g, layering);
    if (!bad_edges.empty())
        throw input_error("invalid layering: edge (" + std::to_string(bad_edges.front().u) + "," +
                          std::to_string(bad_edges.front().v) + ") spans layers " +
                          std::to_string(layering.layer(bad_edges.front().u)) + " and " +
                          std::to_string(layering.layer(bad_edges.front().v)));

    LayoutBuilder builder{kind, ell, layering, find, {}};
    std::vector<int> ids(static_cast<size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) ids[static_cast<size_t>(v)] = v;

    LinearLayout layout;
    layout.kind = kind;
    layout.ell = ell;
    layout.order = builder.build(g, layering, ids, 0);
    layout.assignment = std::move(builder.assignment);
    layout.channel_count = count_distinct_channels(layout);
    return layout;
}

} // namespace

std::vector<int> boustrophedon_merge(const LayeredOrder& rho,
                                     const std::vector<LayeredOrder>& children) {
    return merge_layers(rho, children, true);
}

std::vector<int> ascending_merge(const LayeredOrder& rho, const std::vector<LayeredOrder>& children) {
    return merge_layers(rho, children, false);
}

ChannelId assign_separator_edge_stack(Edge e, const Layering& layering, const SeparatorCert& cert,
                                      int depth) {
    return assign_separator_edge(LayoutKind::stack, e, layering, cert, depth);
}

ChannelId assign_separator_edge_queue(Edge e, const Layering& layering, const SeparatorCert& cert,
                                      int depth) {
    return assign_separator_edge(LayoutKind::queue, e, layering, cert, depth);
}

SeparatorProvider exact_separator_provider(int ell, int max_vertices) {
    return [ell, max_vertices](const Graph& sub, const Layering& subL,
                               const std::vector<int>&) -> SeparatorCert {
        auto cert = find_layered_separator_exact(sub, subL, ell, max_vertices);
        if (!cert)
            throw separator_unavailable("no layered " + std::to_string(ell) +
                                        "-separator exists for a recursion subgraph with " +
                                        std::to_string(sub.num_vertices()) + " vertices");
        return std::move(*cert);
    };
}

SeparatorProvider planar_separator_provider(std::shared_ptr<const PlanarSeparatorSource> source) {
    if (!source) throw input_error("planar provider: null source");
    return [source](const Graph& sub, const Layering& subL,
                    const std::vector<int>& root_ids) -> SeparatorCert {
        return source->find(sub, subL, root_ids);
    };
}

LinearLayout construct_stack_layout(const Graph& g, const Layering& layering,
                                    const SeparatorProvider& find, int ell) {
    return construct_layout(LayoutKind::stack, g, layering, find, ell);
}

LinearLayout construct_queue_layout(const Graph& g, const Layering& layering,
                                    const SeparatorProvider& find, int ell) {
    return construct_layout(LayoutKind::queue, g, layering, find, ell);
}

LinearLayout construct_layout_auto_ell(LayoutKind kind, const Graph& g, const Layering& layering,
                                       int max_vertices) {
    int largest_layer = 0;
    std::map<int, int> layer_sizes;
    for (int v = 0; v < g.num_vertices(); ++v) ++layer_sizes[layering.layer(v)];
    for (const auto& [layer, count] : layer_sizes) largest_layer = std::max(largest_layer, count);
    for (int ell = 0; ell <= largest_layer; ++ell) {
        try {
            return construct_layout(kind, g, layering, exact_separator_provider(ell, max_vertices),
                                    ell);
        } catch (const separator_unavailable&) {
            continue;
        }
    }
    // ell = largest layer admits S = V(sub) at every recursion step.
    throw std::logic_error("auto-ell construction exhausted its range");
}

} // namespace lsl
