#include "lsl/verifier.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace lsl {

namespace {

// Strictly interleaving endpoints: a < c < b < d for spans (a,b), (c,d).
bool interleave(int a, int b, int c, int d) {
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

// One span strictly inside the other: a < c <= d < b or c < a <= b < d.
bool nest(int a, int b, int c, int d) {
    return (a < c && d < b) || (c < a && b < d);
}

std::vector<Violation> check_conflicts(const Graph& g, const LinearLayout& layout,
                                       LayoutKind expected) {
    if (layout.kind != expected)
        throw input_error(std::string("expected a ") + to_string(expected) + " layout, got " +
                          to_string(layout.kind));
    std::vector<Violation> violations;
    const int n = g.num_vertices();

    if (static_cast<int>(layout.order.size()) != n) {
        Violation v;
        v.kind = Violation::Kind::coverage;
        v.detail = "order covers " + std::to_string(layout.order.size()) + " vertices, graph has " +
                   std::to_string(n);
        violations.push_back(std::move(v));
        return violations;
    }
    std::vector<int> pos;
    try {
        pos = layout.positions();
    } catch (const input_error& e) {
        Violation v;
        v.kind = Violation::Kind::coverage;
        v.detail = e.what();
        violations.push_back(std::move(v));
        return violations;
    }

    for (const Edge& e : g.edges()) {
        if (layout.assignment.count(e)) continue;
        Violation v;
        v.kind = Violation::Kind::coverage;
        v.edge_a = e;
        v.detail = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   ") has no channel assignment";
        violations.push_back(std::move(v));
    }

    // Group by flat channel id only; the checker stays independent of how
    // the construction structures its ids.
    std::map<long long, std::vector<Edge>> channels;
    for (const auto& [e, id] : layout.assignment) {
        if (!g.has_edge(e.u, e.v)) {
            Violation v;
            v.kind = Violation::Kind::coverage;
            v.edge_a = e;
            v.detail = "assignment names edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") which is not in the graph";
            violations.push_back(std::move(v));
            continue;
        }
        channels[layout.flat_channel(id)].push_back(e);
    }

    for (const auto& [flat, edges] : channels) {
        for (size_t i = 0; i < edges.size(); ++i) {
            int a = std::min(pos[static_cast<size_t>(edges[i].u)], pos[static_cast<size_t>(edges[i].v)]);
            int b = std::max(pos[static_cast<size_t>(edges[i].u)], pos[static_cast<size_t>(edges[i].v)]);
            for (size_t j = i + 1; j < edges.size(); ++j) {
                int c = std::min(pos[static_cast<size_t>(edges[j].u)],
                                 pos[static_cast<size_t>(edges[j].v)]);
                int d = std::max(pos[static_cast<size_t>(edges[j].u)],
                                 pos[static_cast<size_t>(edges[j].v)]);
                bool offend = expected == LayoutKind::stack ? interleave(a, b, c, d)
                                                            : nest(a, b, c, d);
                if (!offend) continue;
                Violation v;
                v.kind = expected == LayoutKind::stack ? Violation::Kind::crossing
                                                       : Violation::Kind::nesting;
                v.edge_a = edges[i];
                v.edge_b = edges[j];
                v.channel = flat;
                v.detail = std::string(expected == LayoutKind::stack ? "crossing" : "nesting") +
                           " edges in channel " + std::to_string(flat);
                violations.push_back(std::move(v));
            }
        }
    }
    return violations;
}

} // namespace

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::crossing: return "crossing";
        case Violation::Kind::nesting: return "nesting";
        case Violation::Kind::layer_order: return "layer-order";
        case Violation::Kind::bound: return "bound";
        case Violation::Kind::coverage: return "coverage";
    }
    return "?";
}

std::vector<Violation> check_stack_validity(const Graph& g, const LinearLayout& layout) {
    return check_conflicts(g, layout, LayoutKind::stack);
}

std::vector<Violation> check_queue_validity(const Graph& g, const LinearLayout& layout) {
    return check_conflicts(g, layout, LayoutKind::queue);
}

std::vector<Violation> check_layer_by_layer(const std::vector<int>& order,
                                            const Layering& layering) {
    std::vector<Violation> violations;
    int max_layer_seen = -1;
    int max_vertex = -1;
    for (int v : order) {
        int layer = layering.layer(v);
        if (layer < max_layer_seen) {
            Violation viol;
            viol.kind = Violation::Kind::layer_order;
            viol.vertex_a = max_vertex;
            viol.vertex_b = v;
            viol.detail = "vertex " + std::to_string(v) + " (layer " + std::to_string(layer) +
                          ") placed after vertex " + std::to_string(max_vertex) + " (layer " +
                          std::to_string(max_layer_seen) + ")";
            violations.push_back(std::move(viol));
        } else {
            max_layer_seen = layer;
            max_vertex = v;
        }
    }
    return violations;
}

long long channel_bound(LayoutKind kind, int ell, int n) {
    if (n <= 1) return 0;
    int log2_floor = std::bit_width(static_cast<unsigned>(n)) - 1;
    return static_cast<long long>(kind == LayoutKind::stack ? 5 : 3) * ell * log2_floor;
}

std::vector<Violation> check_bounds(const LinearLayout& layout, int ell, int n) {
    std::vector<Violation> violations;
    auto bound_violation = [&](const std::string& detail) {
        Violation v;
        v.kind = Violation::Kind::bound;
        v.detail = detail;
        violations.push_back(std::move(v));
    };

    long long cap = channel_bound(layout.kind, ell, n);
    int used = count_distinct_channels(layout);
    if (used > cap)
        bound_violation(std::to_string(used) + " channels used, bound is " + std::to_string(cap) +
                        " for n=" + std::to_string(n) + ", ell=" + std::to_string(ell));

    // Per-depth slot budgets: ell intra slots, 2*ell per inter class.
    std::map<std::pair<int, ChannelClass>, std::set<int>> slots;
    for (const auto& [edge, id] : layout.assignment) {
        if (id.depth < 0) {
            bound_violation("negative recursion depth on edge (" + std::to_string(edge.u) + "," +
                            std::to_string(edge.v) + ")");
            continue;
        }
        bool intra = id.cls == ChannelClass::intra;
        bool kind_ok = intra || (layout.kind == LayoutKind::stack
                                     ? id.cls == ChannelClass::even_inter ||
                                           id.cls == ChannelClass::odd_inter
                                     : id.cls == ChannelClass::inter);
        if (!kind_ok) {
            bound_violation(std::string("class ") + to_string(id.cls) + " is invalid in a " +
                            to_string(layout.kind) + " layout");
            continue;
        }
        int slot_cap = intra ? ell : 2 * ell;
        if (id.slot < 1 || id.slot > slot_cap) {
            bound_violation("slot " + std::to_string(id.slot) + " outside 1.." +
                            std::to_string(slot_cap) + " for class " + to_string(id.cls) +
                            " at depth " + std::to_string(id.depth));
            continue;
        }
        slots[{id.depth, id.cls}].insert(id.slot);
    }
    for (const auto& [key, used_slots] : slots) {
        int slot_cap = key.second == ChannelClass::intra ? ell : 2 * ell;
        if (static_cast<int>(used_slots.size()) > slot_cap)
            bound_violation("depth " + std::to_string(key.first) + " class " +
                            to_string(key.second) + " uses " + std::to_string(used_slots.size()) +
                            " slots, budget is " + std::to_string(slot_cap));
    }
    return violations;
}

std::vector<Violation> check_layout(const Graph& g, const LinearLayout& layout,
                                    const Layering* layering, int ell) {
    std::vector<Violation> violations = layout.kind == LayoutKind::stack
                                            ? check_stack_validity(g, layout)
                                            : check_queue_validity(g, layout);
    if (layering != nullptr) {
        auto layer_violations = check_layer_by_layer(layout.order, *layering);
        violations.insert(violations.end(), layer_violations.begin(), layer_violations.end());
    }
    auto bound_violations = check_bounds(layout, ell, g.num_vertices());
    violations.insert(violations.end(), bound_violations.begin(), bound_violations.end());
    return violations;
}

} // namespace lsl
