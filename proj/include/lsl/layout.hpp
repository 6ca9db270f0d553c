#pragma once

#include "lsl/graph.hpp"
#include "lsl/separator.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lsl {

enum class LayoutKind { stack, queue };

/// Edge classes inside a channel id. Stacks split inter-layer edges by the
/// parity of the lower layer; queues keep a single inter-layer class.
enum class ChannelClass { intra, even_inter, odd_inter, inter };

/// Structured channel identifier: recursion depth, edge class, and the
/// 1-based slot within the class (1..ell for intra, 1..2*ell otherwise).
struct ChannelId {
    int depth = 0;
    ChannelClass cls = ChannelClass::intra;
    int slot = 1;

    friend auto operator<=>(const ChannelId&, const ChannelId&) = default;
};

/// Injective flattening of (depth, class, slot) given the construction's
/// ell: stacks pack 5*ell channels per depth, queues 3*ell.
long long flatten_channel(LayoutKind kind, int ell, const ChannelId& id);

/// A vertex order plus an edge -> channel assignment. `kind` says which
/// conflict (crossing vs nesting) the channels avoid.
struct LinearLayout {
    LayoutKind kind = LayoutKind::stack;
    int ell = 0;
    std::vector<int> order;               // position -> vertex
    std::map<Edge, ChannelId> assignment; // every edge of the graph
    int channel_count = 0;                // distinct flattened channel ids

    /// vertex -> position; throws input_error if order is not a permutation.
    std::vector<int> positions() const;

    long long flat_channel(const ChannelId& id) const { return flatten_channel(kind, ell, id); }
};

int count_distinct_channels(const LinearLayout& layout);

const char* to_string(LayoutKind kind);
const char* to_string(ChannelClass cls);
LayoutKind layout_kind_from_string(const std::string& s);
ChannelClass channel_class_from_string(const std::string& s);

/// layer -> ordered vertices of that layer.
using LayeredOrder = std::map<int, std::vector<int>>;

/// Merge for the stack ordering: per layer, the separator vertices first,
/// then the component orders — ascending component label on even layers,
/// descending on odd ones. Layers are concatenated in increasing index.
std::vector<int> boustrophedon_merge(const LayeredOrder& rho,
                                     const std::vector<LayeredOrder>& children);

/// Merge for the queue ordering: separator first, then components in
/// ascending label order on every layer.
std::vector<int> ascending_merge(const LayeredOrder& rho, const std::vector<LayeredOrder>& children);

/// Channel for an edge with at least one endpoint in cert's separator.
/// Intra-layer edges go to the slot of their separator endpoint that comes
/// first in the layout order; inter-layer edges take the lower endpoint's
/// slot when it is in S, else ell + the upper endpoint's slot.
/// Throws input_error when neither endpoint lies in the separator.
ChannelId assign_separator_edge_stack(Edge e, const Layering& layering, const SeparatorCert& cert,
                                      int depth);
ChannelId assign_separator_edge_queue(Edge e, const Layering& layering, const SeparatorCert& cert,
                                      int depth);

/// Separator provider used by the recursive constructions. Receives each
/// recursion subgraph with its restricted layering (original layer indices)
/// and the subgraph's vertex ids in the root graph; returns a certificate
/// in sub-local ids whose per-layer lists stay within the construction ell.
using SeparatorProvider =
    std::function<SeparatorCert(const Graph& sub, const Layering& subL, const std::vector<int>& root_ids)>;

/// Thrown by providers that cannot produce a separator for a subgraph.
struct separator_unavailable : std::runtime_error {
    explicit separator_unavailable(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive provider with a fixed per-layer cap.
SeparatorProvider exact_separator_provider(int ell, int max_vertices = kExactSearchMaxVertices);

/// Provider backed by one embedded planar source graph (ell = 2).
SeparatorProvider planar_separator_provider(std::shared_ptr<const PlanarSeparatorSource> source);

/// The recursive stack-layout construction: ordering by boustrophedon
/// merge, separator edges assigned per depth, components recursed with
/// shared channels. Uses at most 5*ell*floor(log2 n) stacks.
LinearLayout construct_stack_layout(const Graph& g, const Layering& layering,
                                    const SeparatorProvider& find, int ell);

/// The recursive queue-layout construction; at most 3*ell*floor(log2 n)
/// queues.
LinearLayout construct_queue_layout(const Graph& g, const Layering& layering,
                                    const SeparatorProvider& find, int ell);

/// Runs the construction with the exhaustive provider at the smallest ell
/// for which every recursion step finds a separator. Stores that ell in
/// the returned layout.
LinearLayout construct_layout_auto_ell(LayoutKind kind, const Graph& g, const Layering& layering,
                                       int max_vertices = kExactSearchMaxVertices);

} // namespace lsl
