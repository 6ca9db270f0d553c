#pragma once

#include "lsl/graph.hpp"
#include "lsl/layout.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsl {

/// One defect found in a layout. Witness edges carry the shared channel id
/// for crossing/nesting violations.
struct Violation {
    enum class Kind { crossing, nesting, layer_order, bound, coverage };

    Kind kind = Kind::coverage;
    std::optional<Edge> edge_a;
    std::optional<Edge> edge_b;
    std::optional<int> vertex_a;
    std::optional<int> vertex_b;
    long long channel = -1;
    std::string detail;
};

const char* to_string(Violation::Kind kind);

/// Crossing check for stack layouts: one violation per unordered pair of
/// same-channel edges whose endpoint positions strictly interleave, plus
/// coverage violations for edges of g missing from the assignment (or
/// assigned edges absent from g). Edges sharing an endpoint never violate.
std::vector<Violation> check_stack_validity(const Graph& g, const LinearLayout& layout);

/// Nesting check for queue layouts, symmetric to the above.
std::vector<Violation> check_queue_validity(const Graph& g, const LinearLayout& layout);

/// Violations of the layer-by-layer invariant: a vertex placed before some
/// vertex of a lower layer. One witness pair per descent in the order.
std::vector<Violation> check_layer_by_layer(const std::vector<int>& order, const Layering& layering);

/// 5*ell*floor(log2 n) for stack layouts, 3*ell*floor(log2 n) for queues.
long long channel_bound(LayoutKind kind, int ell, int n);

/// Bound checks: total distinct channels within channel_bound, classes
/// consistent with the layout kind, per-depth slots within 1..ell (intra)
/// and 1..2*ell (inter classes), depths non-negative.
std::vector<Violation> check_bounds(const LinearLayout& layout, int ell, int n);

/// Validity + bounds (+ layer order when a layering is supplied) in one
/// call; the union of the individual checks.
std::vector<Violation> check_layout(const Graph& g, const LinearLayout& layout,
                                    const Layering* layering, int ell);

} // namespace lsl
