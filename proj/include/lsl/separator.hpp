#pragma once

#include "lsl/embedding.hpp"
#include "lsl/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lsl {

/// Default size cap for the exhaustive separator search. Callers working on
/// known-small structured instances may raise it explicitly.
inline constexpr int kExactSearchMaxVertices = 20;

/// A layered separator with its balance certificate: at most `ell` vertices
/// of S in each layer, and every connected component of G - S holding at
/// most half of G's vertices (2*size <= n, waived for n <= 1).
struct SeparatorCert {
    int ell = 0;
    std::vector<int> vertices;                 // S, ascending
    std::map<int, std::vector<int>> per_layer; // layer -> rho_i, the ordered S-vertices of that layer
    std::vector<int> component_sizes;          // components of G - S, in min-vertex order
};

/// Builds the per-layer lists (ascending vertex id) and component sizes for
/// a given S. Does not check validity.
SeparatorCert make_separator_cert(const Graph& g, const Layering& layering, std::vector<int> separator,
                                  int ell);

/// Independent check of a certificate: per-layer caps, balance of every
/// component of g - S, and internal consistency of the cert's lists.
/// Returns human-readable violations; empty iff valid.
std::vector<std::string> verify_separator(const Graph& g, const Layering& layering,
                                          const SeparatorCert& cert);

/// Exhaustive search for a layered ell-separator, enumerating candidate
/// sets by increasing size and lexicographic order, pruned by the
/// per-layer cap. Returns the first (hence minimum-size, lexicographically
/// least) valid certificate, or nullopt when none exists.
/// Throws size_guard_error when g has more than max_vertices vertices.
std::optional<SeparatorCert> find_layered_separator_exact(const Graph& g, const Layering& layering,
                                                          int ell,
                                                          int max_vertices = kExactSearchMaxVertices);

/// Smallest ell for which the exact search succeeds, with its certificate.
std::pair<int, SeparatorCert> find_min_ell_separator(const Graph& g, const Layering& layering,
                                                     int max_vertices = kExactSearchMaxVertices);

/// Balanced separators for an embedded planar graph and every subgraph of
/// it, as unions of two root paths of one BFS tree. Each root path meets a
/// BFS layer at most once, so certificates carry ell = 2.
///
/// Candidate vertex pairs are scanned in a fixed order: non-tree edges of
/// the graph, then fan chords triangulating the faces, then (as a
/// completeness fallback for degenerate faces) all vertex pairs.
class PlanarSeparatorSource {
  public:
    /// Validates the embedding (Euler check) and tree/layering consistency;
    /// throws input_error on failure.
    PlanarSeparatorSource(const Graph& g, const RotationSystem& rot, const BfsTree& tree);

    /// Certificate for the subgraph `sub` (in sub-local ids), whose
    /// vertices are root_ids in the source graph. subL must be the source
    /// layering restricted to the subset.
    SeparatorCert find(const Graph& sub, const Layering& subL, const std::vector<int>& root_ids) const;

    const Graph& graph() const { return graph_; }
    const BfsTree& tree() const { return tree_; }

  private:
    Graph graph_;
    BfsTree tree_;
    std::vector<std::vector<int>> root_path_;      // sorted vertex set of the root->v tree path
    std::vector<std::pair<int, int>> candidates_;  // non-tree edges, then triangulation chords
};

/// The planar fast path for a whole embedded graph: a layered 2-separator
/// built from two BFS-tree root paths.
SeparatorCert planar_two_path_separator(const Graph& g, const RotationSystem& rot,
                                        const Layering& layering, const std::vector<int>& bfs_parent);

} // namespace lsl
