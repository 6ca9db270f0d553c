#pragma once

#include "lsl/graph.hpp"

#include <iosfwd>
#include <vector>

namespace lsl {

/// Combinatorial embedding: for each vertex, its neighbors in
/// counterclockwise cyclic order.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

/// Throws input_error unless every rotation list is a permutation of the
/// vertex's adjacency list.
void validate_rotation(const Graph& g, const RotationSystem& rot);

/// Number of faces traced from the rotation system. Requires a validated
/// rotation; counts orbits of the face-successor permutation on directed
/// edges.
int count_faces(const Graph& g, const RotationSystem& rot);

/// Planarity gate for embedded inputs: connected + V - E + F = 2.
/// Throws input_error when either check fails.
void require_planar_embedding(const Graph& g, const RotationSystem& rot);

/// Face boundary walks as closed vertex sequences (w0, w1, ..., w_{k-1})
/// with directed edges w_i -> w_{i+1 mod k}. Walks may repeat vertices when
/// the graph is not 2-connected.
std::vector<std::vector<int>> face_walks(const Graph& g, const RotationSystem& rot);

// Embedding text format: first line "n", then n lines "deg v1 ... vdeg"
// giving each vertex's neighbors in counterclockwise order.
RotationSystem read_rotation(std::istream& in);
void write_rotation(std::ostream& out, const RotationSystem& rot);
RotationSystem read_rotation_file(const std::string& path);

} // namespace lsl
