#pragma once
// Forest collapse and allowed expansion: the face/coface moves between
// basepointed graphs with rotation systems.

#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

// A way to split `vertex` into two: arc_a and arc_b partition its half-edges.
// In rotation mode both arcs must be consecutive runs of the cyclic order; in
// plain mode any bipartition qualifies.  When `vertex` is the basepoint,
// base_on_a selects which side keeps it (both choices are distinct splits);
// elsewhere the flag is ignored.
struct arc_partition {
    int vertex = 0;
    std::vector<int> arc_a, arc_b;
    bool base_on_a = true;
};

// Contraction result plus the half-edge relabeling it induced (old index ->
// new dense index, -1 for the two removed halves).
struct collapse_result {
    graph g;
    std::vector<int> half_map;
};

// True when the edge set is loop-free and acyclic in the underlying graph.
bool forest_ok(const graph& g, const std::vector<int>& edges);

// Contract one non-loop edge.  The two endpoint rotations are spliced at the
// removed positions: the surviving cycle is u's cycle with h replaced by v's
// cycle read from sigma(h') around to the predecessor of h' (h' = alpha(h)).
// This is the unique splice inverse to allowed expansion.
collapse_result collapse_edge(const graph& g, int edge_id);

// Contract a forest edge-by-edge (result is order-independent; asserted in
// tests, not assumed).  Throws on a loop or a cycle in `edges`.
collapse_result collapse_forest(const graph& g, const std::vector<int>& edges);

// Every non-empty forest, as sorted edge-name lists, in a deterministic order.
std::vector<std::vector<int>> forests(const graph& g);

// All unordered {A,B} splittings of the half-edges at `vertex`: consecutive
// cyclic arcs (rotation mode) or arbitrary bipartitions (plain mode).
// Unfiltered; base_on_a left at its default.
std::vector<arc_partition> vertex_partitions(const graph& g, int vertex);

// Splittings that produce a graph passing validate(), with both basepoint
// sides enumerated when `vertex` is the basepoint.  unfiltered=true escapes
// the validity filter (keeps one base_on_a per partition).
std::vector<arc_partition> allowed_expansions(const graph& g, int vertex, bool unfiltered = false);

// Split a vertex along the partition: one new edge, two new vertices with
// rotations A + new half and B + new half at the cut positions.  The two new
// half-edges take the next indices (old halfedge count and +1).  Collapsing
// the new edge undoes the move exactly.
graph expand(const graph& g, const arc_partition& part);

}  // namespace ribbon
