#pragma once
// Canonical codes, isomorphism, and automorphisms of basepointed graphs.
// Equal codes mean: an orientation-preserving, basepoint-preserving
// isomorphism of rotation systems exists (rotation mode), or a
// basepoint-preserving isomorphism of underlying multigraphs (plain mode).

#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

using code = std::vector<int>;

// Relabeling-invariant fingerprint.  Rotation mode: lexicographic minimum over
// root choices at the basepoint of a breadth-first renumbering; mirror images
// are NOT identified.  Plain mode (g.plain): minimum over vertex orderings of
// the edge multiset, basepoint first.  oriented=false additionally minimizes
// over the mirror (diagnostic use only).
code canonical_code(const graph& g, bool oriented = true);

std::string code_string(const code& c);

bool is_isomorphic(const graph& a, const graph& b);

// All basepoint-fixing symmetries as half-edge permutations.  Rotation mode
// preserves cyclic orders; plain mode preserves only the vertex partition and
// alpha.  Always contains the identity.
std::vector<std::vector<int>> automorphisms(const graph& g);

// The action of automorphisms on edge names, deduplicated: maps over the
// edge_ids(g) list, given as perm[edge position] = image edge position.
std::vector<std::vector<int>> edge_automorphisms(const graph& g);

// Exhaustive anchored search for an isomorphism; independent of the code path
// (used as an oracle in tests).
bool brute_isomorphic(const graph& a, const graph& b);

}  // namespace ribbon
