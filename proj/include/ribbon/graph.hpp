#pragma once
// Basepointed graphs carrying a rotation system, plus their topological
// invariants: boundary walks, surface type, degree, rank, validity.

#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon {

// Errors carry a coarse kind that the CLI maps onto exit codes.
struct error : std::runtime_error {
    enum class kind { invalid_input, capacity, verification, internal };
    kind code;
    error(kind k, const std::string& msg) : std::runtime_error(msg), code(k) {}
};

inline error invalid(const std::string& msg) { return error(error::kind::invalid_input, msg); }
inline error capacity(const std::string& msg) { return error(error::kind::capacity, msg); }
inline error verification(const std::string& msg) { return error(error::kind::verification, msg); }
inline error internal(const std::string& msg) { return error(error::kind::internal, msg); }

// Half-edges are dense indices 0..2E-1.  sigma[h] is the next half-edge
// counterclockwise around the vertex of h; alpha[h] is the other half of h's
// edge (a fixed-point-free involution).  A vertex is a sigma-cycle, named by
// its minimal half-edge; `base` names the basepoint vertex.  An edge is named
// by its minimal half-edge.  When `plain` is set, the cyclic order at each
// vertex carries no meaning — only the partition into vertices does.
struct graph {
    std::vector<int> sigma;
    std::vector<int> alpha;
    int base = 0;
    bool plain = false;

    int halfedges() const { return (int)sigma.size(); }
    int edges() const { return halfedges() / 2; }
    bool operator==(const graph&) const = default;
};

struct surface {
    int genus = 0;
    int punctures = 0;
    bool operator==(const surface&) const = default;
};

struct validity {
    bool connected = false;
    bool valences_ok = false;
    bool basepoint_ok = false;
    bool bridgeless = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Structural sanity: permutation/involution shape, basepoint names a cycle.
// Throws on malformed data.
void check_structure(const graph& g);

// Cycle decomposition of a permutation; each cycle starts at its minimum and
// cycles are listed by ascending minimum.
std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm);

// Vertices as sigma-cycles, each rotated to start at its minimal half-edge,
// sorted by that name.
std::vector<std::vector<int>> vertex_cycles(const graph& g);
// half-edge -> name of its vertex.
std::vector<int> vertex_of(const graph& g);
// Orbits of the face traversal h -> sigma[alpha[h]]; one orbit per boundary
// cycle of the thickened surface.
std::vector<std::vector<int>> face_cycles(const graph& g);
// Edge names (minimal half-edge per alpha-pair), ascending.
std::vector<int> edge_ids(const graph& g);

int valence(const graph& g, int vertex_name);
bool is_loop(const graph& g, int edge_id);
bool is_connected(const graph& g);
bool is_bridge(const graph& g, int edge_id);

surface surface_type(const graph& g);
// Sum of (valence - 2) over non-basepoint vertices.
int degree(const graph& g);
// E - V + 1 (first Betti number of the underlying graph).
int rank(const graph& g);

// Rule-by-rule report: connectivity, non-basepoint valence >= 3, basepoint
// valence >= 2, no separating edge.  The profile only labels the report; both
// profiles share the same rule set.
validity validate(const graph& g, const std::string& profile = "ribbon-space");

// Conjugate sigma and alpha by a permutation of half-edge labels.
graph relabel(const graph& g, const std::vector<int>& perm);
// Reverse every rotation (orientation flip).  Diagnostic use.
graph mirror(const graph& g);

}  // namespace ribbon
