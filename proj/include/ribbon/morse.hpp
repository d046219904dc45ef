#pragma once
// Metric graphs, height functions, critical structure, canonical splitting,
// and the attaching machinery for sliding branches near critical vertices.
// All arithmetic is exact rational: critical-point detection is an
// equality/ordering predicate and must not see rounding.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "ribbon/graph.hpp"

namespace ribbon {

using rat = mpq_class;

rat rat_of(long num, long den = 1);
rat parse_rat(const std::string& text);  // "p/q" or "p", q >= 1
std::string rat_string(const rat& r);

// Lengths are stored per half-edge with both halves equal, so lookups never
// need the edge table.
struct metric_graph {
    graph g;
    std::vector<rat> length;
    bool normalized = false;
};

metric_graph with_unit_lengths(const graph& g);
rat edge_length(const metric_graph& m, int edge_id);
rat total_length(const metric_graph& m);
void set_edge_length(metric_graph& m, int edge_id, const rat& value);
// Scale so the lengths sum to 1 and set the flag.
void normalize(metric_graph& m);

// Shortest-path distance to the basepoint, per vertex name.
std::map<int, rat> heights(const metric_graph& m);
// Height of the point at `offset` along the edge, measured from the endpoint
// holding the edge's minimal half-edge.
rat height_at(const metric_graph& m, int edge_id, const rat& offset);

// h points strictly downhill from its vertex iff the edge realizes the
// shortest path: h(vertex) = h(other end) + length.
bool is_downward(const metric_graph& m, const std::map<int, rat>& h, int halfedge);

// A critical point: a vertex with >= 2 downward half-edges (codimension =
// that count minus one) or an interior local maximum of the height along an
// edge (codimension 0).
struct critical_point {
    bool interior = false;
    int vertex = -1;              // vertex name, when a vertex
    int edge = -1;                // edge name, when interior
    rat offset;                   // from the minimal-half-edge end, when interior
    rat height;
    int codim = 0;
    std::vector<int> downward;    // downward half-edges (vertices only)
};

// A maximal downhill walk from a critical point: the sequence of arrival
// half-edges, ending at the basepoint or at the first critical vertex meetd.
struct branch {
    int from = -1;                // index into critical_structure::points
    std::vector<int> arrivals;    // half-edge at each vertex reached, in order
    int to = -1;                  // critical point index, or -1 when at base
    bool to_base = false;
    int arrival_half() const { return arrivals.back(); }
};

struct critical_structure {
    std::vector<critical_point> points;
    std::vector<branch> branches;  // every downhill walk, grouped by origin
    int e = 0;                     // walks ending at a critical point
    int c = 0;                     // downhill critical-to-critical paths, composites included
    int graph_codim = 0;
};

critical_structure critical_points(const metric_graph& m);

// Repeatedly contract, highest vertex first, the unique downward edge at each
// non-critical non-basepoint vertex.  Ties process in order of vertex name;
// the result is order-independent (asserted in tests).  The contracted edges
// always form a forest.  Lengths of surviving edges are kept, renormalized at
// the end only if the normalized flag was set.
struct split_result {
    metric_graph m;
    std::vector<int> contracted;  // original edge names, in contraction order
};
split_result canonical_split(const metric_graph& m);
// True when every non-basepoint vertex is critical (split fixed point).
bool is_split(const metric_graph& m);

// Strict upper bound for a legal cone radius: min(shortest edge,
// half the smallest positive gap between distinct critical heights).
rat epsilon_bound(const metric_graph& m);

// Upward half-edges at a critical vertex, grouped into maximal consecutive
// runs of the rotation; each run shares one downward neighbour on each side.
struct attaching_set {
    int vertex = -1;
    std::vector<int> ups;  // in rotation order
    int pos_dir = -1;      // first downward half-edge forward of the run
    int neg_dir = -1;      // first downward half-edge backward of the run
};

struct attaching_structure {
    std::vector<attaching_set> sets;
    std::map<int, int> copies;          // upward half-edge -> branches arriving along it
    std::map<int, int> dim_per_vertex;  // vertex name -> its attaching dimension
    int total_dim = 0;                  // equals critical_structure::e
};

// Requires a canonically split graph and 0 < eps < epsilon_bound.
attaching_structure attaching_sets(const metric_graph& m, const rat& eps);

// Re-attach the branch arriving along `arrival` at a signed offset `target`
// in (-eps, eps): positive slides down the set's forward downward direction,
// negative down the backward one, zero is the identity.  A single slide is
// legal only for the run's boundary branch on the chosen side (interior
// branches would violate the slide ordering against their unmoved
// neighbours).  Realized as an allowed expansion: the new edge has length
// |target| and the chosen downward edge shortens by the same amount, so
// collapsing the new edge restores the rotation system exactly.
metric_graph slide_branch(const metric_graph& m, int arrival, const rat& target, const rat& eps);

// Slide several branches at once.  Within each attaching set the targets,
// read in rotation order with unmoved branches at 0, must be non-decreasing.
metric_graph slide_branches(const metric_graph& m, const std::vector<std::pair<int, rat>>& moves,
                            const rat& eps);

}  // namespace ribbon
