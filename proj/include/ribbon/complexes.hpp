#pragma once
// Census of one-vertex graphs, degree-bounded expansion closures, and the
// quotient degree complexes built from them.

#include <string>
#include <vector>

#include "ribbon/canon.hpp"
#include "ribbon/graph.hpp"

namespace ribbon {

// All connected one-vertex ribbon graphs ("roses") with n edges, one
// representative per isomorphism class, in first-discovery order over the
// lexicographic scan of rotations. Serial version is the reference; the
// parallel one must produce the identical vector.
std::vector<graph> rose_census(int n);
std::vector<graph> rose_census_parallel(int n, int jobs = 0);

std::vector<graph> roses_of_type(surface type, int jobs = 1);

// Every valid basepointed ribbon graph of the given surface type with degree
// at most k, found by closing the roses under allowed expansions.
std::vector<graph> enumerate_graphs(surface type, int max_degree, int jobs = 1);

// Plain-graph analogue: every valid basepointed graph of rank n with degree
// at most k, grown from the one-vertex rank-n graph.
std::vector<graph> enumerate_plain(int rank, int max_degree, int jobs = 1);

// Shared closure kernels (exposed for the benchmark and equality tests).
std::vector<graph> closure_serial(const std::vector<graph>& seeds, int max_degree);
std::vector<graph> closure_parallel(const std::vector<graph>& seeds, int max_degree,
                                    int jobs = 0);

struct complex_cell {
    int dim = 0;
    std::string host_code;              // canonical code of the host graph
    std::vector<std::vector<int>> flag; // orbit-minimal chain of forests
};

struct quotient_complex {
    std::string mode;  // "ribbon" or "plain"
    std::vector<long long> f;  // f[j] = number of j-cells, j = 0..max_degree
    long long euler = 0;
    bool connected = false;
    std::vector<complex_cell> cells;
    bool has_reference = false;
    std::vector<long long> reference;
    bool matches_reference = true;
};

// Cells in dimension j are orbits of pairs (host, F1 < ... < Fj) of strictly
// nested nonempty forests under the host's edge automorphisms.
quotient_complex build_complex(const std::vector<graph>& hosts, int max_degree,
                               const std::string& mode);

quotient_complex ribbon_complex(surface type, int max_degree, int jobs = 1);
quotient_complex plain_complex(int rank, int max_degree, int jobs = 1);

// Published cell counts kept for cross-checking computed complexes.
struct reference_entry {
    std::string mode;
    int genus = 0, punctures = 0;  // ribbon entries
    int rank = 0;                  // plain entries
    int max_degree = 0;
    std::vector<long long> f;
};
const std::vector<reference_entry>& reference_table();

// Family of 2^((p-1)/2 + g/2 + 1) pairwise non-isomorphic roses of type
// (g, p), g even, p odd. Throws a verification error if the construction
// cannot deliver the full family.
std::vector<graph> prop5_generate(int genus, int punctures);
void prop5_verify(const std::vector<graph>& roses, int genus, int punctures);

}  // namespace ribbon
