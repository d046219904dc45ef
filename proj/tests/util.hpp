#pragma once
// Shared graph builders for the test suite.  All builders use the standard
// pairing alpha(2i) = 2i+1.

#include <numeric>
#include <random>
#include <vector>

#include "ribbon/graph.hpp"

namespace testutil {

inline ribbon::graph from_cycles(int halfedges,
                                 const std::vector<std::vector<int>>& cycles, int base) {
    ribbon::graph g;
    g.sigma.assign(halfedges, -1);
    g.alpha.assign(halfedges, -1);
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i) g.sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
    for (int e = 0; e < halfedges / 2; ++e) {
        g.alpha[2 * e] = 2 * e + 1;
        g.alpha[2 * e + 1] = 2 * e;
    }
    g.base = base;
    return g;
}

// one-vertex graph whose rotation is the given order of all half-edges
inline ribbon::graph rose_from_word(const std::vector<int>& order) {
    return from_cycles((int)order.size(), {order}, 0);
}

// two vertices joined by three parallel edges; both rotation classes.
// Opposite cyclic orders at the ends make the three faces of the planar
// picture; matching orders leave a single face on the torus.
inline ribbon::graph theta(bool planar) {
    return from_cycles(6, {{0, 2, 4}, planar ? std::vector<int>{1, 5, 3}
                                             : std::vector<int>{1, 3, 5}},
                       0);
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Every valid based graph on the given number of edges, by brute force: the
// rotation runs over all permutations of the half-edges (with the fixed
// pairing), the basepoint over all vertices.  A cheap valence screen keeps the
// scan fast: at most one vertex may have valence two, and it must carry the
// basepoint.
template <typename F>
void for_all_valid(int edges, F&& visit) {
    int n = 2 * edges;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ribbon::graph g;
    g.alpha.resize(n);
    for (int e = 0; e < edges; ++e) {
        g.alpha[2 * e] = 2 * e + 1;
        g.alpha[2 * e + 1] = 2 * e;
    }
    std::vector<char> seen(n);
    std::vector<int> mins;
    do {
        std::fill(seen.begin(), seen.end(), 0);
        mins.clear();
        int two = -1;
        bool bad = false;
        for (int h = 0; h < n && !bad; ++h) {
            if (seen[h]) continue;
            int len = 0;
            for (int x = h; !seen[x]; x = perm[x]) {
                seen[x] = 1;
                ++len;
            }
            if (len == 1) bad = true;
            if (len == 2) {
                if (two >= 0) bad = true;
                two = h;
            }
            mins.push_back(h);
        }
        if (bad) continue;
        g.sigma = perm;
        for (int v : mins) {
            if (two >= 0 && v != two) continue;
            g.base = v;
            if (ribbon::validate(g).ok()) visit(g);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace testutil
