#include "ribbon/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ribbon {

void check_structure(const graph& g) {
    int n = g.halfedges();
    if (n == 0 || n % 2 != 0)
        throw invalid("half-edge count must be positive and even, got " + std::to_string(n));
    if ((int)g.alpha.size() != n)
        throw invalid("sigma and alpha must have equal length");
    std::vector<char> seen(n, 0);
    for (int h = 0; h < n; ++h) {
        if (g.sigma[h] < 0 || g.sigma[h] >= n) throw invalid("sigma image out of range");
        if (seen[g.sigma[h]]) throw invalid("sigma is not a permutation");
        seen[g.sigma[h]] = 1;
    }
    for (int h = 0; h < n; ++h) {
        int a = g.alpha[h];
        if (a < 0 || a >= n) throw invalid("alpha image out of range");
        if (a == h) throw invalid("alpha fixes half-edge " + std::to_string(h));
        if (g.alpha[a] != h) throw invalid("alpha is not an involution");
    }
    // base must be the minimal half-edge of its sigma-cycle
    int h = g.base;
    if (h < 0 || h >= n) throw invalid("basepoint out of range");
    int x = g.sigma[h];
    while (x != h) {
        if (x < h) throw invalid("basepoint must name a vertex by its minimal half-edge");
        x = g.sigma[x];
    }
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
    int n = (int)perm.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int h = 0; h < n; ++h) {
        if (seen[h]) continue;
        std::vector<int> cyc;
        int x = h;
        do {
            cyc.push_back(x);
            seen[x] = 1;
            x = perm[x];
        } while (x != h);
        out.push_back(std::move(cyc));
    }
    return out;  // first element of each cycle is its minimum by scan order
}

std::vector<std::vector<int>> vertex_cycles(const graph& g) { return cycles_of(g.sigma); }

std::vector<int> vertex_of(const graph& g) {
    std::vector<int> v(g.halfedges(), -1);
    for (const auto& cyc : vertex_cycles(g))
        for (int h : cyc) v[h] = cyc[0];
    return v;
}

std::vector<std::vector<int>> face_cycles(const graph& g) {
    std::vector<int> face(g.halfedges());
    for (int h = 0; h < g.halfedges(); ++h) face[h] = g.sigma[g.alpha[h]];
    return cycles_of(face);
}

std::vector<int> edge_ids(const graph& g) {
    std::vector<int> out;
    for (int h = 0; h < g.halfedges(); ++h)
        if (h < g.alpha[h]) out.push_back(h);
    return out;
}

int valence(const graph& g, int vertex_name) {
    int count = 1;
    for (int x = g.sigma[vertex_name]; x != vertex_name; x = g.sigma[x]) ++count;
    return count;
}

bool is_loop(const graph& g, int edge_id) {
    auto v = vertex_of(g);
    return v[edge_id] == v[g.alpha[edge_id]];
}

namespace {

struct dsu {
    std::vector<int> p;
    explicit dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

bool is_connected(const graph& g) {
    // orbit of the group <sigma, alpha> from half-edge 0
    int n = g.halfedges();
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int nb : {g.sigma[h], g.alpha[h]}) {
            if (!seen[nb]) {
                seen[nb] = 1;
                ++found;
                stack.push_back(nb);
            }
        }
    }
    return found == n;
}

bool is_bridge(const graph& g, int edge_id) {
    auto v = vertex_of(g);
    int u = v[edge_id], w = v[g.alpha[edge_id]];
    if (u == w) return false;  // a loop never separates
    dsu d(g.halfedges());
    for (int h = 0; h < g.halfedges(); ++h) {
        d.unite(h, g.sigma[h]);
        if (h != edge_id && h != g.alpha[edge_id]) d.unite(h, g.alpha[h]);
    }
    return d.find(edge_id) != d.find(g.alpha[edge_id]);
}

surface surface_type(const graph& g) {
    int V = (int)vertex_cycles(g).size();
    int E = g.edges();
    int p = (int)face_cycles(g).size();
    int twice_genus = 2 - p - (V - E);
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw internal("non-integral or negative genus from V=" + std::to_string(V) +
                       " E=" + std::to_string(E) + " p=" + std::to_string(p));
    return {twice_genus / 2, p};
}

int degree(const graph& g) {
    int d = 0;
    for (const auto& cyc : vertex_cycles(g))
        if (cyc[0] != g.base) d += (int)cyc.size() - 2;
    return d;
}

int rank(const graph& g) { return g.edges() - (int)vertex_cycles(g).size() + 1; }

validity validate(const graph& g, const std::string& profile) {
    check_structure(g);
    validity r;
    r.connected = is_connected(g);
    if (!r.connected) r.failures.push_back("graph is not connected");
    r.valences_ok = true;
    r.basepoint_ok = true;
    for (const auto& cyc : vertex_cycles(g)) {
        if (cyc[0] == g.base) {
            if ((int)cyc.size() < 2) {
                r.basepoint_ok = false;
                r.failures.push_back("basepoint valence below 2");
            }
        } else if ((int)cyc.size() < 3) {
            r.valences_ok = false;
            r.failures.push_back("vertex " + std::to_string(cyc[0]) + " has valence below 3");
        }
    }
    r.bridgeless = true;
    for (int e : edge_ids(g)) {
        if (is_bridge(g, e)) {
            r.bridgeless = false;
            r.failures.push_back("edge " + std::to_string(e) + " is a separating edge");
        }
    }
    (void)profile;  // both profiles apply the same rules
    return r;
}

graph relabel(const graph& g, const std::vector<int>& perm) {
    int n = g.halfedges();
    if ((int)perm.size() != n) throw invalid("relabel permutation has wrong length");
    graph out;
    out.sigma.resize(n);
    out.alpha.resize(n);
    out.plain = g.plain;
    for (int h = 0; h < n; ++h) {
        out.sigma[perm[h]] = perm[g.sigma[h]];
        out.alpha[perm[h]] = perm[g.alpha[h]];
    }
    // rename the basepoint vertex by its new minimal half-edge
    int b = perm[g.base];
    int mn = b;
    for (int x = out.sigma[b]; x != b; x = out.sigma[x]) mn = std::min(mn, x);
    out.base = mn;
    return out;
}

graph mirror(const graph& g) {
    graph out = g;
    for (int h = 0; h < g.halfedges(); ++h) out.sigma[g.sigma[h]] = h;  // sigma inverse
    // vertex names (cycle minima) are unchanged by reversal
    return out;
}

}  // namespace ribbon
