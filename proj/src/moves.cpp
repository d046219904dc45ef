#include "ribbon/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ribbon {

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

bool forest_ok(const graph& g, const std::vector<int>& edges) {
    auto vof = vertex_of(g);
    dsu d(g.halfedges());
    for (int e : edges) {
        if (e < 0 || e >= g.halfedges() || e > g.alpha[e]) return false;
        int u = vof[e], v = vof[g.alpha[e]];
        if (u == v) return false;       // loop
        if (!d.unite(u, v)) return false;  // closes a cycle
    }
    return true;
}

collapse_result collapse_edge(const graph& g, int edge_id) {
    check_structure(g);
    if (edge_id < 0 || edge_id >= g.halfedges() || edge_id > g.alpha[edge_id])
        throw invalid("no edge named " + std::to_string(edge_id));
    int h = edge_id, hb = g.alpha[h];
    auto vof = vertex_of(g);
    if (vof[h] == vof[hb]) throw invalid("cannot contract loop edge " + std::to_string(edge_id));
    if (g.edges() == 1) throw invalid("cannot contract the last edge");

    // splice: u's cycle with h replaced by v's cycle from sigma(hb) to the
    // predecessor of hb (empty when hb is alone at v)
    std::vector<std::vector<int>> cycles;
    for (const auto& cyc : vertex_cycles(g)) {
        if (cyc[0] == vof[hb]) continue;
        if (cyc[0] != vof[h]) {
            cycles.push_back(cyc);
            continue;
        }
        std::vector<int> merged;
        for (int x : cyc) {
            if (x != h) {
                merged.push_back(x);
                continue;
            }
            for (int y = g.sigma[hb]; y != hb; y = g.sigma[y]) merged.push_back(y);
        }
        cycles.push_back(std::move(merged));
    }

    std::vector<int> half_map(g.halfedges(), -1);
    int next = 0;
    for (int x = 0; x < g.halfedges(); ++x)
        if (x != h && x != hb) half_map[x] = next++;

    graph out;
    out.plain = g.plain;
    out.sigma.assign(next, -1);
    out.alpha.assign(next, -1);
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            out.sigma[half_map[cyc[i]]] = half_map[cyc[(i + 1) % cyc.size()]];
    for (int x = 0; x < g.halfedges(); ++x)
        if (half_map[x] >= 0) out.alpha[half_map[x]] = half_map[g.alpha[x]];

    // the basepoint keeps its identity through the merge
    int base_rep = g.base;
    if (base_rep == vof[h] || base_rep == vof[hb]) {
        base_rep = -1;
        for (const auto& cyc : cycles) {
            bool from_merge = false;
            for (int x : cyc)
                if (vof[x] == vof[h] || vof[x] == vof[hb]) from_merge = true;
            if (from_merge) {
                base_rep = cyc[0];
                break;
            }
        }
    }
    if (base_rep < 0 || half_map[base_rep] < 0) throw internal("basepoint lost in contraction");
    // normalize to the cycle minimum
    int nb = half_map[base_rep];
    int mn = nb;
    for (int x = out.sigma[nb]; x != nb; x = out.sigma[x]) mn = std::min(mn, x);
    out.base = mn;
    return {std::move(out), std::move(half_map)};
}

collapse_result collapse_forest(const graph& g, const std::vector<int>& edges) {
    if (!forest_ok(g, edges))
        throw invalid("edge set is not a forest (loop, cycle, or unknown edge)");
    collapse_result acc;
    acc.g = g;
    acc.half_map.resize(g.halfedges());
    std::iota(acc.half_map.begin(), acc.half_map.end(), 0);
    std::vector<int> pending = edges;
    for (size_t i = 0; i < pending.size(); ++i) {
        // track the edge's current name through earlier relabelings
        int cur = acc.half_map[pending[i]];
        int cur2 = acc.half_map[g.alpha[pending[i]]];
        int name = std::min(cur, cur2);
        auto step = collapse_edge(acc.g, name);
        for (int& m : acc.half_map)
            if (m >= 0) m = step.half_map[m];
        acc.g = std::move(step.g);
    }
    return acc;
}

std::vector<std::vector<int>> forests(const graph& g) {
    auto vof = vertex_of(g);
    std::vector<int> nonloop;
    for (int e : edge_ids(g))
        if (vof[e] != vof[g.alpha[e]]) nonloop.push_back(e);
    std::vector<std::vector<int>> out;
    int m = (int)nonloop.size();
    if (m > 20) throw capacity("too many edges for forest enumeration");
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) sub.push_back(nonloop[i]);
        if (forest_ok(g, sub)) out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<arc_partition> vertex_partitions(const graph& g, int vertex) {
    std::vector<int> cyc = {vertex};
    for (int x = g.sigma[vertex]; x != vertex; x = g.sigma[x]) cyc.push_back(x);
    int m = (int)cyc.size();
    std::vector<arc_partition> out;
    if (g.plain) {
        // bipartitions into two non-empty sets; fix cyc[0] on side A so each
        // unordered pair appears once
        for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
            arc_partition p;
            p.vertex = vertex;
            p.arc_a.push_back(cyc[0]);
            for (int i = 1; i < m; ++i)
                (mask >> (i - 1) & 1 ? p.arc_a : p.arc_b).push_back(cyc[i]);
            if (p.arc_b.empty()) continue;
            out.push_back(std::move(p));
        }
        return out;
    }
    // cuts at two of the m gaps
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            arc_partition p;
            p.vertex = vertex;
            for (int t = i; t < j; ++t) p.arc_a.push_back(cyc[t]);
            for (int t = j; t < i + m; ++t) p.arc_b.push_back(cyc[t % m]);
            out.push_back(std::move(p));
        }
    }
    return out;
}

graph expand(const graph& g, const arc_partition& part) {
    check_structure(g);
    const auto& A = part.arc_a;
    const auto& B = part.arc_b;
    if (A.empty() || B.empty()) throw invalid("expansion arcs must be non-empty");
    if (!g.plain) {
        // A then B must read off the whole rotation at the vertex
        for (size_t i = 0; i + 1 < A.size(); ++i)
            if (g.sigma[A[i]] != A[i + 1]) throw invalid("arc A is not consecutive");
        for (size_t i = 0; i + 1 < B.size(); ++i)
            if (g.sigma[B[i]] != B[i + 1]) throw invalid("arc B is not consecutive");
        if (g.sigma[A.back()] != B.front() || g.sigma[B.back()] != A.front())
            throw invalid("arcs do not partition the rotation at the vertex");
    } else {
        std::vector<int> all = A;
        all.insert(all.end(), B.begin(), B.end());
        std::sort(all.begin(), all.end());
        std::vector<int> cyc = {part.vertex};
        for (int x = g.sigma[part.vertex]; x != part.vertex; x = g.sigma[x]) cyc.push_back(x);
        std::sort(cyc.begin(), cyc.end());
        if (all != cyc) throw invalid("arcs do not partition the half-edges at the vertex");
    }

    int n = g.halfedges();
    int e1 = n, e2 = n + 1;  // e1 joins side A, e2 side B
    graph out;
    out.plain = g.plain;
    out.sigma.assign(n + 2, -1);
    out.alpha.assign(n + 2, -1);
    for (int h = 0; h < n; ++h) {
        out.sigma[h] = g.sigma[h];
        out.alpha[h] = g.alpha[h];
    }
    out.alpha[e1] = e2;
    out.alpha[e2] = e1;
    auto wire = [&out](const std::vector<int>& arc, int nh) {
        for (size_t i = 0; i + 1 < arc.size(); ++i) out.sigma[arc[i]] = arc[i + 1];
        out.sigma[arc.back()] = nh;
        out.sigma[nh] = arc.front();
    };
    wire(A, e1);
    wire(B, e2);

    auto vof = vertex_of(g);
    if (vof[part.vertex] != vof[g.base]) {
        out.base = g.base;  // survives with its cycle untouched
    } else {
        const auto& keep = part.base_on_a ? A : B;
        int nh = part.base_on_a ? e1 : e2;
        out.base = std::min(*std::min_element(keep.begin(), keep.end()), nh);
    }
    return out;
}

std::vector<arc_partition> allowed_expansions(const graph& g, int vertex, bool unfiltered) {
    auto parts = vertex_partitions(g, vertex);
    if (unfiltered) return parts;
    std::vector<arc_partition> out;
    bool at_base = vertex == g.base;
    for (auto& p : parts) {
        for (bool side : at_base ? std::vector<bool>{true, false} : std::vector<bool>{true}) {
            arc_partition q = p;
            q.base_on_a = side;
            try {
                if (validate(expand(g, q)).ok()) out.push_back(q);
            } catch (const error&) {
                // malformed split (never valid): skip
            }
        }
    }
    return out;
}

}  // namespace ribbon
