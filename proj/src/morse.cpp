#include "ribbon/morse.hpp"

#include <algorithm>

#include "ribbon/moves.hpp"

namespace ribbon {

rat rat_of(long num, long den) {
    if (den == 0) throw invalid("zero denominator");
    rat r(num, den);
    r.canonicalize();
    return r;
}

rat parse_rat(const std::string& text) {
    try {
        rat r(text);
        // canonicalize() on a zero denominator traps inside the library
        if (r.get_den() == 0) throw invalid("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw invalid("malformed rational '" + text + "'");
    }
}

std::string rat_string(const rat& r) { return r.get_str(); }

metric_graph with_unit_lengths(const graph& g) {
    metric_graph m;
    m.g = g;
    m.length.assign(g.halfedges(), rat_of(1));
    return m;
}

rat edge_length(const metric_graph& m, int edge_id) { return m.length.at(edge_id); }

rat total_length(const metric_graph& m) {
    rat t = 0;
    for (int e : edge_ids(m.g)) t += m.length[e];
    return t;
}

void set_edge_length(metric_graph& m, int edge_id, const rat& value) {
    if (value <= 0) throw invalid("edge lengths must be positive");
    m.length.at(edge_id) = value;
    m.length.at(m.g.alpha[edge_id]) = value;
}

void normalize(metric_graph& m) {
    rat t = total_length(m);
    for (auto& l : m.length) l /= t;
    m.normalized = true;
}

std::map<int, rat> heights(const metric_graph& m) {
    auto vof = vertex_of(m.g);
    std::map<int, rat> dist;
    std::map<int, bool> known;
    for (const auto& cyc : vertex_cycles(m.g)) known[cyc[0]] = false;
    dist[m.g.base] = 0;
    // exact Dijkstra on a handful of vertices: repeatedly settle the nearest
    // unsettled vertex
    for (size_t round = 0; round < known.size(); ++round) {
        int best = -1;
        for (auto& [v, done] : known)
            if (!done && dist.count(v) && (best < 0 || dist[v] < dist[best])) best = v;
        if (best < 0) throw internal("metric graph is not connected");
        known[best] = true;
        for (int h = 0; h < m.g.halfedges(); ++h) {
            if (vof[h] != best) continue;
            int w = vof[m.g.alpha[h]];
            rat cand = dist[best] + m.length[h];
            if (!dist.count(w) || cand < dist[w]) dist[w] = cand;
        }
    }
    return dist;
}

rat height_at(const metric_graph& m, int edge_id, const rat& offset) {
    if (offset < 0 || offset > m.length.at(edge_id)) throw invalid("offset outside the edge");
    auto h = heights(m);
    auto vof = vertex_of(m.g);
    rat via_u = h.at(vof[edge_id]) + offset;
    rat via_v = h.at(vof[m.g.alpha[edge_id]]) + (m.length[edge_id] - offset);
    return std::min(via_u, via_v);
}

bool is_downward(const metric_graph& m, const std::map<int, rat>& h, int halfedge) {
    auto vof = vertex_of(m.g);
    int u = vof[halfedge], v = vof[m.g.alpha[halfedge]];
    return h.at(u) == h.at(v) + m.length[halfedge];
}

critical_structure critical_points(const metric_graph& m) {
    check_structure(m.g);
    for (int e : edge_ids(m.g))
        if (m.length.at(e) <= 0) throw invalid("edge lengths must be positive");
    critical_structure cs;
    auto h = heights(m);
    auto vof = vertex_of(m.g);
    auto cycles = vertex_cycles(m.g);

    std::map<int, int> point_of_vertex;
    for (const auto& cyc : cycles) {
        std::vector<int> down;
        for (int x : cyc)
            if (is_downward(m, h, x)) down.push_back(x);
        if (down.size() >= 2) {
            critical_point p;
            p.vertex = cyc[0];
            p.height = h.at(cyc[0]);
            p.codim = (int)down.size() - 1;
            p.downward = down;
            point_of_vertex[cyc[0]] = (int)cs.points.size();
            cs.points.push_back(std::move(p));
        }
    }
    for (int e : edge_ids(m.g)) {
        int u = vof[e], v = vof[m.g.alpha[e]];
        rat gap = h.at(u) - h.at(v);
        if (gap < 0) gap = -gap;
        if (gap < m.length[e]) {
            // both directions rise: the height peaks strictly inside
            critical_point p;
            p.interior = true;
            p.edge = e;
            p.offset = (h.at(v) + m.length[e] - h.at(u)) / 2;
            p.height = h.at(u) + p.offset;
            p.codim = 0;
            cs.points.push_back(std::move(p));
        }
    }
    cs.graph_codim = 0;
    for (const auto& p : cs.points) cs.graph_codim += p.codim;

    // downhill walks: follow the unique downward continuation through
    // non-critical vertices until the basepoint or a critical vertex
    auto walk = [&](int from_idx, int first_arrival) {
        branch b;
        b.from = from_idx;
        b.arrivals.push_back(first_arrival);
        for (;;) {
            int w = vof[b.arrivals.back()];
            if (w == m.g.base) {
                b.to_base = true;
                b.to = -1;
                break;
            }
            auto it = point_of_vertex.find(w);
            if (it != point_of_vertex.end()) {
                b.to = it->second;
                break;
            }
            int next = -1;
            for (int x = w, first = 1; first || x != w; x = m.g.sigma[x], first = 0)
                if (is_downward(m, h, x)) {
                    next = x;
                    break;
                }
            if (next < 0) throw internal("non-basepoint vertex with no downward direction");
            b.arrivals.push_back(m.g.alpha[next]);
        }
        cs.branches.push_back(std::move(b));
    };
    for (int i = 0; i < (int)cs.points.size(); ++i) {
        const auto& p = cs.points[i];
        if (p.interior) {
            walk(i, p.edge);
            walk(i, m.g.alpha[p.edge]);
        } else {
            for (int d : p.downward) walk(i, m.g.alpha[d]);
        }
    }
    cs.e = 0;
    for (const auto& b : cs.branches)
        if (!b.to_base) ++cs.e;

    // composite downhill paths between critical points, counted by start
    std::vector<long long> memo(cs.points.size(), -1);
    auto paths = [&](auto&& self, int i) -> long long {
        if (memo[i] >= 0) return memo[i];
        long long total = 0;
        for (const auto& b : cs.branches)
            if (b.from == i && !b.to_base) total += 1 + self(self, b.to);
        return memo[i] = total;
    };
    long long c = 0;
    for (int i = 0; i < (int)cs.points.size(); ++i) c += paths(paths, i);
    cs.c = (int)c;
    return cs;
}

bool is_split(const metric_graph& m) {
    auto h = heights(m);
    for (const auto& cyc : vertex_cycles(m.g)) {
        if (cyc[0] == m.g.base) continue;
        int down = 0;
        for (int x : cyc)
            if (is_downward(m, h, x)) ++down;
        if (down < 2) return false;
    }
    return true;
}

split_result canonical_split(const metric_graph& m) {
    split_result out;
    out.m = m;
    out.m.normalized = false;  // renormalize once at the end if requested
    std::vector<int> cur_to_orig(m.g.halfedges());
    for (int i = 0; i < m.g.halfedges(); ++i) cur_to_orig[i] = i;

    for (;;) {
        auto h = heights(out.m);
        auto vof = vertex_of(out.m.g);
        int pick = -1, pick_down = -1;
        for (const auto& cyc : vertex_cycles(out.m.g)) {
            if (cyc[0] == out.m.g.base) continue;
            std::vector<int> down;
            for (int x : cyc)
                if (is_downward(out.m, h, x)) down.push_back(x);
            if (down.empty()) throw internal("non-basepoint vertex with no downward direction");
            if (down.size() >= 2) continue;  // already critical
            if (pick < 0 || h.at(cyc[0]) > h.at(pick) ||
                (h.at(cyc[0]) == h.at(pick) && cyc[0] < pick)) {
                pick = cyc[0];
                pick_down = down[0];
            }
        }
        if (pick < 0) break;
        int edge = std::min(pick_down, out.m.g.alpha[pick_down]);
        out.contracted.push_back(
            std::min(cur_to_orig[pick_down], cur_to_orig[out.m.g.alpha[pick_down]]));
        auto step = collapse_edge(out.m.g, edge);
        std::vector<rat> new_len(step.g.halfedges());
        std::vector<int> new_orig(step.g.halfedges());
        for (int x = 0; x < out.m.g.halfedges(); ++x) {
            if (step.half_map[x] < 0) continue;
            new_len[step.half_map[x]] = out.m.length[x];
            new_orig[step.half_map[x]] = cur_to_orig[x];
        }
        out.m.g = std::move(step.g);
        out.m.length = std::move(new_len);
        cur_to_orig = std::move(new_orig);
    }
    if (m.normalized) normalize(out.m);
    return out;
}

rat epsilon_bound(const metric_graph& m) {
    rat min_len;
    bool first = true;
    for (int e : edge_ids(m.g)) {
        if (first || m.length[e] < min_len) min_len = m.length[e];
        first = false;
    }
    auto cs = critical_points(m);
    std::vector<rat> hs;
    for (const auto& p : cs.points) hs.push_back(p.height);
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    rat bound = min_len;
    for (size_t i = 0; i + 1 < hs.size(); ++i) {
        rat half_gap = (hs[i + 1] - hs[i]) / 2;
        if (half_gap < bound) bound = half_gap;
    }
    return bound;
}

attaching_structure attaching_sets(const metric_graph& m, const rat& eps) {
    if (!is_split(m)) throw invalid("graph is not canonically split");
    rat bound = epsilon_bound(m);
    if (eps <= 0 || eps >= bound)
        throw invalid("epsilon must lie in (0, " + rat_string(bound) + ")");
    auto cs = critical_points(m);
    auto h = heights(m);
    attaching_structure a;
    for (const auto& p : cs.points) {
        if (p.interior) continue;
        std::vector<int> cyc = {p.vertex};
        for (int x = m.g.sigma[p.vertex]; x != p.vertex; x = m.g.sigma[x]) cyc.push_back(x);
        int n = (int)cyc.size();
        std::vector<char> down(n, 0);
        for (int i = 0; i < n; ++i) down[i] = is_downward(m, h, cyc[i]);
        for (int i = 0; i < n; ++i) {
            // start of a maximal run of upward half-edges
            if (down[i] || !down[(i + n - 1) % n]) continue;
            attaching_set s;
            s.vertex = p.vertex;
            int j = i;
            while (!down[j % n]) {
                s.ups.push_back(cyc[j % n]);
                ++j;
            }
            s.pos_dir = cyc[j % n];
            s.neg_dir = cyc[(i + n - 1) % n];
            a.sets.push_back(std::move(s));
        }
    }
    for (const auto& b : cs.branches)
        if (!b.to_base) a.copies[b.arrival_half()]++;
    for (const auto& s : a.sets)
        for (int u : s.ups) {
            if (!a.copies.count(u)) throw internal("upward half-edge fed by no branch");
            a.dim_per_vertex[s.vertex] += a.copies[u];
            a.total_dim += a.copies[u];
        }
    if (a.total_dim != cs.e) throw internal("attaching dimension disagrees with branch count");
    return a;
}

namespace {

std::vector<int> cycle_at(const graph& g, int start) {
    std::vector<int> cyc = {start};
    for (int x = g.sigma[start]; x != start; x = g.sigma[x]) cyc.push_back(x);
    return cyc;
}

// one expansion step used by the slides: split off `arc` (consecutive), give
// the new edge length `piece`, shorten `shrink_half`'s edge by the same amount
metric_graph expand_metric(const metric_graph& m, const std::vector<int>& arc, const rat& piece,
                           int shrink_half) {
    arc_partition part;
    part.arc_a = arc;
    auto cyc = cycle_at(m.g, arc[0]);
    part.vertex = *std::min_element(cyc.begin(), cyc.end());
    for (size_t i = 0; i < arc.size(); ++i)
        if (cyc[i] != arc[i]) throw internal("slide arc is not consecutive");
    for (size_t i = arc.size(); i < cyc.size(); ++i) part.arc_b.push_back(cyc[i]);
    metric_graph out;
    out.g = expand(m.g, part);
    out.length = m.length;
    out.length.push_back(piece);
    out.length.push_back(piece);
    out.normalized = m.normalized;
    int shrink_edge = std::min(shrink_half, out.g.alpha[shrink_half]);
    set_edge_length(out, shrink_edge, out.length[shrink_edge] - piece);
    return out;
}

}  // namespace

metric_graph slide_branches(const metric_graph& m, const std::vector<std::pair<int, rat>>& moves,
                            const rat& eps) {
    if (!is_split(m)) throw invalid("graph is not canonically split");
    rat bound = epsilon_bound(m);
    if (eps <= 0 || eps >= bound)
        throw invalid("epsilon must lie in (0, " + rat_string(bound) + ")");
    auto a = attaching_sets(m, eps);

    // locate each moved half-edge in its attaching set
    std::map<int, rat> target;
    for (auto& [half, t] : moves) {
        if (t <= -eps || t >= eps)
            throw invalid("target " + rat_string(t) + " outside the attaching interval (-" +
                          rat_string(eps) + ", " + rat_string(eps) + ")");
        if (target.count(half)) throw invalid("half-edge slid twice");
        bool found = false;
        for (const auto& s : a.sets)
            for (int u : s.ups) found = found || u == half;
        if (!found)
            throw invalid("half-edge " + std::to_string(half) +
                          " is not an upward half-edge at a critical vertex");
        target[half] = t;
    }

    metric_graph cur = m;
    for (const auto& s : a.sets) {
        std::vector<rat> ts(s.ups.size(), rat(0));
        bool any = false;
        for (size_t i = 0; i < s.ups.size(); ++i)
            if (target.count(s.ups[i])) {
                ts[i] = target[s.ups[i]];
                any = any || ts[i] != 0;
            }
        if (!any) continue;
        for (size_t i = 0; i + 1 < ts.size(); ++i)
            if (ts[i] > ts[i + 1])
                throw invalid("slide ordering violated in an attaching set: " + rat_string(ts[i]) +
                              " before " + rat_string(ts[i + 1]));

        // positive suffix, deepest block first; the boundary half at the
        // vertex is the previous new edge after each step
        int boundary = s.pos_dir;
        std::vector<rat> depths;
        for (const rat& t : ts)
            if (t > 0 && std::find(depths.begin(), depths.end(), t) == depths.end())
                depths.push_back(t);
        std::sort(depths.begin(), depths.end());
        for (auto it = depths.rbegin(); it != depths.rend(); ++it) {
            std::vector<int> arc;
            for (size_t i = 0; i < ts.size(); ++i)
                if (ts[i] == *it) arc.push_back(s.ups[i]);
            arc.push_back(boundary);
            cur = expand_metric(cur, arc, *it, boundary);
            boundary = cur.g.halfedges() - 1;  // the vertex-side new half
        }
        // negative prefix, deepest block first
        boundary = s.neg_dir;
        depths.clear();
        for (const rat& t : ts)
            if (t < 0 && std::find(depths.begin(), depths.end(), -t) == depths.end())
                depths.push_back(-t);
        std::sort(depths.begin(), depths.end());
        for (auto it = depths.rbegin(); it != depths.rend(); ++it) {
            std::vector<int> arc = {boundary};
            for (size_t i = 0; i < ts.size(); ++i)
                if (ts[i] == -*it) arc.push_back(s.ups[i]);
            cur = expand_metric(cur, arc, *it, boundary);
            boundary = cur.g.halfedges() - 1;
        }
    }
    return cur;
}

metric_graph slide_branch(const metric_graph& m, int arrival, const rat& target, const rat& eps) {
    if (target == 0) {
        // still validate the context so bad calls are caught
        auto a = attaching_sets(m, eps);
        bool found = false;
        for (const auto& s : a.sets)
            for (int u : s.ups) found = found || u == arrival;
        if (!found)
            throw invalid("half-edge " + std::to_string(arrival) +
                          " is not an upward half-edge at a critical vertex");
        return m;
    }
    return slide_branches(m, {{arrival, target}}, eps);
}

}  // namespace ribbon
