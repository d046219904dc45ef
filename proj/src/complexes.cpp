#include "ribbon/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ribbon/moves.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ribbon {

namespace {

constexpr int max_rose_edges = 8;
constexpr int max_edges = 12;

long long factorial(int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

int thread_count(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

graph rose_from_cycle(const std::vector<int>& order) {
    graph r;
    int n2 = (int)order.size();
    r.sigma.assign(n2, -1);
    r.alpha.assign(n2, -1);
    for (int i = 0; i < n2; ++i) r.sigma[order[i]] = order[(i + 1) % n2];
    for (int e = 0; e < n2 / 2; ++e) {
        r.alpha[2 * e] = 2 * e + 1;
        r.alpha[2 * e + 1] = 2 * e;
    }
    r.base = 0;
    return r;
}

// lexicographic unranking of the permutation of `pool` with the given rank
std::vector<int> unrank_perm(std::vector<int> pool, long long rank) {
    std::vector<int> out;
    while (!pool.empty()) {
        long long f = factorial((int)pool.size() - 1);
        int idx = (int)(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return out;
}

void check_rose_size(int n) {
    if (n < 1) throw invalid("a rose needs at least one edge");
    if (n > max_rose_edges)
        throw capacity("rose census capped at " + std::to_string(max_rose_edges) + " edges");
}

}  // namespace

std::vector<graph> rose_census(int n) {
    check_rose_size(n);
    std::vector<int> rest;
    for (int h = 1; h < 2 * n; ++h) rest.push_back(h);
    std::set<code> seen;
    std::vector<graph> out;
    do {
        std::vector<int> order = {0};
        order.insert(order.end(), rest.begin(), rest.end());
        graph r = rose_from_cycle(order);
        code c = canonical_code(r);
        if (seen.insert(c).second) out.push_back(r);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<graph> rose_census_parallel(int n, int jobs) {
    check_rose_size(n);
    std::vector<int> pool;
    for (int h = 1; h < 2 * n; ++h) pool.push_back(h);
    long long total = factorial(2 * n - 1);
    long long chunk = 4096;
    if ((total + chunk - 1) / chunk > (1 << 16)) chunk = (total + (1 << 16) - 1) / (1 << 16);
    long long nchunks = (total + chunk - 1) / chunk;
    std::vector<std::vector<std::pair<code, graph>>> found((size_t)nchunks);
    int nt = thread_count(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#else
    (void)nt;
#endif
    for (long long ci = 0; ci < nchunks; ++ci) {
        std::vector<int> rest = unrank_perm(pool, ci * chunk);
        std::set<code> local;
        long long hi = std::min(total, (ci + 1) * chunk);
        for (long long t = ci * chunk; t < hi; ++t) {
            std::vector<int> order = {0};
            order.insert(order.end(), rest.begin(), rest.end());
            graph r = rose_from_cycle(order);
            code c = canonical_code(r);
            if (local.insert(c).second) found[(size_t)ci].emplace_back(std::move(c), std::move(r));
            std::next_permutation(rest.begin(), rest.end());
        }
    }
    // merging chunks in rank order reproduces the serial first-discovery order
    std::set<code> seen;
    std::vector<graph> out;
    for (auto& bucket : found)
        for (auto& [c, r] : bucket)
            if (seen.insert(c).second) out.push_back(std::move(r));
    return out;
}

std::vector<graph> roses_of_type(surface type, int jobs) {
    int n = 2 * type.genus + type.punctures - 1;
    check_rose_size(n);
    auto all = jobs == 1 ? rose_census(n) : rose_census_parallel(n, jobs);
    std::vector<graph> out;
    for (auto& r : all)
        if (surface_type(r) == type) out.push_back(std::move(r));
    return out;
}

namespace {

// expansions of one graph that stay inside the degree bound, in the
// deterministic vertex-by-vertex order
std::vector<std::pair<code, graph>> grow(const graph& g, int max_degree) {
    std::vector<std::pair<code, graph>> out;
    for (const auto& cyc : vertex_cycles(g))
        for (const auto& part : allowed_expansions(g, cyc[0])) {
            graph bigger = expand(g, part);
            if (degree(bigger) > max_degree) continue;
            if (bigger.edges() > max_edges)
                throw capacity("expansion closure exceeded " + std::to_string(max_edges) +
                               " edges");
            code c = canonical_code(bigger);
            out.emplace_back(std::move(c), std::move(bigger));
        }
    return out;
}

}  // namespace

std::vector<graph> closure_serial(const std::vector<graph>& seeds, int max_degree) {
    std::set<code> seen;
    std::vector<graph> out, frontier;
    for (const auto& s : seeds)
        if (seen.insert(canonical_code(s)).second) {
            out.push_back(s);
            frontier.push_back(s);
        }
    while (!frontier.empty()) {
        std::vector<graph> next;
        for (const auto& g : frontier)
            for (auto& [c, bigger] : grow(g, max_degree))
                if (seen.insert(c).second) {
                    out.push_back(bigger);
                    next.push_back(std::move(bigger));
                }
        frontier = std::move(next);
    }
    return out;
}

std::vector<graph> closure_parallel(const std::vector<graph>& seeds, int max_degree, int jobs) {
    std::set<code> seen;
    std::vector<graph> out, frontier;
    for (const auto& s : seeds)
        if (seen.insert(canonical_code(s)).second) {
            out.push_back(s);
            frontier.push_back(s);
        }
    int nt = thread_count(jobs);
    while (!frontier.empty()) {
        std::vector<std::vector<std::pair<code, graph>>> produced(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#else
        (void)nt;
#endif
        for (long long i = 0; i < (long long)frontier.size(); ++i)
            produced[(size_t)i] = grow(frontier[(size_t)i], max_degree);
        // sequential merge in frontier order keeps the serial discovery order
        std::vector<graph> next;
        for (auto& bucket : produced)
            for (auto& [c, bigger] : bucket)
                if (seen.insert(c).second) {
                    out.push_back(bigger);
                    next.push_back(std::move(bigger));
                }
        frontier = std::move(next);
    }
    return out;
}

std::vector<graph> enumerate_graphs(surface type, int max_degree, int jobs) {
    if (max_degree < 0) throw invalid("maximum degree must be nonnegative");
    int n = 2 * type.genus + type.punctures - 1;
    check_rose_size(n);
    if (n + max_degree > max_edges)
        throw capacity("rank plus degree bound exceeds the edge cap of " +
                       std::to_string(max_edges));
    auto seeds = roses_of_type(type, jobs);
    return jobs == 1 ? closure_serial(seeds, max_degree)
                     : closure_parallel(seeds, max_degree, jobs);
}

std::vector<graph> enumerate_plain(int rank, int max_degree, int jobs) {
    if (rank < 1) throw invalid("rank must be at least 1");
    if (max_degree < 0) throw invalid("maximum degree must be nonnegative");
    check_rose_size(rank);
    if (rank + max_degree > max_edges)
        throw capacity("rank plus degree bound exceeds the edge cap of " +
                       std::to_string(max_edges));
    std::vector<int> order;
    for (int h = 0; h < 2 * rank; ++h) order.push_back(h);
    graph seed = rose_from_cycle(order);
    seed.plain = true;
    std::vector<graph> seeds = {seed};
    return jobs == 1 ? closure_serial(seeds, max_degree)
                     : closure_parallel(seeds, max_degree, jobs);
}

quotient_complex build_complex(const std::vector<graph>& hosts, int max_degree,
                               const std::string& mode) {
    quotient_complex qc;
    qc.mode = mode;
    qc.f.assign(max_degree + 1, 0);
    qc.f[0] = (long long)hosts.size();

    std::map<std::string, int> host_index;
    std::vector<std::string> host_codes;
    for (const auto& h : hosts) {
        std::string cs = code_string(canonical_code(h));
        if (host_index.count(cs)) throw internal("duplicate host in complex construction");
        host_index[cs] = (int)host_codes.size();
        host_codes.push_back(cs);
        qc.cells.push_back({0, cs, {}});
    }

    // union-find over hosts, joined along the 1-cells
    std::vector<int> parent(hosts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (size_t hi = 0; hi < hosts.size(); ++hi) {
        const graph& host = hosts[hi];
        auto eids = edge_ids(host);
        std::map<int, int> pos;
        for (size_t i = 0; i < eids.size(); ++i) pos[eids[i]] = (int)i;
        auto auts = edge_automorphisms(host);
        auto fs = forests(host);

        auto orbit_min = [&](const std::vector<std::vector<int>>& chain) {
            std::vector<std::vector<int>> best;
            for (const auto& perm : auts) {
                std::vector<std::vector<int>> image;
                for (const auto& f : chain) {
                    std::vector<int> mapped;
                    for (int name : f) mapped.push_back(eids[(size_t)perm[(size_t)pos[name]]]);
                    std::sort(mapped.begin(), mapped.end());
                    image.push_back(std::move(mapped));
                }
                if (best.empty() || image < best) best = std::move(image);
            }
            return best;
        };

        // strict containment between forests (fs is sorted by size, then lex)
        std::vector<std::vector<int>> extends(fs.size());
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = 0; j < fs.size(); ++j) {
                if (fs[i].size() >= fs[j].size()) continue;
                if (std::includes(fs[j].begin(), fs[j].end(), fs[i].begin(), fs[i].end()))
                    extends[i].push_back((int)j);
            }

        std::vector<std::set<std::vector<std::vector<int>>>> orbit_reps(max_degree + 1);
        std::vector<int> chain;
        auto walk = [&](auto&& self, int last) -> void {
            int len = (int)chain.size();
            std::vector<std::vector<int>> named;
            for (int idx : chain) named.push_back(fs[(size_t)idx]);
            auto rep = orbit_min(named);
            if (orbit_reps[len].insert(rep).second) {
                qc.f[len] += 1;
                qc.cells.push_back({len, host_codes[hi], rep});
                if (len == 1) {
                    // the collapse along the single forest joins two hosts
                    graph smaller = collapse_forest(host, rep[0]).g;
                    std::string cs = code_string(canonical_code(smaller));
                    auto it = host_index.find(cs);
                    if (it == host_index.end())
                        throw internal("forest collapse left the host family");
                    int a = find((int)hi), b = find(it->second);
                    if (a != b) parent[a] = b;
                }
            }
            if (len == max_degree) return;
            for (int j : extends[(size_t)last]) {
                chain.push_back(j);
                self(self, j);
                chain.pop_back();
            }
        };
        if (max_degree >= 1)
            for (size_t i = 0; i < fs.size(); ++i) {
                chain = {(int)i};
                walk(walk, (int)i);
            }
        chain.clear();
    }

    qc.euler = 0;
    for (size_t j = 0; j < qc.f.size(); ++j) qc.euler += (j % 2 == 0 ? 1 : -1) * qc.f[j];
    qc.connected = true;
    for (size_t i = 1; i < hosts.size(); ++i)
        if (find((int)i) != find(0)) qc.connected = false;
    std::sort(qc.cells.begin(), qc.cells.end(), [](const complex_cell& a, const complex_cell& b) {
        return std::tie(a.dim, a.host_code, a.flag) < std::tie(b.dim, b.host_code, b.flag);
    });
    return qc;
}

const std::vector<reference_entry>& reference_table() {
    // published cell counts; computed complexes are checked against these and
    // any disagreement is surfaced to the caller
    static const std::vector<reference_entry> table = {
        {"ribbon", 2, 1, 0, 2, {27, 110, 63}},
        {"plain", 0, 0, 4, 2, {9, 13, 7}},
        {"plain", 0, 0, 5, 2, {9, 13, 7}},
    };
    return table;
}

quotient_complex ribbon_complex(surface type, int max_degree, int jobs) {
    auto hosts = enumerate_graphs(type, max_degree, jobs);
    auto qc = build_complex(hosts, max_degree, "ribbon");
    for (const auto& entry : reference_table())
        if (entry.mode == "ribbon" && entry.genus == type.genus &&
            entry.punctures == type.punctures && entry.max_degree == max_degree) {
            qc.has_reference = true;
            qc.reference = entry.f;
            qc.matches_reference = qc.f == entry.f;
        }
    return qc;
}

quotient_complex plain_complex(int rank, int max_degree, int jobs) {
    auto hosts = enumerate_plain(rank, max_degree, jobs);
    auto qc = build_complex(hosts, max_degree, "plain");
    for (const auto& entry : reference_table())
        if (entry.mode == "plain" && entry.rank == rank && entry.max_degree == max_degree) {
            qc.has_reference = true;
            qc.reference = entry.f;
            qc.matches_reference = qc.f == entry.f;
        }
    return qc;
}

namespace {

// rotation words for the rose family, written as sequences of half-edges;
// edge e contributes halves 2e ("outgoing") and 2e+1 ("incoming")
using rose_word = std::vector<int>;

void petal_plain(rose_word& w, int a) {  // a, a+1 are the two petal edges
    int b = a + 1;
    w.insert(w.end(), {2 * a, 2 * a + 1, 2 * b, 2 * b + 1});
}
void petal_linked(rose_word& w, int a) {
    int b = a + 1;
    w.insert(w.end(), {2 * a, 2 * b, 2 * b + 1, 2 * a + 1});
}
// the four rotation patterns on a block of four edges starting at edge r
void block_pattern(rose_word& out, int r, int variant) {
    int w = r, x = r + 1, y = r + 2, z = r + 3;
    const int wi = 2 * w, wt = 2 * w + 1, xi = 2 * x, xt = 2 * x + 1;
    const int yi = 2 * y, yt = 2 * y + 1, zi = 2 * z, zt = 2 * z + 1;
    switch (variant) {
        case 0: out.insert(out.end(), {wi, xi, wt, xt, yi, zi, yt, zt}); break;
        case 1: out.insert(out.end(), {wi, xi, wt, yi, zi, yt, xt, zt}); break;
        case 2: out.insert(out.end(), {wi, xi, yi, zi, wt, xt, yt, zt}); break;
        case 3: out.insert(out.end(), {wi, xi, wt, yi, zi, xt, yt, zt}); break;
        default: throw internal("unknown block variant");
    }
}

rose_word build_word(int na, int nr, const std::vector<int>& avec,
                     const std::vector<int>& rvec) {
    rose_word w;
    for (int j = 0; j < na; ++j) (avec[(size_t)j] ? petal_linked : petal_plain)(w, 2 * j);
    for (int r = 0; r < nr; ++r) block_pattern(w, 2 * na + 4 * r, rvec[(size_t)r]);
    return w;
}

// assignment pool in the fixed scan order: the toggle family (a-bits, b-bits,
// one shared bit lifting block 0 by two variants), then every remaining
// mixed assignment
std::vector<std::pair<std::vector<int>, std::vector<int>>> assignment_pool(int na, int nr) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pool;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    int m = na + nr + 1;
    for (long mask = 0; mask < (1L << m); ++mask) {
        auto bit = [&](int j) { return (int)((mask >> (m - 1 - j)) & 1); };
        std::vector<int> avec, rvec;
        for (int j = 0; j < na; ++j) avec.push_back(bit(j));
        int ebit = bit(m - 1);
        for (int r = 0; r < nr; ++r) rvec.push_back(bit(na + r) + (r == 0 ? 2 * ebit : 0));
        if (seen.insert({avec, rvec}).second) pool.emplace_back(avec, rvec);
    }
    long pow4 = 1;
    for (int r = 0; r < nr; ++r) pow4 *= 4;
    for (long am = 0; am < (1L << na); ++am)
        for (long rm = 0; rm < pow4; ++rm) {
            std::vector<int> avec, rvec;
            for (int j = 0; j < na; ++j) avec.push_back((int)((am >> (na - 1 - j)) & 1));
            long rest = rm;
            for (int r = nr - 1; r >= 0; --r) {
                rvec.push_back((int)(rest % 4));
                rest /= 4;
            }
            std::reverse(rvec.begin(), rvec.end());
            if (seen.insert({avec, rvec}).second) pool.emplace_back(avec, rvec);
        }
    return pool;
}

}  // namespace

std::vector<graph> prop5_generate(int genus, int punctures) {
    if (genus < 2 || genus % 2 != 0) throw invalid("genus must be even and at least 2");
    if (punctures < 1 || punctures % 2 != 1) throw invalid("puncture count must be odd");
    int n = 2 * genus + punctures - 1;
    check_rose_size(n);
    int na = (punctures - 1) / 2, nr = genus / 2;
    size_t want = (size_t)1 << (na + nr + 1);
    surface target{genus, punctures};

    std::vector<graph> out;
    std::set<code> codes;
    for (const auto& [avec, rvec] : assignment_pool(na, nr)) {
        graph r = rose_from_cycle(build_word(na, nr, avec, rvec));
        if (surface_type(r) != target)
            throw verification("rose family construction produced a wrong surface type");
        code c = canonical_code(r);
        if (!codes.insert(c).second) continue;
        out.push_back(std::move(r));
        if (out.size() == want) return out;
    }
    throw verification("rose family construction exhausted its pool with " +
                       std::to_string(out.size()) + " of " + std::to_string(want) + " classes");
}

void prop5_verify(const std::vector<graph>& roses, int genus, int punctures) {
    int na = (punctures - 1) / 2, nr = genus / 2;
    size_t want = (size_t)1 << (na + nr + 1);
    if (roses.size() != want)
        throw verification("rose family has " + std::to_string(roses.size()) + " members, want " +
                           std::to_string(want));
    surface target{genus, punctures};
    std::set<code> codes;
    for (const auto& r : roses) {
        if (surface_type(r) != target) throw verification("rose family member has wrong type");
        if (!codes.insert(canonical_code(r)).second)
            throw verification("rose family contains isomorphic members");
    }
    int n = 2 * genus + punctures - 1;
    if (n <= 5) {
        // small enough to cross-check membership against the full census
        std::set<code> census;
        for (const auto& r : roses_of_type(target)) census.insert(canonical_code(r));
        for (const auto& c : codes)
            if (!census.count(c)) throw verification("rose family member missing from census");
    }
}

}  // namespace ribbon
