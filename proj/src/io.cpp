#include "ribbon/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace ribbon {

metric_graph parsed_graph::as_metric() const {
    if (!metric) throw invalid("graph has no edge lengths");
    metric_graph m;
    m.g = g;
    m.length = length;
    return m;
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw invalid("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& tok, int line, const char* what) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size()) fail(line, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

}  // namespace

parsed_graph parse_graph(std::istream& in) {
    parsed_graph pg;
    int nhalf = -1;
    bool saw_header = false, saw_base = false;
    int base_vertex = -1;
    std::map<int, int> vertex_next;      // half -> successor in its rotation
    std::map<int, int> vertex_name_of;   // half -> declared vertex id
    std::map<int, int> edge_mate;        // half -> paired half
    std::map<int, rat> edge_len;         // smaller half -> length
    int lineno = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string tok;
        if (!(ls >> tok)) continue;

        if (!saw_header) {
            if (tok != "ribbon-graph" && tok != "plain-graph")
                fail(lineno, "expected 'ribbon-graph 1' or 'plain-graph 1' header");
            pg.g.plain = tok == "plain-graph";
            std::string ver;
            if (!(ls >> ver) || ver != "1") fail(lineno, "unsupported format version");
            saw_header = true;
            continue;
        }
        if (tok == "halfedges") {
            if (nhalf >= 0) fail(lineno, "duplicate halfedges line");
            std::string cnt;
            if (!(ls >> cnt)) fail(lineno, "missing half-edge count");
            nhalf = parse_int(cnt, lineno, "a half-edge count");
            if (nhalf <= 0 || nhalf % 2 != 0)
                fail(lineno, "half-edge count must be positive and even");
            continue;
        }
        if (nhalf < 0) fail(lineno, "halfedges line must precede " + tok + " lines");
        if (tok == "vertex") {
            std::string id_tok, colon;
            if (!(ls >> id_tok >> colon) || colon != ":")
                fail(lineno, "vertex syntax is 'vertex <id> : <half-edges>'");
            int id = parse_int(id_tok, lineno, "a vertex id");
            std::vector<int> cyc;
            while (ls >> tok) cyc.push_back(parse_int(tok, lineno, "a half-edge"));
            if (cyc.empty()) fail(lineno, "vertex has no half-edges");
            for (int h : cyc) {
                if (h < 0 || h >= nhalf) fail(lineno, "half-edge " + std::to_string(h) +
                                                          " out of range");
                if (vertex_name_of.count(h))
                    fail(lineno, "half-edge " + std::to_string(h) + " listed at two vertices");
                vertex_name_of[h] = id;
            }
            if (id != *std::min_element(cyc.begin(), cyc.end()))
                fail(lineno, "vertex id must be its smallest half-edge");
            for (size_t i = 0; i < cyc.size(); ++i)
                vertex_next[cyc[i]] = cyc[(i + 1) % cyc.size()];
            continue;
        }
        if (tok == "edge") {
            std::string a_tok, b_tok;
            if (!(ls >> a_tok >> b_tok)) fail(lineno, "edge syntax is 'edge <half> <half>'");
            int a = parse_int(a_tok, lineno, "a half-edge");
            int b = parse_int(b_tok, lineno, "a half-edge");
            if (a < 0 || a >= nhalf || b < 0 || b >= nhalf)
                fail(lineno, "half-edge out of range");
            if (a == b) fail(lineno, "an edge cannot pair a half-edge with itself");
            if (edge_mate.count(a) || edge_mate.count(b))
                fail(lineno, "half-edge already paired");
            edge_mate[a] = b;
            edge_mate[b] = a;
            if (ls >> tok) {
                if (tok != "len") fail(lineno, "unexpected token '" + tok + "' after edge");
                std::string val;
                if (!(ls >> val)) fail(lineno, "missing length value");
                rat l = parse_rat(val);
                if (l <= 0) fail(lineno, "edge lengths must be positive");
                edge_len[std::min(a, b)] = l;
            }
            continue;
        }
        if (tok == "basepoint") {
            if (saw_base) fail(lineno, "duplicate basepoint line");
            std::string id_tok;
            if (!(ls >> id_tok)) fail(lineno, "missing basepoint vertex id");
            base_vertex = parse_int(id_tok, lineno, "a vertex id");
            saw_base = true;
            continue;
        }
        fail(lineno, "unknown directive '" + tok + "'");
    }
    if (!saw_header) fail(lineno, "empty input");
    if (nhalf < 0) fail(lineno, "missing halfedges line");
    if (!saw_base) fail(lineno, "missing basepoint line");
    for (int h = 0; h < nhalf; ++h) {
        if (!vertex_name_of.count(h))
            fail(lineno, "half-edge " + std::to_string(h) + " belongs to no vertex");
        if (!edge_mate.count(h))
            fail(lineno, "half-edge " + std::to_string(h) + " belongs to no edge");
    }
    pg.g.sigma.resize(nhalf);
    pg.g.alpha.resize(nhalf);
    for (int h = 0; h < nhalf; ++h) {
        pg.g.sigma[h] = vertex_next[h];
        pg.g.alpha[h] = edge_mate[h];
    }
    bool base_found = false;
    for (auto& [h, id] : vertex_name_of)
        if (id == base_vertex && h == id) base_found = true;
    if (!base_found)
        fail(lineno, "basepoint " + std::to_string(base_vertex) + " names no vertex");
    pg.g.base = base_vertex;
    check_structure(pg.g);

    if (!edge_len.empty()) {
        if ((int)edge_len.size() != nhalf / 2)
            fail(lineno, "either all edges need lengths or none");
        pg.metric = true;
        pg.length.assign(nhalf, rat(0));
        for (auto& [e, l] : edge_len) {
            pg.length[e] = l;
            pg.length[pg.g.alpha[e]] = l;
        }
    }
    return pg;
}

parsed_graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

parsed_graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid("cannot open '" + path + "'");
    return parse_graph(in);
}

namespace {

std::string render(const graph& g, const std::vector<rat>* length) {
    std::ostringstream out;
    out << (g.plain ? "plain-graph" : "ribbon-graph") << " 1\n";
    out << "halfedges " << g.halfedges() << "\n";
    for (const auto& cyc : vertex_cycles(g)) {
        out << "vertex " << cyc[0] << " :";
        for (int h : cyc) out << " " << h;
        out << "\n";
    }
    for (int e : edge_ids(g)) {
        out << "edge " << e << " " << g.alpha[e];
        if (length) out << " len " << rat_string((*length)[e]);
        out << "\n";
    }
    out << "basepoint " << g.base << "\n";
    return out.str();
}

}  // namespace

std::string write_graph(const graph& g) { return render(g, nullptr); }

std::string write_graph(const metric_graph& m) { return render(m.g, &m.length); }

}  // namespace ribbon
