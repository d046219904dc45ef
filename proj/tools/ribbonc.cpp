// ribbonc: command-line front end for the basepointed graph library.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 capacity exceeded.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ribbon/canon.hpp"
#include "ribbon/complexes.hpp"
#include "ribbon/graph.hpp"
#include "ribbon/io.hpp"
#include "ribbon/morse.hpp"
#include "ribbon/moves.hpp"

using nlohmann::json;
using namespace ribbon;

namespace {

struct options {
    std::string format = "text";
    int jobs = 1;
    long seed = 0;  // reserved for sampling subcommands
};

parsed_graph load(const std::string& path) {
    if (path.empty() || path == "-") return parse_graph(std::cin);
    return read_graph_file(path);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw invalid("empty entry in list '" + text + "'");
        try {
            size_t used;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw invalid("expected an integer, got '" + item + "'");
        }
    }
    if (out.empty()) throw invalid("empty list");
    return out;
}

json graph_json(const graph& g) {
    json j;
    j["mode"] = g.plain ? "plain" : "ribbon";
    j["text"] = write_graph(g);
    j["code"] = code_string(canonical_code(g));
    return j;
}

void emit_graph(const options& opt, const graph& g) {
    if (opt.format == "json")
        std::cout << graph_json(g).dump(2) << "\n";
    else
        std::cout << write_graph(g);
}

void emit_metric(const options& opt, const metric_graph& m,
                 const std::vector<int>* contracted = nullptr) {
    if (opt.format == "json") {
        json j;
        j["mode"] = m.g.plain ? "plain" : "ribbon";
        j["text"] = write_graph(m);
        j["code"] = code_string(canonical_code(m.g));
        if (contracted) j["contracted"] = *contracted;
        std::cout << j.dump(2) << "\n";
    } else {
        if (contracted) {
            std::cout << "# contracted";
            for (int e : *contracted) std::cout << " " << e;
            std::cout << "\n";
        }
        std::cout << write_graph(m);
    }
}

int run_analyze(const options& opt, const std::string& path) {
    parsed_graph pg = load(path);
    const graph& g = pg.g;
    validity v = validate(g);
    surface type = surface_type(g);
    auto faces = face_cycles(g);
    auto auts = automorphisms(g);
    bool mirror_iso = is_isomorphic(g, mirror(g));

    json j;
    j["mode"] = g.plain ? "plain" : "ribbon";
    j["halfedges"] = g.halfedges();
    j["edges"] = g.edges();
    j["vertices"] = (int)vertex_cycles(g).size();
    j["genus"] = type.genus;
    j["punctures"] = type.punctures;
    j["rank"] = rank(g);
    j["degree"] = degree(g);
    j["boundary_cycles"] = (int)faces.size();
    j["valid"] = v.ok();
    j["failures"] = v.failures;
    j["code"] = code_string(canonical_code(g));
    j["automorphisms"] = (long long)auts.size();
    j["mirror_isomorphic"] = mirror_iso;

    if (pg.metric) {
        metric_graph m = pg.as_metric();
        auto cs = critical_points(m);
        j["total_length"] = rat_string(total_length(m));
        j["codim"] = cs.graph_codim;
        j["extended_branches"] = cs.e;
        j["composite_paths"] = cs.c;
        j["split"] = is_split(m);
        j["epsilon_bound"] = rat_string(epsilon_bound(m));
        json pts = json::array();
        for (const auto& p : cs.points) {
            json pj;
            pj["codim"] = p.codim;
            pj["height"] = rat_string(p.height);
            if (p.interior) {
                pj["kind"] = "interior";
                pj["edge"] = p.edge;
                pj["offset"] = rat_string(p.offset);
            } else {
                pj["kind"] = "vertex";
                pj["vertex"] = p.vertex;
            }
            pts.push_back(pj);
        }
        j["critical_points"] = pts;
    }

    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "mode " << j["mode"].get<std::string>() << "\n";
    std::cout << "halfedges " << g.halfedges() << "\n";
    std::cout << "vertices " << j["vertices"].get<int>() << "\n";
    std::cout << "edges " << g.edges() << "\n";
    std::cout << "surface genus " << type.genus << " punctures " << type.punctures << "\n";
    std::cout << "rank " << rank(g) << "\n";
    std::cout << "degree " << degree(g) << "\n";
    std::cout << "boundary-cycles " << faces.size() << "\n";
    std::cout << "valid " << (v.ok() ? "yes" : "no") << "\n";
    for (const auto& f : v.failures) std::cout << "violation " << f << "\n";
    std::cout << "code " << j["code"].get<std::string>() << "\n";
    std::cout << "automorphisms " << auts.size() << "\n";
    std::cout << "mirror-isomorphic " << (mirror_iso ? "yes" : "no") << "\n";
    if (pg.metric) {
        std::cout << "total-length " << j["total_length"].get<std::string>() << "\n";
        std::cout << "codim " << j["codim"].get<int>() << "\n";
        for (const auto& pj : j["critical_points"]) {
            std::cout << "critical " << pj["kind"].get<std::string>();
            if (pj["kind"] == "vertex")
                std::cout << " " << pj["vertex"].get<int>();
            else
                std::cout << " edge " << pj["edge"].get<int>() << " offset "
                          << pj["offset"].get<std::string>();
            std::cout << " height " << pj["height"].get<std::string>() << " codim "
                      << pj["codim"].get<int>() << "\n";
        }
        std::cout << "extended-branches " << j["extended_branches"].get<int>() << "\n";
        std::cout << "composite-paths " << j["composite_paths"].get<int>() << "\n";
        std::cout << "split " << (j["split"].get<bool>() ? "yes" : "no") << "\n";
        std::cout << "epsilon-bound " << j["epsilon_bound"].get<std::string>() << "\n";
    }
    return 0;
}

json complex_json(const quotient_complex& qc, const json& params) {
    json j;
    j["mode"] = qc.mode;
    j["params"] = params;
    j["f_vector"] = qc.f;
    j["euler"] = qc.euler;
    j["connected"] = qc.connected;
    json cells = json::array();
    for (const auto& c : qc.cells)
        cells.push_back({{"dim", c.dim}, {"host_code", c.host_code}, {"flag", c.flag}});
    j["cells"] = cells;
    if (qc.has_reference) {
        j["reference"] = qc.reference;
        j["matches_reference"] = qc.matches_reference;
    }
    return j;
}

std::string join_counts(const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int report_complex(const options& opt, const quotient_complex& qc, const json& params,
                   const std::string& mismatch_tag) {
    if (opt.format == "json") {
        std::cout << complex_json(qc, params).dump(2) << "\n";
    } else {
        std::cout << "mode " << qc.mode << "\n";
        std::cout << "f-vector";
        for (long long x : qc.f) std::cout << " " << x;
        std::cout << "\n";
        std::cout << "euler " << qc.euler << "\n";
        std::cout << "connected " << (qc.connected ? "yes" : "no") << "\n";
        if (qc.has_reference) {
            std::cout << "reference";
            for (long long x : qc.reference) std::cout << " " << x;
            std::cout << "\n";
        }
        for (const auto& c : qc.cells) {
            std::cout << "cell dim " << c.dim << " host " << c.host_code;
            if (!c.flag.empty()) {
                std::cout << " flag";
                for (const auto& f : c.flag) {
                    std::cout << " [";
                    for (size_t i = 0; i < f.size(); ++i)
                        std::cout << (i ? " " : "") << f[i];
                    std::cout << "]";
                }
            }
            std::cout << "\n";
        }
    }
    if (qc.has_reference && !qc.matches_reference) {
        // one machine-parsable line, then fail: the full cell dump above is
        // the evidence for whoever investigates
        std::cerr << "reference-mismatch " << mismatch_tag << " computed=" << join_counts(qc.f)
                  << " reference=" << join_counts(qc.reference) << "\n";
        return 2;
    }
    return 0;
}

int run_enumerate(const options& opt, int genus, int punctures, int max_degree,
                  bool roses_only) {
    surface type{genus, punctures};
    std::vector<graph> gs =
        roses_only ? roses_of_type(type, opt.jobs) : enumerate_graphs(type, max_degree, opt.jobs);
    if (opt.format == "json") {
        json j;
        j["count"] = gs.size();
        json arr = json::array();
        for (const auto& g : gs) arr.push_back(graph_json(g));
        j["graphs"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "count " << gs.size() << "\n";
        for (const auto& g : gs) std::cout << "\n" << write_graph(g);
    }
    return 0;
}

int run_complex(const options& opt, int genus, int punctures, int max_degree) {
    auto qc = ribbon_complex({genus, punctures}, max_degree, opt.jobs);
    json params = {{"genus", genus}, {"punctures", punctures}, {"max_degree", max_degree}};
    std::ostringstream tag;
    tag << "mode=ribbon genus=" << genus << " punctures=" << punctures << " k=" << max_degree;
    return report_complex(opt, qc, params, tag.str());
}

int run_auter(const options& opt, int rank, int max_degree) {
    auto qc = plain_complex(rank, max_degree, opt.jobs);
    json params = {{"rank", rank}, {"max_degree", max_degree}};
    std::ostringstream tag;
    tag << "mode=plain rank=" << rank << " k=" << max_degree;
    return report_complex(opt, qc, params, tag.str());
}

int run_prop5(const options& opt, int genus, int punctures) {
    auto roses = prop5_generate(genus, punctures);
    prop5_verify(roses, genus, punctures);
    if (opt.format == "json") {
        json j;
        j["count"] = roses.size();
        json arr = json::array();
        for (const auto& r : roses) arr.push_back(graph_json(r));
        j["graphs"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "count " << roses.size() << "\n";
        for (const auto& r : roses) std::cout << "\n" << write_graph(r);
    }
    return 0;
}

int run_split(const options& opt, const std::string& path) {
    metric_graph m = load(path).as_metric();
    auto res = canonical_split(m);
    emit_metric(opt, res.m, &res.contracted);
    return 0;
}

int run_collapse(const options& opt, const std::string& path, const std::string& edges) {
    parsed_graph pg = load(path);
    auto res = collapse_forest(pg.g, parse_int_list(edges));
    emit_graph(opt, res.g);
    return 0;
}

int run_expand(const options& opt, const std::string& path, int vertex, const std::string& arc,
               bool base_with_arc) {
    parsed_graph pg = load(path);
    arc_partition part;
    part.vertex = vertex;
    part.arc_a = parse_int_list(arc);
    part.base_on_a = base_with_arc;
    // the complement of the arc, in rotation order, is the kept side
    std::vector<int> cyc = {vertex};
    for (int x = pg.g.sigma[vertex]; x != vertex; x = pg.g.sigma[x]) cyc.push_back(x);
    if (!pg.g.plain && !part.arc_a.empty()) {
        // rotate so the cycle starts at the arc, then read off the rest
        auto it = std::find(cyc.begin(), cyc.end(), part.arc_a[0]);
        if (it != cyc.end()) std::rotate(cyc.begin(), it, cyc.end());
    }
    for (int h : cyc)
        if (std::find(part.arc_a.begin(), part.arc_a.end(), h) == part.arc_a.end())
            part.arc_b.push_back(h);
    emit_graph(opt, expand(pg.g, part));
    return 0;
}

int run_slide(const options& opt, const std::string& path, int branch, const std::string& target,
              const std::string& epsilon) {
    metric_graph m = load(path).as_metric();
    emit_metric(opt, slide_branch(m, branch, parse_rat(target), parse_rat(epsilon)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"basepointed ribbon and plain graph toolkit"};
    app.require_subcommand(1);
    options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "worker threads (1 = serial reference)");
    app.add_option("--seed", opt.seed, "random seed for sampling subcommands");

    std::string path, edges, arc, target, epsilon;
    int genus = 0, punctures = 1, max_degree = 2, rank_opt = 1, vertex = 0, branch = 0;
    bool roses_only = false, base_with_arc = false;

    auto* analyze = app.add_subcommand("analyze", "report the structure of one graph");
    analyze->add_option("file", path, "graph file ('-' or omitted for stdin)");

    auto* enumerate = app.add_subcommand("enumerate", "list graphs of a surface type");
    enumerate->add_option("--genus", genus, "surface genus")->required();
    enumerate->add_option("--punctures", punctures, "number of punctures")->required();
    enumerate->add_option("--max-degree", max_degree, "degree bound");
    enumerate->add_flag("--roses-only", roses_only, "list only one-vertex graphs");

    auto* complex_cmd = app.add_subcommand("complex", "build the quotient degree complex");
    complex_cmd->add_option("--genus", genus, "surface genus")->required();
    complex_cmd->add_option("--punctures", punctures, "number of punctures")->required();
    complex_cmd->add_option("--max-degree", max_degree, "degree bound");

    auto* auter = app.add_subcommand("auter", "build the plain-graph quotient complex");
    auter->add_option("--rank", rank_opt, "graph rank")->required();
    auter->add_option("--max-degree", max_degree, "degree bound");

    auto* prop5 = app.add_subcommand("prop5", "emit the guaranteed rose family");
    prop5->add_option("--genus", genus, "surface genus (even)")->required();
    prop5->add_option("--punctures", punctures, "number of punctures (odd)")->required();

    auto* split = app.add_subcommand("split", "canonically split a metric graph");
    split->add_option("file", path, "metric graph file");

    auto* collapse = app.add_subcommand("collapse", "collapse a forest of edges");
    collapse->add_option("--edges", edges, "comma-separated edge names")->required();
    collapse->add_option("file", path, "graph file");

    auto* expand_cmd = app.add_subcommand("expand", "split a vertex along an arc");
    expand_cmd->add_option("--vertex", vertex, "vertex to split")->required();
    expand_cmd->add_option("--arc", arc, "comma-separated half-edges split onto the new vertex")
        ->required();
    expand_cmd->add_flag("--base-with-arc", base_with_arc,
                         "keep the basepoint on the split-off side");
    expand_cmd->add_option("file", path, "graph file");

    auto* slide = app.add_subcommand("slide", "slide a branch along an attaching set");
    slide->add_option("--branch", branch, "arrival half-edge of the branch")->required();
    slide->add_option("--target", target, "signed landing offset, a rational")->required();
    slide->add_option("--epsilon", epsilon, "attaching radius, a rational")->required();
    slide->add_option("file", path, "metric graph file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(opt, path);
        if (*enumerate) return run_enumerate(opt, genus, punctures, max_degree, roses_only);
        if (*complex_cmd) return run_complex(opt, genus, punctures, max_degree);
        if (*auter) return run_auter(opt, rank_opt, max_degree);
        if (*prop5) return run_prop5(opt, genus, punctures);
        if (*split) return run_split(opt, path);
        if (*collapse) return run_collapse(opt, path, edges);
        if (*expand_cmd) return run_expand(opt, path, vertex, arc, base_with_arc);
        if (*slide) return run_slide(opt, path, branch, target, epsilon);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code) {
            case error::kind::invalid_input: return 1;
            case error::kind::capacity: return 3;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
