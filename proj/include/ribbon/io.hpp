#pragma once
// Plain-text graph format, version 1:
//
//   ribbon-graph 1            (or: plain-graph 1)
//   halfedges 8
//   vertex 0 : 0 2 4 6        counterclockwise rotation at the vertex
//   vertex 1 : 1 3 5 7
//   edge 0 1                  the two half-edges of an edge
//   edge 2 3 len 1/2          optional length makes the graph metric
//   basepoint 0
//
// '#' starts a comment; blank lines are ignored. Vertices are named by their
// smallest half-edge. Either every edge carries a length or none does.

#include <iosfwd>
#include <string>

#include "ribbon/graph.hpp"
#include "ribbon/morse.hpp"

namespace ribbon {

struct parsed_graph {
    graph g;
    bool metric = false;
    std::vector<rat> length;  // per half-edge when metric

    metric_graph as_metric() const;
};

parsed_graph parse_graph(std::istream& in);
parsed_graph parse_graph(const std::string& text);
parsed_graph read_graph_file(const std::string& path);

std::string write_graph(const graph& g);
std::string write_graph(const metric_graph& m);

}  // namespace ribbon
