#pragma once

#include <iosfwd>
#include <string>

#include "minhom/digraph.hpp"
#include "minhom/instance.hpp"
#include "minhom/product.hpp"

namespace minhom {

// Line formats ("#" starts a comment, blank lines ignored):
//   digraph:     vertices a b c
//                arc a b
//   undirected:  vertices a b c
//                edge a b
//   costs:       tab-separated; header row lists the color labels, every
//                other row is a vertex label followed by one integer per
//                color.

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_file(const std::string& path);

UndirectedGraph parse_graph(std::istream& in);
UndirectedGraph parse_graph_file(const std::string& path);

CostMatrix parse_costs(std::istream& in);
CostMatrix parse_costs_file(const std::string& path);

std::string format_digraph(const Digraph& d);
std::string format_graph(const UndirectedGraph& g);
std::string format_costs(const CostMatrix& m);

/// Product export: "node <vertex>:<color> <weight>" and "edge a:i b:j" lines.
std::string format_product(const ProductGraph& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace minhom
