#include "minhom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <type_traits>
#include <vector>

#include "minhom/errors.hpp"

namespace minhom {
namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream split(line);
    std::vector<std::string> tokens;
    std::string token;
    while (split >> token) tokens.push_back(token);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

Cost parse_cost(const std::string& text) {
  Cost value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(Errc::parse_error, "not an integer cost: " + text);
  return value;
}

template <typename Graph>
Graph parse_lines(std::istream& in, const char* link_keyword) {
  auto lines = tokenized_lines(in);
  if (lines.empty() || lines.front().front() != "vertices")
    fail(Errc::parse_error, "expected a leading vertices line");
  std::vector<std::string> labels(lines.front().begin() + 1, lines.front().end());
  Graph g(std::move(labels));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens.front() == "vertices")
      fail(Errc::parse_error, "duplicate vertices line");
    if (tokens.front() != link_keyword || tokens.size() != 3)
      fail(Errc::parse_error, "expected '" + std::string(link_keyword) + " <from> <to>' lines");
    int a = g.index_of(tokens[1]);
    int b = g.index_of(tokens[2]);
    if constexpr (std::is_same_v<Graph, Digraph>)
      g.add_arc(a, b);
    else
      g.add_edge(a, b);
  }
  return g;
}

}  // namespace

Digraph parse_digraph(std::istream& in) { return parse_lines<Digraph>(in, "arc"); }

UndirectedGraph parse_graph(std::istream& in) {
  return parse_lines<UndirectedGraph>(in, "edge");
}

CostMatrix parse_costs(std::istream& in) {
  auto lines = tokenized_lines(in);
  if (lines.empty()) fail(Errc::parse_error, "empty cost table");
  CostMatrix m;
  m.col_labels = lines.front();
  const std::size_t k = m.col_labels.size();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens.size() != k + 1)
      fail(Errc::parse_error, "cost row needs a label and " + std::to_string(k) + " entries");
    m.row_labels.push_back(tokens.front());
    std::vector<Cost> row;
    for (std::size_t j = 1; j < tokens.size(); ++j) row.push_back(parse_cost(tokens[j]));
    m.entries.push_back(std::move(row));
  }
  return m;
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream out;
  out << "vertices";
  for (const auto& label : d.labels()) out << ' ' << label;
  out << '\n';
  for (auto [a, b] : d.arcs()) out << "arc " << d.label(a) << ' ' << d.label(b) << '\n';
  return out.str();
}

std::string format_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "vertices";
  for (const auto& label : g.labels()) out << ' ' << label;
  out << '\n';
  for (auto [a, b] : g.edges()) out << "edge " << g.label(a) << ' ' << g.label(b) << '\n';
  return out.str();
}

std::string format_costs(const CostMatrix& m) {
  std::ostringstream out;
  for (std::size_t j = 0; j < m.col_labels.size(); ++j)
    out << (j ? "\t" : "") << m.col_labels[j];
  out << '\n';
  for (std::size_t i = 0; i < m.row_labels.size(); ++i) {
    out << m.row_labels[i];
    for (Cost c : m.entries[i]) out << '\t' << c;
    out << '\n';
  }
  return out.str();
}

std::string format_product(const ProductGraph& p) {
  std::ostringstream out;
  for (int v = 0; v < p.graph.size(); ++v)
    out << "node " << p.graph.label(v) << ' ' << p.weights[v] << '\n';
  for (auto [a, b] : p.graph.edges())
    out << "edge " << p.graph.label(a) << ' ' << p.graph.label(b) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write " + path);
  out << content;
}

Digraph parse_digraph_file(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_digraph(in);
}

UndirectedGraph parse_graph_file(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_graph(in);
}

CostMatrix parse_costs_file(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_costs(in);
}

}  // namespace minhom
