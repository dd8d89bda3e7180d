#ifndef DEGSEQ_IO_HPP
#define DEGSEQ_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "degseq/colored_graph.hpp"
#include "degseq/degree_seq.hpp"
#include "degseq/graph.hpp"

namespace degseq {

// Edge-list text format: "n m", then m lines "u v" with 0 <= u < v < n.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// Coloured edge-list format: "n m", then m lines "u v c" with c in {R, B}.
ColoredGraph read_colored_edge_list(std::istream& in);
void write_colored_edge_list(const ColoredGraph& f, std::ostream& out);
ColoredGraph load_colored_graph(const std::string& path);
void save_colored_graph(const ColoredGraph& f, const std::string& path);

// Degree sequence file: one integer per line.
std::vector<int> read_degree_file(std::istream& in);
void write_degree_file(const std::vector<int>& d, std::ostream& out);
std::vector<int> load_degrees(const std::string& path);
void save_degrees(const std::vector<int>& d, const std::string& path);

// DegreeStatistic JSON: {"k": <int>, "alpha": [<real>...]}
DegreeStatistic statistic_from_json_text(const std::string& text);
std::string statistic_to_json_text(const DegreeStatistic& stat);

} // namespace degseq

#endif
