#include "degseq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace degseq {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: bad header");
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
        if (u < 0 || v <= u || v >= n) throw std::runtime_error("edge list: bad edge, need 0 <= u < v < n");
        if (!g.add_edge(u, v)) throw std::runtime_error("edge list: duplicate edge");
    }
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    return read_edge_list(in);
}

void save_graph(const Graph& g, const std::string& path) {
    auto out = open_out(path);
    write_edge_list(g, out);
}

ColoredGraph read_colored_edge_list(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m)) throw std::runtime_error("coloured edge list: bad header");
    ColoredGraph f(n);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        char c;
        if (!(in >> u >> v >> c)) throw std::runtime_error("coloured edge list: truncated");
        if (u < 0 || v <= u || v >= n)
            throw std::runtime_error("coloured edge list: bad edge, need 0 <= u < v < n");
        if (c != 'R' && c != 'B') throw std::runtime_error("coloured edge list: colour must be R or B");
        f.add_edge(u, v, c == 'R' ? EdgeColor::Red : EdgeColor::Blue);
    }
    return f;
}

void write_colored_edge_list(const ColoredGraph& f, std::ostream& out) {
    out << f.vertex_count() << ' ' << f.edge_count() << '\n';
    for (auto [u, v, c] : f.edges())
        out << u << ' ' << v << ' ' << (c == EdgeColor::Red ? 'R' : 'B') << '\n';
}

ColoredGraph load_colored_graph(const std::string& path) {
    auto in = open_in(path);
    return read_colored_edge_list(in);
}

void save_colored_graph(const ColoredGraph& f, const std::string& path) {
    auto out = open_out(path);
    write_colored_edge_list(f, out);
}

std::vector<int> read_degree_file(std::istream& in) {
    std::vector<int> d;
    int x;
    while (in >> x) d.push_back(x);
    return d;
}

void write_degree_file(const std::vector<int>& d, std::ostream& out) {
    for (int x : d) out << x << '\n';
}

std::vector<int> load_degrees(const std::string& path) {
    auto in = open_in(path);
    return read_degree_file(in);
}

void save_degrees(const std::vector<int>& d, const std::string& path) {
    auto out = open_out(path);
    write_degree_file(d, out);
}

DegreeStatistic statistic_from_json_text(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DegreeStatistic stat;
    stat.k = j.at("k").get<int>();
    stat.alpha = j.at("alpha").get<std::vector<double>>();
    validate_statistic(stat);
    return stat;
}

std::string statistic_to_json_text(const DegreeStatistic& stat) {
    nlohmann::json j;
    j["k"] = stat.k;
    j["alpha"] = stat.alpha;
    return j.dump();
}

} // namespace degseq
