#include "ore5/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ore5 {

Graph read_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "p") {
            if (n >= 0) throw std::runtime_error("duplicate header at line " + std::to_string(lineno));
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::runtime_error("bad header at line " + std::to_string(lineno));
            continue;
        }
        if (n < 0) throw std::runtime_error("edge before header at line " + std::to_string(lineno));
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw std::runtime_error("bad edge line " + std::to_string(lineno));
        }
        if (!(ls >> v)) throw std::runtime_error("bad edge line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error("missing 'p <n> <m>' header");
    if ((long long)edges.size() != m)
        throw std::runtime_error("header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
    return Graph::from_edges((int)n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_edge_list(f);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    auto es = g.edges();
    out << "p " << g.n << " " << es.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(g, f);
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(g, ss);
    return ss.str();
}

} // namespace ore5
