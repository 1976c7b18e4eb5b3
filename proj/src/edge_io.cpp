#include "hgc/edge_io.hpp"

#include <fstream>
#include <sstream>

#include "hgc/errors.hpp"

namespace hgc {

Hypergraph read_edge_list(std::istream& in) {
    int k = 0, n = 0;
    long long m = 0;
    if (!(in >> k >> n >> m))
        throw Error(ErrorKind::IOError, "edge list: missing 'k N M' header");
    if (k < 2 || n < 0 || m < 0)
        throw Error(ErrorKind::IOError, "edge list: invalid header values");

    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long e = 0; e < m; ++e) {
        std::vector<int> tuple(k);
        for (int i = 0; i < k; ++i)
            if (!(in >> tuple[i]))
                throw Error(ErrorKind::IOError, "edge list: truncated edge row");
        for (int i = 1; i < k; ++i)
            if (tuple[i] <= tuple[i - 1])
                throw Error(ErrorKind::IOError,
                            "edge list: tuple not strictly increasing (non-canonical)");
        if (!edges.empty() && !(edges.back() < tuple))
            throw Error(ErrorKind::IOError,
                        "edge list: rows not in sorted order (non-canonical)");
        edges.push_back(std::move(tuple));
    }
    return Hypergraph::build(k, n, std::move(edges));
}

Hypergraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IOError, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
    out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (int e = 0; e < h.edge_count(); ++e) {
        auto tuple = h.edge(e);
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (i) out << ' ';
            out << tuple[i];
        }
        out << '\n';
    }
}

std::string edge_list_string(const Hypergraph& h) {
    std::ostringstream os;
    write_edge_list(os, h);
    return os.str();
}

void write_edge_list_file(const std::string& path, const Hypergraph& h) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IOError, "cannot open " + path + " for writing");
    write_edge_list(out, h);
}

}  // namespace hgc
