#pragma once

#include <iosfwd>
#include <string>

#include "hgc/hypergraph.hpp"

namespace hgc {

/// Text edge-list format: first line "k N M", then M lines of k
/// space-separated vertex ids. The reader enforces canonical form (strictly
/// increasing tuples, lexicographically sorted edge list, no duplicates);
/// the writer emits exactly that form, so write(read(x)) == x byte for byte.
Hypergraph read_edge_list(std::istream& in);
Hypergraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Hypergraph& h);
std::string edge_list_string(const Hypergraph& h);
void write_edge_list_file(const std::string& path, const Hypergraph& h);

}  // namespace hgc
