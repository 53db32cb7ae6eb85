#ifndef NZFLOW_IO_HPP
#define NZFLOW_IO_HPP

#include <iosfwd>
#include <string>

#include "nzflow/flowspace.hpp"

namespace nzflow {

// Graph text format: `#` starts a comment line; the first payload line is
// `graph <n>`; every following payload line is one `u v` endpoint pair.
// Edge id = 0-based payload order.
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MultiGraph& g);

// Edge subsets: whitespace-separated edge ids.
EdgeSubset read_subset(std::istream& in, const MultiGraph& g);
EdgeSubset read_subset_file(const std::string& path, const MultiGraph& g);
void write_subset(std::ostream& out, const EdgeSubset& s);

// Flow files: `flow <group-descriptor>` then one `edge_id tail value` line
// per edge; the tail column defines the orientation.
FlowAssignment read_flow(std::istream& in, const MultiGraph& g);
FlowAssignment read_flow_file(const std::string& path, const MultiGraph& g);
void write_flow(std::ostream& out, const MultiGraph& g, const FlowAssignment& f);

// Integer flows: `intflow <k>` then `edge_id tail value` lines.
IntegerFlow read_integer_flow(std::istream& in, const MultiGraph& g, int* k_out = nullptr);
void write_integer_flow(std::ostream& out, const MultiGraph& g, const IntegerFlow& f, int k);

std::string to_dot(const MultiGraph& g);

} // namespace nzflow

#endif
