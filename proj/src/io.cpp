#include "nzflow/io.hpp"

#include <fstream>
#include <sstream>

namespace nzflow {

namespace {

bool next_payload_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        return true;
    }
    return false;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    return in;
}

} // namespace

MultiGraph read_graph(std::istream& in) {
    std::string line;
    if (!next_payload_line(in, line)) throw ValidationError("graph file is empty");
    std::istringstream head(line);
    std::string tag;
    int n = -1;
    head >> tag >> n;
    if (tag != "graph" || n < 0 || !head) throw ValidationError("graph file must start with 'graph <n>'");
    std::vector<std::pair<int, int>> edges;
    while (next_payload_line(in, line)) {
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) throw ValidationError("bad edge line '" + line + "'");
        std::string rest;
        if (row >> rest) throw ValidationError("bad edge line '" + line + "'");
        edges.emplace_back(u, v);
    }
    return MultiGraph(n, edges);
}

MultiGraph read_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
    out << "graph " << g.vertex_count() << "\n";
    for (int e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        out << u << " " << v << "\n";
    }
}

EdgeSubset read_subset(std::istream& in, const MultiGraph& g) {
    std::vector<int> ids;
    std::string line;
    while (next_payload_line(in, line)) {
        std::istringstream row(line);
        int id;
        while (row >> id) ids.push_back(id);
        if (!row.eof()) throw ValidationError("bad edge id in subset line '" + line + "'");
    }
    return EdgeSubset(g, ids);
}

EdgeSubset read_subset_file(const std::string& path, const MultiGraph& g) {
    auto in = open_or_throw(path);
    return read_subset(in, g);
}

void write_subset(std::ostream& out, const EdgeSubset& s) {
    for (std::size_t i = 0; i < s.ids().size(); ++i) {
        if (i) out << " ";
        out << s.ids()[i];
    }
    out << "\n";
}

FlowAssignment read_flow(std::istream& in, const MultiGraph& g) {
    std::string line;
    if (!next_payload_line(in, line)) throw ValidationError("flow file is empty");
    std::istringstream head(line);
    std::string tag, descriptor;
    head >> tag >> descriptor;
    if (tag != "flow" || descriptor.empty())
        throw ValidationError("flow file must start with 'flow <group-descriptor>'");

    FlowAssignment f;
    f.spec = GroupSpec::parse(descriptor);
    f.orient = default_orientation(g);
    f.value.assign(g.slot_count(), f.spec.zero());
    while (next_payload_line(in, line)) {
        std::istringstream row(line);
        int e, tail;
        std::string value;
        if (!(row >> e >> tail >> value)) throw ValidationError("bad flow line '" + line + "'");
        if (!g.has_edge(e)) throw ValidationError("flow names edge " + std::to_string(e) + " absent from the graph");
        auto [u, v] = g.ends(e);
        if (tail != u && tail != v)
            throw ValidationError("flow tail " + std::to_string(tail) + " is not an endpoint of edge " +
                                  std::to_string(e));
        f.orient.tail[e] = tail;
        f.value[e] = f.spec.parse_element(value);
        f.domain.push_back(e);
    }
    std::sort(f.domain.begin(), f.domain.end());
    for (std::size_t i = 1; i < f.domain.size(); ++i)
        if (f.domain[i] == f.domain[i - 1])
            throw ValidationError("flow lists edge " + std::to_string(f.domain[i]) + " twice");
    return f;
}

FlowAssignment read_flow_file(const std::string& path, const MultiGraph& g) {
    auto in = open_or_throw(path);
    return read_flow(in, g);
}

void write_flow(std::ostream& out, const MultiGraph& g, const FlowAssignment& f) {
    out << "flow " << f.spec.descriptor() << "\n";
    for (int e : f.domain) {
        (void)g;
        out << e << " " << f.orient.tail[e] << " " << f.spec.format(f.at(e)) << "\n";
    }
}

IntegerFlow read_integer_flow(std::istream& in, const MultiGraph& g, int* k_out) {
    std::string line;
    if (!next_payload_line(in, line)) throw ValidationError("integer flow file is empty");
    std::istringstream head(line);
    std::string tag;
    int k = 0;
    head >> tag >> k;
    if (tag != "intflow" || k < 2) throw ValidationError("integer flow file must start with 'intflow <k>'");
    if (k_out) *k_out = k;

    IntegerFlow f;
    f.orient = default_orientation(g);
    f.value.assign(g.slot_count(), 0);
    while (next_payload_line(in, line)) {
        std::istringstream row(line);
        int e, tail;
        long long value;
        if (!(row >> e >> tail >> value)) throw ValidationError("bad flow line '" + line + "'");
        if (!g.has_edge(e)) throw ValidationError("flow names edge " + std::to_string(e) + " absent from the graph");
        auto [u, v] = g.ends(e);
        if (tail != u && tail != v)
            throw ValidationError("flow tail " + std::to_string(tail) + " is not an endpoint of edge " +
                                  std::to_string(e));
        f.orient.tail[e] = tail;
        f.value[e] = value;
        f.domain.push_back(e);
    }
    std::sort(f.domain.begin(), f.domain.end());
    return f;
}

void write_integer_flow(std::ostream& out, const MultiGraph& g, const IntegerFlow& f, int k) {
    (void)g;
    out << "intflow " << k << "\n";
    for (int e : f.domain) out << e << " " << f.orient.tail[e] << " " << f.value[e] << "\n";
}

std::string to_dot(const MultiGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (int e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        out << "  " << u << " -- " << v << " [label=\"" << e << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace nzflow
