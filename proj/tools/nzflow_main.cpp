// Command-line front end: verify / search / count / glue / glue4 / cover4 /
// parity / lift / gen over the graph, subset and flow text formats.
//
// Exit codes: 0 success, 1 proven nonexistence, 2 parse or validation
// failure, 3 theorem-hypothesis violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nzflow/fourflow.hpp"
#include "nzflow/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoFlow = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitHypothesis = 3;

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw nzflow::ValidationError("cannot open output file '" + out_path + "'");
    out << payload;
}

std::string render_flow(const nzflow::MultiGraph& g, const nzflow::FlowAssignment& f) {
    std::ostringstream s;
    nzflow::write_flow(s, g, f);
    return s.str();
}

struct Options {
    std::string graph_path, sub1_path, sub2_path;
    std::string flow_path, flow1_path, flow2_path;
    std::string group;
    std::string out_path;
    unsigned long long enumerate_limit = 0;
    bool dot = false;

    std::string gen_kind;
    int gen_n = 0;
    std::string base_path, fiber_path, voltage_path;
};

int run_verify(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::FlowAssignment f = nzflow::read_flow_file(opt.flow_path, g);
    nzflow::VerifyReport rep = nzflow::verify_flow(g, f);
    std::ostringstream s;
    s << "valid " << (rep.valid ? "true" : "false") << "\n";
    s << "nowhere_zero " << (rep.nowhere_zero ? "true" : "false") << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!rep.residual[v].is_zero())
            s << "residual " << v << " " << f.spec.format(rep.residual[v]) << "\n";
    emit(opt.out_path, s.str());
    return rep.nowhere_zero ? kExitOk : kExitNoFlow;
}

int run_search(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::GroupSpec spec = nzflow::GroupSpec::parse(opt.group);
    nzflow::SearchResult res = nzflow::search_nowhere_zero(g, spec);
    if (!res.flow) {
        std::cout << "proven-none after " << res.candidates << " candidates\n";
        return kExitNoFlow;
    }
    emit(opt.out_path, render_flow(g, *res.flow));
    return kExitOk;
}

int run_count(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::GroupSpec spec = nzflow::GroupSpec::parse(opt.group);
    nzflow::CountResult res = nzflow::count_flows(g, spec, opt.enumerate_limit);
    std::ostringstream s;
    s << res.count << "\n";
    if (res.flows) {
        int nowhere_zero = 0;
        for (const auto& f : *res.flows)
            if (nzflow::verify_flow(g, f).nowhere_zero) ++nowhere_zero;
        s << "enumerated " << res.flows->size() << " flows, " << nowhere_zero << " nowhere-zero\n";
    }
    emit(opt.out_path, s.str());
    return kExitOk;
}

int run_glue(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::GlueInstance inst;
    inst.graph = &g;
    inst.s1 = nzflow::read_subset_file(opt.sub1_path, g);
    inst.s2 = nzflow::read_subset_file(opt.sub2_path, g);
    inst.spec = nzflow::GroupSpec::parse(opt.group);
    if (!opt.flow1_path.empty()) inst.f1 = nzflow::read_flow_file(opt.flow1_path, g);
    if (!opt.flow2_path.empty()) inst.f2 = nzflow::read_flow_file(opt.flow2_path, g);
    nzflow::GlueResult res = nzflow::glue_common(inst);
    std::cerr << "exponent " << res.exponent << "\n";
    emit(opt.out_path, render_flow(g, res.flow));
    return kExitOk;
}

int run_glue4(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::EdgeSubset s1 = nzflow::read_subset_file(opt.sub1_path, g);
    nzflow::EdgeSubset s2 = nzflow::read_subset_file(opt.sub2_path, g);
    std::optional<nzflow::FlowAssignment> f1, f2;
    if (!opt.flow1_path.empty()) f1 = nzflow::read_flow_file(opt.flow1_path, g);
    if (!opt.flow2_path.empty()) f2 = nzflow::read_flow_file(opt.flow2_path, g);
    nzflow::FourGlueStats stats;
    nzflow::FlowAssignment flow = nzflow::glue_four(g, s1, s2, f1, f2, &stats);
    std::cerr << "fallback_searches " << stats.fallback_searches << "\n";
    emit(opt.out_path, render_flow(g, flow));
    return kExitOk;
}

int run_cover4(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::FourGlueStats stats;
    nzflow::FlowAssignment flow = nzflow::cover4(g, &stats);
    std::cerr << "fallback_searches " << stats.fallback_searches << "\n";
    emit(opt.out_path, render_flow(g, flow));
    return kExitOk;
}

int run_parity(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::FlowAssignment flow;
    if (!opt.flow_path.empty()) {
        flow = nzflow::read_flow_file(opt.flow_path, g);
    } else {
        nzflow::SearchResult res = nzflow::search_nowhere_zero(g, nzflow::four_group());
        if (!res.flow) {
            std::cout << "proven-none after " << res.candidates << " candidates\n";
            return kExitNoFlow;
        }
        flow = *res.flow;
    }
    nzflow::ParityDecomposition d = nzflow::parity_from_flow(g, flow);
    std::ostringstream s;
    for (int i = 0; i < 3; ++i) {
        s << "P" << (i + 1) << ":";
        for (int e : d.part[i].ids()) s << " " << e;
        s << "\n";
    }
    emit(opt.out_path, s.str());
    return kExitOk;
}

int run_lift(const Options& opt) {
    nzflow::MultiGraph g = nzflow::read_graph_file(opt.graph_path);
    nzflow::FlowAssignment f = nzflow::read_flow_file(opt.flow_path, g);
    nzflow::IntegerFlow h = nzflow::lift_integer(g, f);
    std::ostringstream s;
    nzflow::write_integer_flow(s, g, h, f.spec.order());
    emit(opt.out_path, s.str());
    return kExitOk;
}

int run_gen(const Options& opt) {
    nzflow::MultiGraph g;
    if (opt.gen_kind == "cycle") {
        g = nzflow::gen_basic(nzflow::BasicKind::Cycle, opt.gen_n);
    } else if (opt.gen_kind == "path") {
        g = nzflow::gen_basic(nzflow::BasicKind::Path, opt.gen_n);
    } else if (opt.gen_kind == "complete") {
        g = nzflow::gen_basic(nzflow::BasicKind::Complete, opt.gen_n);
    } else if (opt.gen_kind == "petersen") {
        g = nzflow::gen_basic(nzflow::BasicKind::Petersen);
    } else if (opt.gen_kind == "product" || opt.gen_kind == "bundle") {
        nzflow::MultiGraph base = nzflow::read_graph_file(opt.base_path);
        nzflow::MultiGraph fiber = nzflow::read_graph_file(opt.fiber_path);
        if (opt.gen_kind == "product") {
            g = nzflow::cartesian_product(base, fiber);
        } else {
            nzflow::BundleSpec spec = nzflow::BundleSpec::untwisted(base, fiber);
            if (!opt.voltage_path.empty()) {
                std::ifstream in(opt.voltage_path);
                if (!in) throw nzflow::ValidationError("cannot open voltage file");
                // one `edge_id: v0 v1 ... v(m-1)` line per twisted base edge
                std::string line;
                while (std::getline(in, line)) {
                    std::size_t i = line.find_first_not_of(" \t\r");
                    if (i == std::string::npos || line[i] == '#') continue;
                    std::size_t colon = line.find(':');
                    if (colon == std::string::npos)
                        throw nzflow::ValidationError("voltage line needs 'edge_id: permutation'");
                    int e = std::stoi(line.substr(0, colon));
                    if (e < 0 || e >= spec.base.slot_count())
                        throw nzflow::ValidationError("voltage names an unknown base edge");
                    std::istringstream perm(line.substr(colon + 1));
                    std::vector<int> sigma;
                    int v;
                    while (perm >> v) sigma.push_back(v);
                    spec.voltage[e] = sigma;
                }
            }
            g = nzflow::cartesian_bundle(spec);
        }
    } else if (opt.gen_kind == "figure1") {
        nzflow::Figure1Corpus corpus = nzflow::figure1_corpus();
        std::ostringstream s;
        nzflow::write_graph(s, corpus.petersen);
        s << "# case 1 sub1 / sub2 / common\n";
        for (const auto& c : corpus.cases) {
            nzflow::write_subset(s, c.s1);
            nzflow::write_subset(s, c.s2);
            nzflow::write_subset(s, c.common);
        }
        emit(opt.out_path, s.str());
        return kExitOk;
    } else {
        throw nzflow::ValidationError("unknown generator kind '" + opt.gen_kind + "'");
    }
    std::ostringstream s;
    nzflow::write_graph(s, g);
    emit(opt.out_path, s.str());
    if (opt.dot) {
        if (opt.out_path.empty()) {
            std::cout << nzflow::to_dot(g);
        } else {
            std::ofstream dot(opt.out_path + ".dot");
            dot << nzflow::to_dot(g);
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nowhere-zero flow toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("--graph", opt.graph_path, "graph file")->required();
    };

    CLI::App* verify = app.add_subcommand("verify", "check conservation and the nowhere-zero property");
    add_graph(verify);
    verify->add_option("--flow", opt.flow_path, "flow file")->required();
    verify->add_option("--out", opt.out_path, "output file");

    CLI::App* search = app.add_subcommand("search", "find a nowhere-zero flow or prove none exists");
    add_graph(search);
    search->add_option("--group", opt.group, "group descriptor")->required();
    search->add_option("--out", opt.out_path, "output file");

    CLI::App* count = app.add_subcommand("count", "count all flows over a group");
    add_graph(count);
    count->add_option("--group", opt.group, "group descriptor")->required();
    count->add_option("--enumerate-limit", opt.enumerate_limit, "also enumerate when count fits");
    count->add_option("--out", opt.out_path, "output file");

    CLI::App* glue = app.add_subcommand("glue", "combine flows on two subgraphs within the common-edge bound");
    add_graph(glue);
    glue->add_option("--sub1", opt.sub1_path, "edge subset file")->required();
    glue->add_option("--sub2", opt.sub2_path, "edge subset file")->required();
    glue->add_option("--group", opt.group, "group descriptor")->required();
    glue->add_option("--flow1", opt.flow1_path, "optional flow on sub1");
    glue->add_option("--flow2", opt.flow2_path, "optional flow on sub2");
    glue->add_option("--out", opt.out_path, "output file");

    CLI::App* glue4 = app.add_subcommand("glue4", "4-flow union glue for 3 connected common edges");
    add_graph(glue4);
    glue4->add_option("--sub1", opt.sub1_path, "edge subset file")->required();
    glue4->add_option("--sub2", opt.sub2_path, "edge subset file")->required();
    glue4->add_option("--flow1", opt.flow1_path, "optional flow on sub1");
    glue4->add_option("--flow2", opt.flow2_path, "optional flow on sub2");
    glue4->add_option("--out", opt.out_path, "output file");

    CLI::App* cover = app.add_subcommand("cover4", "4-flow from a short-cycle cover");
    add_graph(cover);
    cover->add_option("--out", opt.out_path, "output file");

    CLI::App* parity = app.add_subcommand("parity", "parity decomposition from a 4-flow");
    add_graph(parity);
    parity->add_option("--flow", opt.flow_path, "optional flow file");
    parity->add_option("--out", opt.out_path, "output file");

    CLI::App* lift = app.add_subcommand("lift", "lift a Z_k flow to an integer k-flow");
    add_graph(lift);
    lift->add_option("--flow", opt.flow_path, "flow file")->required();
    lift->add_option("--out", opt.out_path, "output file");

    CLI::App* gen = app.add_subcommand("gen", "emit generated graphs");
    gen->add_option("kind", opt.gen_kind, "cycle|path|complete|petersen|product|bundle|figure1")
        ->required();
    gen->add_option("--n", opt.gen_n, "size parameter");
    gen->add_option("--base", opt.base_path, "base graph file");
    gen->add_option("--fiber", opt.fiber_path, "fiber graph file");
    gen->add_option("--voltages", opt.voltage_path, "voltage file: edge_id: permutation");
    gen->add_option("--out", opt.out_path, "output file");
    gen->add_flag("--dot", opt.dot, "also emit a DOT drawing description");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(opt);
        if (search->parsed()) return run_search(opt);
        if (count->parsed()) return run_count(opt);
        if (glue->parsed()) return run_glue(opt);
        if (glue4->parsed()) return run_glue4(opt);
        if (cover->parsed()) return run_cover4(opt);
        if (parity->parsed()) return run_parity(opt);
        if (lift->parsed()) return run_lift(opt);
        if (gen->parsed()) return run_gen(opt);
    } catch (const nzflow::HypothesisError& err) {
        std::cerr << "hypothesis violated: " << err.what() << "\n";
        return kExitHypothesis;
    } catch (const nzflow::FlowlessError& err) {
        std::cerr << err.what() << "\n";
        return kExitNoFlow;
    } catch (const nzflow::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
