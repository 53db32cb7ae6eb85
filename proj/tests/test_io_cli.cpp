#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nzflow/fourflow.hpp"
#include "nzflow/io.hpp"

using namespace nzflow;

TEST_CASE("graph, subset and flow files round-trip") {
    std::istringstream in("# triangle with a chord target\ngraph 4\n0 1\n1 2\n2 0\n0 3\n");
    MultiGraph g = read_graph(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);

    std::ostringstream out;
    write_graph(out, g);
    std::istringstream again(out.str());
    MultiGraph g2 = read_graph(again);
    CHECK(g2.fingerprint() == g.fingerprint());

    std::istringstream sub_in("0 2\n");
    EdgeSubset s = read_subset(sub_in, g);
    CHECK(s == EdgeSubset(g, {0, 2}));

    MultiGraph c3 = gen_basic(BasicKind::Cycle, 3);
    SearchResult res = search_nowhere_zero(c3, GroupSpec::parse("z:3"));
    REQUIRE(res.flow.has_value());
    std::ostringstream fl;
    write_flow(fl, c3, *res.flow);
    std::istringstream fl_in(fl.str());
    FlowAssignment back = read_flow(fl_in, c3);
    CHECK(back.spec == res.flow->spec);
    CHECK(verify_flow(c3, back).nowhere_zero);
    for (int e : back.domain) CHECK(back.at(e) == res.flow->at(e));

    std::istringstream bad("flow z:3\n0 5 1\n");
    CHECK_THROWS_AS(read_flow(bad, c3), ValidationError);

    CHECK(to_dot(c3).find("0 -- 1") != std::string::npos);
}

// ---------------------------------------------------------------------------
// CLI process-level checks; the binary path arrives via NZFLOW_CLI
// ---------------------------------------------------------------------------

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("NZFLOW_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) r.output += buf;
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("nzflow_test_" + name);
}

} // namespace

TEST_CASE("cli searches, verifies and reports the exact exit codes") {
    const auto petersen = temp_file("petersen.mg");
    CHECK(run_cli("gen petersen --out " + petersen.string()).exit_code == 0);

    RunResult none = run_cli("search --graph " + petersen.string() + " --group gf:2:2");
    CHECK(none.exit_code == 1);
    CHECK(none.output == "proven-none after 4096 candidates\n");

    const auto c4 = temp_file("c4.mg");
    const auto c4_flow = temp_file("c4.fl");
    CHECK(run_cli("gen cycle --n 4 --out " + c4.string()).exit_code == 0);
    CHECK(run_cli("search --graph " + c4.string() + " --group z:2 --out " + c4_flow.string())
              .exit_code == 0);
    RunResult verify = run_cli("verify --graph " + c4.string() + " --flow " + c4_flow.string());
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("nowhere_zero true") != std::string::npos);

    RunResult count = run_cli("count --graph " + c4.string() + " --group z:3");
    CHECK(count.exit_code == 0);
    CHECK(count.output == "3\n");

    RunResult missing = run_cli("search --graph /nonexistent.mg --group z:2");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli glue surfaces hypothesis violations with the violated bound") {
    const auto petersen = temp_file("petersen2.mg");
    const auto s1 = temp_file("fig1_s1.es");
    const auto s2 = temp_file("fig1_s2.es");
    run_cli("gen petersen --out " + petersen.string());
    {
        Figure1Corpus corpus = figure1_corpus();
        std::ofstream a(s1.string()), b(s2.string());
        write_subset(a, corpus.cases[0].s1);
        write_subset(b, corpus.cases[0].s2);
    }
    RunResult res = run_cli("glue --graph " + petersen.string() + " --sub1 " + s1.string() +
                            " --sub2 " + s2.string() + " --group gf:2:2");
    CHECK(res.exit_code == 3);

    RunResult res4 = run_cli("glue4 --graph " + petersen.string() + " --sub1 " + s1.string() +
                             " --sub2 " + s2.string());
    CHECK(res4.exit_code == 3); // disconnected commons

    RunResult cov = run_cli("cover4 --graph " + petersen.string());
    CHECK(cov.exit_code == 3); // girth five
}

TEST_CASE("cli emits byte-identical outputs and re-verifiable flows") {
    const auto grid = temp_file("c3c4.mg");
    const auto c3 = temp_file("c3.mg");
    const auto c4b = temp_file("c4b.mg");
    run_cli("gen cycle --n 3 --out " + c3.string());
    run_cli("gen cycle --n 4 --out " + c4b.string());
    CHECK(run_cli("gen product --base " + c3.string() + " --fiber " + c4b.string() + " --out " +
                  grid.string())
              .exit_code == 0);

    RunResult one = run_cli("cover4 --graph " + grid.string());
    RunResult two = run_cli("cover4 --graph " + grid.string());
    CHECK(one.exit_code == 0);
    CHECK(one.output == two.output);

    const auto flow_path = temp_file("c3c4.fl");
    run_cli("cover4 --graph " + grid.string() + " --out " + flow_path.string());
    CHECK(run_cli("verify --graph " + grid.string() + " --flow " + flow_path.string()).exit_code == 0);

    // parity and lift round-trips
    RunResult parity = run_cli("parity --graph " + grid.string());
    CHECK(parity.exit_code == 0);
    CHECK(parity.output.find("P1:") != std::string::npos);

    const auto z4_flow = temp_file("c4_z4.fl");
    run_cli("search --graph " + c4b.string() + " --group z:4 --out " + z4_flow.string());
    RunResult lift = run_cli("lift --graph " + c4b.string() + " --flow " + z4_flow.string());
    CHECK(lift.exit_code == 0);
    CHECK(lift.output.find("intflow 4") != std::string::npos);
}

TEST_CASE("cli glue subcommands succeed and their flows re-verify") {
    // two squares sharing one edge
    const auto squares = temp_file("squares.mg");
    const auto sq1 = temp_file("squares_s1.es");
    const auto sq2 = temp_file("squares_s2.es");
    {
        MultiGraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 2}});
        std::ofstream gf(squares.string()), a(sq1.string()), b(sq2.string());
        write_graph(gf, g);
        write_subset(a, EdgeSubset(g, {0, 1, 2, 3}));
        write_subset(b, EdgeSubset(g, {1, 4, 5, 6}));
    }
    const auto glued = temp_file("squares.fl");
    RunResult res = run_cli("glue --graph " + squares.string() + " --sub1 " + sq1.string() +
                            " --sub2 " + sq2.string() + " --group gf:2:2 --out " + glued.string());
    CHECK(res.exit_code == 0);
    CHECK(run_cli("verify --graph " + squares.string() + " --flow " + glued.string()).exit_code == 0);

    // two 4-cycles sharing a 3-path, through glue4
    const auto dbl = temp_file("dbl.mg");
    const auto d1 = temp_file("dbl_s1.es");
    const auto d2 = temp_file("dbl_s2.es");
    {
        MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 0}});
        std::ofstream gf(dbl.string()), a(d1.string()), b(d2.string());
        write_graph(gf, g);
        write_subset(a, EdgeSubset(g, {0, 1, 2, 3}));
        write_subset(b, EdgeSubset(g, {0, 1, 2, 4}));
    }
    const auto glued4 = temp_file("dbl.fl");
    RunResult res4 = run_cli("glue4 --graph " + dbl.string() + " --sub1 " + d1.string() +
                             " --sub2 " + d2.string() + " --out " + glued4.string());
    CHECK(res4.exit_code == 0);
    CHECK(run_cli("verify --graph " + dbl.string() + " --flow " + glued4.string()).exit_code == 0);

    // count with enumeration, and the corpus generator
    RunResult count = run_cli("count --graph " + dbl.string() + " --group z:2 --enumerate-limit 16");
    CHECK(count.exit_code == 0);
    CHECK(count.output.find("enumerated 4 flows") != std::string::npos);
    RunResult fig = run_cli("gen figure1");
    CHECK(fig.exit_code == 0);
    CHECK(fig.output.find("graph 10") != std::string::npos);

    // dot output rides along, and parity reports nonexistence with exit 1
    RunResult dot = run_cli("gen cycle --n 3 --dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph G {") != std::string::npos);
    const auto petersen = temp_file("petersen3.mg");
    run_cli("gen petersen --out " + petersen.string());
    RunResult parity_none = run_cli("parity --graph " + petersen.string());
    CHECK(parity_none.exit_code == 1);
    CHECK(parity_none.output == "proven-none after 4096 candidates\n");
}
