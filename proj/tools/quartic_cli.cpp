// Command-line front end over the quartic library: triangle-property checks,
// classification with certificates, family construction, certificate
// verification, and exhaustive enumeration.
//
// Exit codes: 0 success / property holds, 1 semantic negative (property
// fails, not in class, certificate rejected), 2 input or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quartic/certificate.hpp"
#include "quartic/enumerate.hpp"
#include "quartic/families.hpp"
#include "quartic/mg1.hpp"
#include "quartic/multigraph.hpp"
#include "quartic/operations.hpp"
#include "quartic/recognize.hpp"

namespace {

using namespace quartic;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

Multigraph load_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream text;
        text << std::cin.rdbuf();
        return read_mg1(text.str());
    }
    std::ifstream in(path);
    if (!in) throw Mg1Error("cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return read_mg1(text.str());
}

OpStep parse_step(const std::string& text) {
    std::istringstream in(text);
    std::string word, dir;
    OpStep step;
    if (!(in >> word >> step.kind >> dir) || word != "op" || step.kind < 1 ||
        step.kind > 5)
        throw std::invalid_argument("bad op syntax: " + text);
    if (dir == "fwd")
        step.dir = OpDir::forward;
    else if (dir == "rev")
        step.dir = OpDir::reverse;
    else
        throw std::invalid_argument("bad op direction: " + dir);
    int v;
    while (in >> v) step.site.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad op site: " + text);
    return step;
}

int cmd_check(const std::string& path) {
    Multigraph g = load_graph(path);
    bool connected = g.is_connected();
    bool regular4 = g.is_k_regular(4);
    bool tp = has_triangle_property(g);
    std::cout << "connected=" << (connected ? "true" : "false")
              << " regular4=" << (regular4 ? "true" : "false")
              << " triangle-property=" << (tp ? "true" : "false") << '\n';
    return connected && regular4 && tp ? kOk : kNegative;
}

int cmd_classify(const std::string& path, bool simple,
                 const std::string& cert_out) {
    Multigraph g = load_graph(path);
    Certificate cert;
    try {
        cert = simple ? classify_simple(g) : classify(g);
    } catch (const NotInClassError& e) {
        std::cerr << e.what() << '\n';
        return kNegative;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kNegative;
    }
    const Classification& cls = cert.classification;
    switch (cls.tag) {
        case BaseTag::squared_cycle:
            std::cout << "squared-cycle n=" << cls.cycle_length << '\n';
            break;
        case BaseTag::five_vertex:
            std::cout << "five-vertex\n";
            break;
        case BaseTag::line_of_cubic: {
            std::cout << "line-of-cubic root-n=" << cls.root.vertex_count();
            if (simple) {
                std::cout << " op2-steps=" << cls.steps.size();
            } else {
                std::cout << " steps=" << cls.steps.size();
            }
            std::cout << '\n';
            break;
        }
    }
    if (!cert_out.empty()) {
        std::ofstream out(cert_out);
        if (!out) {
            std::cerr << "cannot write " << cert_out << '\n';
            return kBadInput;
        }
        write_certificate(cert, out);
    }
    return kOk;
}

int cmd_build(const std::string& name, const std::vector<std::string>& params,
              const std::vector<std::string>& applies) {
    Multigraph g;
    if (name == "squared-cycle") {
        if (params.size() != 1)
            throw std::invalid_argument("squared-cycle needs <n>");
        g = squared_cycle(std::stoi(params[0]));
    } else if (name == "line-of-cubic") {
        if (params.size() != 1)
            throw std::invalid_argument("line-of-cubic needs <mg1 file | ->");
        g = line_multigraph(load_graph(params[0]));
    } else if (name == "five-vertex") {
        g = five_vertex_exception();
    } else {
        g = named_block(name);  // throws for unknown names
    }
    for (const auto& text : applies) g = apply(g, parse_step(text)).graph;
    write_mg1(g, std::cout);
    return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
    Multigraph g = load_graph(graph_path);
    std::ifstream in(cert_path);
    if (!in) throw CertificateError("cannot open " + cert_path);
    std::ostringstream text;
    text << in.rdbuf();
    Certificate cert = read_certificate(text.str());
    if (verify_certificate(g, cert)) {
        std::cout << "valid\n";
        return kOk;
    }
    std::cout << "invalid\n";
    return kNegative;
}

int cmd_enumerate(int max_n, const std::string& out_dir, int threads) {
    EnumerationReport report = enumerate_quartic_tp(max_n, threads);
    for (int n = 3; n <= max_n; ++n) {
        std::cout << "n=" << n << " classes=" << report.count(n) << '\n';
        for (const auto& g : report.classes[n])
            std::cout << code_hex(canonical_form(g).code) << '\n';
    }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (int n = 3; n <= max_n; ++n)
            for (std::size_t i = 0; i < report.classes[n].size(); ++i) {
                std::ostringstream path;
                path << out_dir << "/n" << n << "-" << i << ".mg1";
                std::ofstream out(path.str());
                write_mg1(report.classes[n][i], out);
            }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected 4-regular multigraphs with the triangle property"};
    app.require_subcommand(1);

    std::string path = "-";
    auto* check = app.add_subcommand("check",
                                     "report connectivity, 4-regularity and "
                                     "the triangle property");
    check->add_option("input", path, "MG1 file, or - for stdin");

    std::string classify_path = "-", cert_out;
    bool simple = false;
    auto* classify_cmd =
        app.add_subcommand("classify", "classify and emit a certificate");
    classify_cmd->add_option("input", classify_path, "MG1 file, or - for stdin");
    classify_cmd->add_flag("--simple", simple,
                           "simple-graph classification (Op2-only steps)");
    classify_cmd->add_option("--cert", cert_out, "write the certificate here");

    std::string build_name;
    std::vector<std::string> build_params, build_applies;
    auto* build = app.add_subcommand("build", "construct a named graph");
    build->add_option("name", build_name,
                      "squared-cycle | line-of-cubic | five-vertex | k113 | "
                      "op5-left | op5-right | fig8-a | fig8-b")
        ->required();
    build->add_option("params", build_params, "constructor parameters");
    build->add_option("--apply", build_applies,
                      "apply an operation, e.g. \"op 2 fwd 0 1 2\"");

    std::string verify_graph, verify_cert;
    auto* verify = app.add_subcommand("verify", "check a certificate");
    verify->add_option("graph", verify_graph, "MG1 file, or - for stdin")
        ->required();
    verify->add_option("cert", verify_cert, "certificate file")->required();

    int max_n = 8, threads = 1;
    std::string out_dir;
    auto* enumerate =
        app.add_subcommand("enumerate", "enumerate the classes up to a bound");
    enumerate->add_option("max_n", max_n, "vertex bound (3..9)")->required();
    enumerate->add_option("--out", out_dir, "dump one MG1 file per class");
    enumerate->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kBadInput;
    }

    try {
        if (*check) return cmd_check(path);
        if (*classify_cmd) return cmd_classify(classify_path, simple, cert_out);
        if (*build) return cmd_build(build_name, build_params, build_applies);
        if (*verify) return cmd_verify(verify_graph, verify_cert);
        if (*enumerate) return cmd_enumerate(max_n, out_dir, threads);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
