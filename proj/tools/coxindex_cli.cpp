// Command-line front end. Links only against the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "coxindex/coxindex.h"

namespace {

constexpr int kExitInputError = 2;

struct GraphDeleter {
    void operator()(coxidx_graph* g) const { coxidx_graph_free(g); }
};
using GraphPtr = std::unique_ptr<coxidx_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { coxidx_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check(coxidx_status status) {
    if (status != COXIDX_OK) throw CliError(coxidx_last_error());
}

// FILE or builtin:NAME.
GraphPtr load(const std::string& source, const std::string& format) {
    coxidx_graph* g = nullptr;
    if (source.rfind("builtin:", 0) == 0) {
        check(coxidx_graph_builtin(source.substr(8).c_str(), &g));
    } else {
        coxidx_graph_format f = format == "json" ? COXIDX_GRAPH_JSON
                                : format == "edgelist" ? COXIDX_GRAPH_EDGELIST
                                                       : COXIDX_GRAPH_AUTO;
        check(coxidx_graph_load(source.c_str(), f, &g));
    }
    return GraphPtr(g);
}

void print(OwnedString s) { std::fputs(s.get(), stdout); }

template <typename F>
void emit(F&& call) {
    char* out = nullptr;
    check(call(&out));
    print(OwnedString(out));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergraph index and related invariants of right-angled Coxeter groups"};
    app.require_subcommand(1);
    app.fallthrough();

    int threads = 0;
    std::string report = "json";
    std::string input_format = "auto";
    app.add_option("--threads", threads, "Worker threads (default: COXINDEX_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--format", report, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--input-format", input_format, "Graph file format")->check(CLI::IsMember({"auto", "edgelist", "json"}));

    std::string file;
    auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "Graph file or builtin:NAME")->required(); };

    auto* index = app.add_subcommand("index", "Hypergraph index");
    add_file(index);

    int level = -1;
    bool dot = false;
    auto* lambda = app.add_subcommand("lambda", "Lambda hypergraphs and membership");
    add_file(lambda);
    lambda->add_option("--level", level, "Show only this level")->check(CLI::NonNegativeNumber);
    lambda->add_flag("--dot", dot, "Emit Graphviz DOT for one level (default 0)");

    auto* omega = app.add_subcommand("omega", "Wide subgraphs with join witnesses");
    add_file(omega);
    auto* psi = app.add_subcommand("psi", "Strip subgraphs with join witnesses");
    add_file(psi);

    int cap = 16;
    auto* spectrum = app.add_subcommand("spectrum", "Hypergraph index spectrum");
    add_file(spectrum);
    spectrum->add_option("--cap", cap, "Largest vertex count accepted")->check(CLI::NonNegativeNumber);

    std::vector<std::string> pair;
    int max_level = 1;
    auto* rank = app.add_subcommand("rank", "Rank-n predicates of a non-commuting pair");
    add_file(rank);
    rank->add_option("--pair", pair, "The two vertices S T")->expected(2)->required();
    rank->add_option("--max", max_level, "Largest n")->required()->check(CLI::PositiveNumber);

    auto* bounds = app.add_subcommand("bounds", "Thickness and divergence bounds");
    add_file(bounds);

    int n = 2;
    std::string seed_file;
    std::string links;
    std::string certificate_out;
    auto* gen = app.add_subcommand("gen", "Generate graph families");
    auto* gamma = gen->add_subcommand("gamma-n", "Counterexample graph with index n");
    gen->require_subcommand(1);
    gamma->add_option("--n", n, "Target index (>= 2)")->required();
    gamma->add_option("--seed-file", seed_file, "Seed graph of index 1 (default: builtin theta8)");
    gamma->add_option("--links", links, "Per-step links 'p,q:r,s', steps separated by ';'");
    gamma->add_option("--certificate", certificate_out, "Also write the certificate JSON to this file");

    std::string u, v;
    auto* thm = app.add_subcommand("check-thm72", "Check the counterexample hypotheses for u, v");
    add_file(thm);
    thm->add_option("--u", u, "Vertex u")->required();
    thm->add_option("--v", v, "Vertex v")->required();

    auto* diff = app.add_subcommand("oracle-diff", "Compare against the brute-force oracle");
    add_file(diff);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (threads > 0) coxidx_set_threads(threads);
    const coxidx_report_format fmt = report == "text" ? COXIDX_REPORT_TEXT : COXIDX_REPORT_JSON;

    try {
        if (index->parsed()) {
            auto g = load(file, input_format);
            emit([&](char** out) { return coxidx_index(g.get(), fmt, out); });
        } else if (lambda->parsed()) {
            auto g = load(file, input_format);
            if (dot) {
                emit([&](char** out) { return coxidx_lambda_dot(g.get(), level < 0 ? 0 : level, out); });
            } else {
                emit([&](char** out) { return coxidx_lambda(g.get(), level, fmt, out); });
            }
        } else if (omega->parsed()) {
            auto g = load(file, input_format);
            emit([&](char** out) { return coxidx_omega(g.get(), fmt, out); });
        } else if (psi->parsed()) {
            auto g = load(file, input_format);
            emit([&](char** out) { return coxidx_psi(g.get(), fmt, out); });
        } else if (spectrum->parsed()) {
            auto g = load(file, input_format);
            emit([&](char** out) { return coxidx_spectrum(g.get(), cap, fmt, out); });
        } else if (rank->parsed()) {
            auto g = load(file, input_format);
            emit([&](char** out) { return coxidx_rank(g.get(), pair[0].c_str(), pair[1].c_str(), max_level, fmt, out); });
        } else if (bounds->parsed()) {
            auto g = load(file, input_format);
            emit([&](char** out) { return coxidx_bounds(g.get(), fmt, out); });
        } else if (gamma->parsed()) {
            GraphPtr seed;
            if (!seed_file.empty()) seed = load(seed_file, input_format);
            coxidx_graph* raw = nullptr;
            char* cert = nullptr;
            check(coxidx_generate_gamma_n(n, seed.get(), links.empty() ? nullptr : links.c_str(), &raw, &cert));
            GraphPtr g(raw);
            OwnedString certificate(cert);
            if (!certificate_out.empty()) {
                std::ofstream f(certificate_out);
                if (!f) throw CliError("cannot write '" + certificate_out + "'");
                f << certificate.get();
            }
            emit([&](char** out) { return coxidx_graph_emit(g.get(), COXIDX_GRAPH_JSON, out); });
        } else if (thm->parsed()) {
            auto g = load(file, input_format);
            emit([&](char** out) { return coxidx_check_thm72(g.get(), u.c_str(), v.c_str(), fmt, out); });
        } else if (diff->parsed()) {
            auto g = load(file, input_format);
            int mismatch = 0;
            emit([&](char** out) { return coxidx_oracle_diff(g.get(), fmt, &mismatch, out); });
            if (mismatch != 0) return 1;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
