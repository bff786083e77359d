#include "coxindex/coxindex.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <new>
#include <sstream>
#include <string>

#include "coxindex/io.hpp"
#include "coxindex/lambda.hpp"
#include "coxindex/oracle.hpp"
#include "coxindex/parallel.hpp"
#include "coxindex/rank.hpp"
#include "coxindex/spectrum.hpp"

struct coxidx_graph {
    coxindex::SimplicialGraph graph;
    std::string name;
    std::map<std::string, std::string> metadata;
};

namespace {

thread_local std::string last_error;

coxidx_status fail(coxidx_status status, const std::string& message) {
    last_error = message;
    return status;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

coxindex::ReportFormat report_format(coxidx_report_format f) {
    return f == COXIDX_REPORT_TEXT ? coxindex::ReportFormat::Text : coxindex::ReportFormat::Json;
}

// Runs body and maps library exceptions onto status codes.
template <typename F>
coxidx_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const coxindex::ParseError& e) {
        return fail(COXIDX_E_PARSE, e.what());
    } catch (const coxindex::InputError& e) {
        return fail(COXIDX_E_INPUT, e.what());
    } catch (const coxindex::ResourceLimitError& e) {
        return fail(COXIDX_E_RESOURCE, e.what());
    } catch (const coxindex::ContractError& e) {
        return fail(COXIDX_E_CONTRACT, e.what());
    } catch (const coxindex::GenerationError& e) {
        return fail(COXIDX_E_GENERATION, e.what());
    } catch (const std::bad_alloc&) {
        return fail(COXIDX_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(COXIDX_E_INTERNAL, e.what());
    } catch (...) {
        return fail(COXIDX_E_INTERNAL, "unknown error");
    }
}

#define COXIDX_REQUIRE(cond, what) \
    if (!(cond)) return fail(COXIDX_E_ARGUMENT, what)

coxindex::GraphFormat resolve_format(coxidx_graph_format f, const std::string& path, const std::string& text) {
    switch (f) {
        case COXIDX_GRAPH_EDGELIST: return coxindex::GraphFormat::EdgeList;
        case COXIDX_GRAPH_JSON: return coxindex::GraphFormat::Json;
        default: return coxindex::detect_format(path, text);
    }
}

coxidx_graph* make_handle(const coxindex::GraphDocument& doc) {
    return new coxidx_graph{coxindex::to_graph(doc), doc.name, doc.metadata};
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string part; std::getline(in, part, sep);) out.push_back(trim(part));
    return out;
}

// "p,q:r,s;p2,q2:r2,s2"
coxindex::AttachmentRule parse_links(const char* links) {
    coxindex::AttachmentRule rule;
    if (links == nullptr || *links == '\0') return rule;
    for (const std::string& step : split(links, ';')) {
        if (step.empty()) continue;
        auto halves = split(step, ':');
        if (halves.size() != 2) throw coxindex::InputError("link step '" + step + "' must look like 'p,q:r,s'");
        auto u = split(halves[0], ',');
        auto v = split(halves[1], ',');
        if (u.size() != 2 || v.size() != 2) throw coxindex::InputError("link step '" + step + "' must look like 'p,q:r,s'");
        rule.explicit_steps.push_back({u[0], u[1], v[0], v[1]});
    }
    return rule;
}

}  // namespace

extern "C" {

const char* coxidx_last_error(void) { return last_error.c_str(); }

const char* coxidx_version(void) { return "1.0.0"; }

void coxidx_string_free(char* s) { std::free(s); }

void coxidx_set_threads(int n) { coxindex::set_thread_count(n); }

int coxidx_threads(void) { return coxindex::thread_count(); }

coxidx_status coxidx_graph_parse(const char* text, coxidx_graph_format format, coxidx_graph** out) {
    COXIDX_REQUIRE(text != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        std::string s(text);
        *out = make_handle(coxindex::parse_graph(s, resolve_format(format, "", s)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_graph_load(const char* path, coxidx_graph_format format, coxidx_graph** out) {
    COXIDX_REQUIRE(path != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in) return fail(COXIDX_E_IO, std::string("cannot open '") + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        *out = make_handle(coxindex::parse_graph(text, resolve_format(format, path, text)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_graph_builtin(const char* name, coxidx_graph** out) {
    COXIDX_REQUIRE(name != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = new coxidx_graph{coxindex::builtin_graph(name), name, {}};
        return COXIDX_OK;
    });
}

void coxidx_graph_free(coxidx_graph* g) { delete g; }

int coxidx_graph_vertex_count(const coxidx_graph* g) { return g == nullptr ? -1 : g->graph.size(); }

int coxidx_graph_edge_count(const coxidx_graph* g) { return g == nullptr ? -1 : g->graph.edge_count(); }

coxidx_status coxidx_graph_emit(const coxidx_graph* g, coxidx_graph_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        auto f = format == COXIDX_GRAPH_EDGELIST ? coxindex::GraphFormat::EdgeList : coxindex::GraphFormat::Json;
        auto doc = coxindex::to_document(g->graph, g->name);
        doc.metadata = g->metadata;
        *out = dup_string(coxindex::emit_document(doc, f));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_index(const coxidx_graph* g, coxidx_report_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = dup_string(coxindex::emit_index(g->graph, coxindex::hypergraph_index(g->graph), report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_index_value(const coxidx_graph* g, int* index) {
    COXIDX_REQUIRE(g != nullptr && index != nullptr, "null argument");
    return guarded([&] {
        auto r = coxindex::hypergraph_index(g->graph);
        *index = r.index.value_or(-1);
        return COXIDX_OK;
    });
}

coxidx_status coxidx_lambda(const coxidx_graph* g, int level, coxidx_report_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        auto seq = coxindex::lambda_sequence(g->graph);
        *out = dup_string(coxindex::emit_lambda(g->graph, seq, level < 0 ? -1 : level, report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_lambda_dot(const coxidx_graph* g, int level, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        auto seq = coxindex::lambda_sequence(g->graph);
        *out = dup_string(coxindex::emit_dot(g->graph, seq, level));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_omega(const coxidx_graph* g, coxidx_report_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = dup_string(coxindex::emit_joins(g->graph, coxindex::enumerate_wide(g->graph), report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_psi(const coxidx_graph* g, coxidx_report_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        auto wide = coxindex::enumerate_wide(g->graph);
        *out = dup_string(coxindex::emit_joins(g->graph, coxindex::enumerate_strip(g->graph, wide), report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_spectrum(const coxidx_graph* g, int cap, coxidx_report_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    COXIDX_REQUIRE(cap >= 0, "cap must be non-negative");
    return guarded([&] {
        *out = dup_string(coxindex::emit_spectrum(g->graph, coxindex::spectrum(g->graph, cap), report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_rank(const coxidx_graph* g, const char* s, const char* t, int max_level,
                          coxidx_report_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && s != nullptr && t != nullptr && out != nullptr, "null argument");
    COXIDX_REQUIRE(max_level >= 1, "rank level must be at least 1");
    return guarded([&] {
        int si = g->graph.index_of(s);
        int ti = g->graph.index_of(t);
        auto table = coxindex::rank_table(g->graph, max_level);
        *out = dup_string(coxindex::emit_rank(g->graph, si, ti, table, report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_bounds(const coxidx_graph* g, coxidx_report_format format, char** out) {
    COXIDX_REQUIRE(g != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = dup_string(coxindex::emit_bounds(g->graph, coxindex::bounds(g->graph), report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_check_thm72(const coxidx_graph* g, const char* u, const char* v, coxidx_report_format format,
                                 char** out) {
    COXIDX_REQUIRE(g != nullptr && u != nullptr && v != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        auto cert = coxindex::check_thm72(g->graph, g->graph.index_of(u), g->graph.index_of(v));
        *out = dup_string(coxindex::emit_certificate(g->graph, cert, report_format(format)));
        return COXIDX_OK;
    });
}

coxidx_status coxidx_generate_gamma_n(int n, const coxidx_graph* seed, const char* links, coxidx_graph** out_graph,
                                      char** out_certificate) {
    COXIDX_REQUIRE(out_graph != nullptr && out_certificate != nullptr, "null argument");
    return guarded([&] {
        coxindex::SimplicialGraph base = seed != nullptr ? seed->graph : coxindex::theta8();
        auto result = coxindex::generate_gamma_n(n, base, parse_links(links));
        std::string cert = coxindex::emit_certificate(result.graph, result.certificate, coxindex::ReportFormat::Json);
        *out_certificate = dup_string(cert);
        std::map<std::string, std::string> meta{{"n", std::to_string(n)},
                                                {"u", result.graph.label(result.u)},
                                                {"v", result.graph.label(result.v)},
                                                {"certificate", cert.substr(0, cert.size() - 1)}};
        *out_graph = new coxidx_graph{result.graph, "gamma_" + std::to_string(n), meta};
        return COXIDX_OK;
    });
}

coxidx_status coxidx_oracle_diff(const coxidx_graph* g, coxidx_report_format format, int* mismatch, char** out) {
    COXIDX_REQUIRE(g != nullptr && mismatch != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        auto d = coxindex::oracle::diff(g->graph, true);
        *mismatch = d.ok() ? 0 : 1;
        if (format == COXIDX_REPORT_TEXT) {
            std::string s;
            s += std::string("omega: ") + (d.omega_equal ? "match" : "MISMATCH") + "\n";
            s += std::string("psi: ") + (d.psi_equal ? "match" : "MISMATCH") + "\n";
            s += std::string("lambda: ") + (d.lambda_equal ? "match" : "MISMATCH") + "\n";
            s += std::string("index: ") + (d.index_equal ? "match" : "MISMATCH") + "\n";
            s += std::string("spectrum: ") + (!d.spectrum_checked ? "skipped" : d.spectrum_equal ? "match" : "MISMATCH") + "\n";
            *out = dup_string(s);
        } else {
            std::string s = std::string("{\"match\":") + (d.ok() ? "true" : "false") +
                            ",\"omega\":" + (d.omega_equal ? "true" : "false") +
                            ",\"psi\":" + (d.psi_equal ? "true" : "false") +
                            ",\"lambda\":" + (d.lambda_equal ? "true" : "false") +
                            ",\"index\":" + (d.index_equal ? "true" : "false") +
                            ",\"spectrum\":" + (!d.spectrum_checked ? "null" : d.spectrum_equal ? "true" : "false") + "}\n";
            *out = dup_string(s);
        }
        return COXIDX_OK;
    });
}

}  // extern "C"
