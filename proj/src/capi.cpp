#include "tkplex/tkplex.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "tkplex/enumerator.hpp"
#include "tkplex/oracle.hpp"
#include "tkplex/temporal_graph.hpp"

struct tkp_graph {
    tkplex::TemporalGraph graph;
};

namespace {

thread_local std::string last_error;

tkp_status fail(tkp_status status, const std::string& message)
{
    last_error = message;
    return status;
}

template <typename Body>
tkp_status guarded(Body body)
{
    last_error.clear();
    try {
        return body();
    } catch (const tkplex::ParseError& e) {
        return fail(TKP_ERR_PARSE, e.what());
    } catch (const tkplex::oracle::SizeGuardError& e) {
        return fail(TKP_ERR_SIZE_GUARD, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TKP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(TKP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TKP_ERR_INTERNAL, "unknown error");
    }
}

tkplex::ParseOptions convert(const tkp_parse_options* options)
{
    tkp_parse_options defaults;
    tkp_parse_options_init(&defaults);
    const tkp_parse_options& o = options ? *options : defaults;
    tkplex::ParseOptions out;
    out.columns = {o.time_column, o.first_column, o.second_column};
    out.dedupe = o.dedupe != 0;
    out.self_loops = o.skip_self_loops ? tkplex::SelfLoopPolicy::skip : tkplex::SelfLoopPolicy::reject;
    out.resolution = o.resolution;
    return out;
}

void deliver(tkp_plex_callback callback, void* user_data, const tkplex::PlexRecord& record)
{
    if (callback) {
        callback(record.vertices.data(), record.vertices.size(), record.frames.start, record.frames.end, user_data);
    }
}

}  // namespace

extern "C" {

const char* tkp_last_error(void)
{
    return last_error.c_str();
}

const char* tkp_status_name(tkp_status status)
{
    switch (status) {
    case TKP_OK: return "ok";
    case TKP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TKP_ERR_PARSE: return "parse error";
    case TKP_ERR_TIMEOUT: return "timeout";
    case TKP_ERR_IO: return "i/o error";
    case TKP_ERR_SIZE_GUARD: return "size guard exceeded";
    case TKP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void tkp_parse_options_init(tkp_parse_options* options)
{
    if (!options) {
        return;
    }
    options->time_column = 0;
    options->first_column = 1;
    options->second_column = 2;
    options->dedupe = 1;
    options->skip_self_loops = 0;
    options->resolution = 1;
}

void tkp_search_config_init(tkp_search_config* config)
{
    if (!config) {
        return;
    }
    config->delta = 0;
    config->k = 1;
    config->pivoting = 0;
    config->connected = 0;
    config->time_limit_seconds = 0.0;
}

tkp_status tkp_graph_parse(const char* text, size_t length, const tkp_parse_options* options, tkp_graph** out)
{
    return guarded([&] {
        if (!out || (!text && length > 0)) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        *out = new tkp_graph{tkplex::parse_edge_list(std::string_view(text ? text : "", length), convert(options))};
        return TKP_OK;
    });
}

tkp_status tkp_graph_load(const char* path, const tkp_parse_options* options, tkp_graph** out)
{
    return guarded([&] {
        if (!path || !out) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            return fail(TKP_ERR_IO, std::string("cannot open ") + path);
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (in.bad()) {
            return fail(TKP_ERR_IO, std::string("cannot read ") + path);
        }
        *out = new tkp_graph{tkplex::parse_edge_list(buffer.str(), convert(options))};
        return TKP_OK;
    });
}

tkp_status tkp_graph_create(size_t vertex_count, const tkp_edge* edges, size_t edge_count, int64_t lifetime,
                            tkp_graph** out)
{
    return guarded([&] {
        if (!out || (!edges && edge_count > 0)) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        std::vector<tkplex::TemporalEdge> converted;
        converted.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) {
            converted.push_back(tkplex::TemporalEdge{edges[i].u, edges[i].v, edges[i].t});
        }
        *out = new tkp_graph{tkplex::TemporalGraph(vertex_count, std::move(converted), lifetime)};
        return TKP_OK;
    });
}

void tkp_graph_free(tkp_graph* graph)
{
    delete graph;
}

size_t tkp_graph_vertex_count(const tkp_graph* graph)
{
    return graph ? graph->graph.vertex_count() : 0;
}

size_t tkp_graph_edge_count(const tkp_graph* graph)
{
    return graph ? graph->graph.edge_count() : 0;
}

int64_t tkp_graph_lifetime(const tkp_graph* graph)
{
    return graph ? graph->graph.lifetime() : 0;
}

const char* tkp_graph_vertex_label(const tkp_graph* graph, uint32_t v)
{
    if (!graph || v >= graph->graph.vertex_count()) {
        return nullptr;
    }
    return graph->graph.label(v).c_str();
}

tkp_status tkp_graph_render(const tkp_graph* graph, char** out, size_t* length)
{
    return guarded([&] {
        if (!graph || !out) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        const std::string text = tkplex::render_edge_list(graph->graph);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
        if (length) {
            *length = text.size();
        }
        return TKP_OK;
    });
}

void tkp_string_free(char* text)
{
    delete[] text;
}

tkp_status tkp_scaled_delta(int64_t lifetime, size_t edge_count, double exponent, int64_t* out)
{
    return guarded([&] {
        if (!out) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        *out = tkplex::scaled_delta(lifetime, edge_count, exponent);
        return TKP_OK;
    });
}

tkp_status tkp_delta_slice_degeneracy(const tkp_graph* graph, int64_t delta, uint32_t* out)
{
    return guarded([&] {
        if (!graph || !out) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        const auto frames = tkplex::FrameDomain::make(graph->graph.lifetime(), delta);
        *out = tkplex::delta_slice_degeneracy(graph->graph, frames);
        return TKP_OK;
    });
}

tkp_status tkp_static_degeneracy(const tkp_graph* graph, uint32_t* out)
{
    return guarded([&] {
        if (!graph || !out) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        *out = tkplex::union_graph_degeneracy(graph->graph);
        return TKP_OK;
    });
}

tkp_status tkp_plex_count_bound(uint64_t n, uint64_t k, uint64_t d, uint64_t m, uint64_t lifetime, char* buffer,
                                size_t capacity, size_t* required)
{
    return guarded([&] {
        const std::string text = tkplex::plex_count_upper_bound(n, k, d, m, lifetime).str();
        if (required) {
            *required = text.size() + 1;
        }
        if (!buffer || capacity < text.size() + 1) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "buffer too small for bound");
        }
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        return TKP_OK;
    });
}

tkp_status tkp_enumerate(const tkp_graph* graph, const tkp_search_config* config, tkp_plex_callback callback,
                         void* user_data, tkp_run_stats* stats)
{
    return guarded([&] {
        if (!graph || !config) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        tkplex::SearchConfig search;
        search.delta = config->delta;
        search.k = config->k;
        search.pivoting = config->pivoting != 0;
        search.connectedness = config->connected != 0;
        if (config->time_limit_seconds > 0) {
            search.time_limit = config->time_limit_seconds;
        }
        const auto result = tkplex::enumerate_maximal_plexes(
            graph->graph, search, [&](const tkplex::PlexRecord& r) { deliver(callback, user_data, r); });
        if (stats) {
            stats->plex_count = result.plex_count;
            stats->max_plex_order = result.max_plex_order;
            stats->max_lifetime_length = result.max_lifetime_length;
            stats->recursive_calls = result.recursive_calls;
            stats->wall_time_seconds = result.wall_time_seconds;
            stats->timed_out = result.timed_out ? 1 : 0;
        }
        return result.timed_out ? fail(TKP_ERR_TIMEOUT, "time limit exceeded") : TKP_OK;
    });
}

tkp_status tkp_oracle_enumerate(const tkp_graph* graph, int64_t delta, uint32_t k, tkp_plex_callback callback,
                                void* user_data, size_t* count)
{
    return guarded([&] {
        if (!graph) {
            return fail(TKP_ERR_INVALID_ARGUMENT, "null argument");
        }
        const auto records = tkplex::oracle::enumerate_all_maximal(graph->graph, delta, k);
        for (const auto& r : records) {
            deliver(callback, user_data, r);
        }
        if (count) {
            *count = records.size();
        }
        return TKP_OK;
    });
}

}  // extern "C"
