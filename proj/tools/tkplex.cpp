// tkplex: enumerate maximal temporal k-plexes, report degeneracy, and
// cross-check enumerator output against the exhaustive oracle.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tkplex/tkplex.h"

namespace {

enum ExitCode { kOk = 0, kParameterError = 2, kParseError = 3, kTimeout = 4, kMismatch = 5, kInternal = 1 };

struct GraphDeleter {
    void operator()(tkp_graph* g) const { tkp_graph_free(g); }
};
using GraphPtr = std::unique_ptr<tkp_graph, GraphDeleter>;

struct InputOptions {
    std::string path;
    std::vector<unsigned> columns{0, 1, 2};
    bool skip_self_loops = false;
    bool keep_duplicates = false;
    long long resolution = 1;
};

void add_input_options(CLI::App& cmd, InputOptions& in)
{
    cmd.add_option("input", in.path, "Edge list: timestamp and two vertex columns per line")->required();
    cmd.add_option("--columns", in.columns, "0-based columns of timestamp, first vertex, second vertex")
        ->expected(3)
        ->delimiter(',');
    cmd.add_flag("--skip-self-loops", in.skip_self_loops, "Drop self-loops instead of failing");
    cmd.add_flag("--strict-duplicates", in.keep_duplicates, "Fail on duplicate edge lines instead of merging");
    cmd.add_option("--resolution", in.resolution, "Divisor applied to shifted timestamps")
        ->check(CLI::PositiveNumber);
}

int exit_for(tkp_status status)
{
    switch (status) {
    case TKP_OK: return kOk;
    case TKP_ERR_INVALID_ARGUMENT:
    case TKP_ERR_SIZE_GUARD: return kParameterError;
    case TKP_ERR_PARSE:
    case TKP_ERR_IO: return kParseError;
    case TKP_ERR_TIMEOUT: return kTimeout;
    case TKP_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

int report(tkp_status status)
{
    std::cerr << "tkplex: " << tkp_status_name(status) << ": " << tkp_last_error() << "\n";
    return exit_for(status);
}

tkp_status load(const InputOptions& in, GraphPtr& graph)
{
    tkp_parse_options options;
    tkp_parse_options_init(&options);
    options.time_column = in.columns[0];
    options.first_column = in.columns[1];
    options.second_column = in.columns[2];
    options.dedupe = in.keep_duplicates ? 0 : 1;
    options.skip_self_loops = in.skip_self_loops ? 1 : 0;
    options.resolution = in.resolution;
    tkp_graph* raw = nullptr;
    const tkp_status status = tkp_graph_load(in.path.c_str(), &options, &raw);
    graph.reset(raw);
    return status;
}

std::string dataset_name(const std::string& path)
{
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

// Δ from --delta, else from --delta-exp.
tkp_status resolve_delta(const tkp_graph* graph, std::optional<long long> delta, std::optional<double> exponent,
                         long long& out)
{
    if (delta) {
        out = *delta;
        return TKP_OK;
    }
    int64_t scaled = 0;
    const tkp_status status =
        tkp_scaled_delta(tkp_graph_lifetime(graph), tkp_graph_edge_count(graph), exponent.value_or(0.0), &scaled);
    out = scaled;
    return status;
}

std::string render_record(const tkp_graph* graph, const uint32_t* vertices, size_t count, int64_t first,
                          int64_t last)
{
    std::string line;
    for (size_t i = 0; i < count; ++i) {
        line += tkp_graph_vertex_label(graph, vertices[i]);
        line += ' ';
    }
    line += std::to_string(first) + ' ' + std::to_string(last);
    return line;
}

std::optional<std::string> plex_bound(const tkp_graph* graph, uint64_t k, uint64_t d)
{
    size_t required = 0;
    tkp_plex_count_bound(tkp_graph_vertex_count(graph), k, d, tkp_graph_edge_count(graph),
                         tkp_graph_lifetime(graph), nullptr, 0, &required);
    std::string buffer(required, '\0');
    if (tkp_plex_count_bound(tkp_graph_vertex_count(graph), k, d, tkp_graph_edge_count(graph),
                             tkp_graph_lifetime(graph), buffer.data(), buffer.size(), nullptr) != TKP_OK) {
        return std::nullopt;
    }
    buffer.pop_back();
    return buffer;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions {
    InputOptions input;
    std::optional<long long> delta;
    std::optional<double> delta_exp;
    unsigned k = 1;
    bool pivoting = false;
    bool connected = false;
    std::optional<double> time_limit;
    std::string output;
    std::string stats;
    bool degeneracy = false;
    bool bound = false;
};

struct Sink {
    const tkp_graph* graph;
    std::ostream* out;
};

void write_plex(const uint32_t* vertices, size_t count, int64_t first, int64_t last, void* user)
{
    auto* sink = static_cast<Sink*>(user);
    *sink->out << render_record(sink->graph, vertices, count, first, last) << '\n';
}

int run_enumerate(const EnumerateOptions& opt)
{
    GraphPtr graph;
    if (tkp_status s = load(opt.input, graph); s != TKP_OK) {
        return report(s);
    }
    long long delta = 0;
    if (tkp_status s = resolve_delta(graph.get(), opt.delta, opt.delta_exp, delta); s != TKP_OK) {
        return report(s);
    }

    std::optional<uint32_t> degeneracy;
    std::optional<std::string> bound;
    if (opt.degeneracy || opt.bound) {
        uint32_t d = 0;
        if (tkp_status s = tkp_delta_slice_degeneracy(graph.get(), delta, &d); s != TKP_OK) {
            return report(s);
        }
        degeneracy = d;
        if (opt.bound) {
            bound = plex_bound(graph.get(), opt.k, d);
        }
    }

    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "tkplex: cannot write " << opt.output << "\n";
            return kParameterError;
        }
    }
    // Without --output the plexes own stdout and the table moves to stderr.
    std::ostream& table = opt.output.empty() ? std::cerr : std::cout;
    Sink sink{graph.get(), opt.output.empty() ? &std::cout : &file};

    tkp_search_config config;
    tkp_search_config_init(&config);
    config.delta = delta;
    config.k = opt.k;
    config.pivoting = opt.pivoting;
    config.connected = opt.connected;
    config.time_limit_seconds = opt.time_limit.value_or(0.0);
    tkp_run_stats stats{};
    const tkp_status status = tkp_enumerate(graph.get(), &config, write_plex, &sink, &stats);
    sink.out->flush();
    if (status != TKP_OK && status != TKP_ERR_TIMEOUT) {
        return report(status);
    }

    std::vector<std::pair<std::string, std::string>> fields = {
        {"dataset", dataset_name(opt.input.path)},
        {"n", std::to_string(tkp_graph_vertex_count(graph.get()))},
        {"m", std::to_string(tkp_graph_edge_count(graph.get()))},
        {"lifetime", std::to_string(tkp_graph_lifetime(graph.get()))},
        {"delta", std::to_string(delta)},
        {"k", std::to_string(opt.k)},
        {"pivoting", opt.pivoting ? "true" : "false"},
        {"connected", opt.connected ? "true" : "false"},
        {"plexes", std::to_string(stats.plex_count)},
        {"max_plex_order", std::to_string(stats.max_plex_order)},
        {"max_lifetime", std::to_string(stats.max_lifetime_length)},
        {"recursive_calls", std::to_string(stats.recursive_calls)},
        {"wall_seconds", [&] {
             std::ostringstream s;
             s << std::fixed << std::setprecision(6) << stats.wall_time_seconds;
             return s.str();
         }()},
        {"timed_out", stats.timed_out ? "true" : "false"},
    };
    if (degeneracy) {
        fields.emplace_back("degeneracy", std::to_string(*degeneracy));
    }
    if (bound) {
        fields.emplace_back("bound", *bound);
    }

    for (const auto& [key, value] : fields) {
        table << std::left << std::setw(16) << key << value << '\n';
    }
    if (!opt.stats.empty()) {
        std::ofstream out(opt.stats, std::ios::trunc);
        for (const auto& [key, value] : fields) {
            out << key << '=' << value << '\n';
        }
        if (!out) {
            std::cerr << "tkplex: cannot write " << opt.stats << "\n";
            return kParameterError;
        }
    }
    if (status == TKP_ERR_TIMEOUT) {
        std::cerr << "tkplex: time limit reached, output is partial\n";
        return kTimeout;
    }
    return kOk;
}

// --------------------------------------------------------------- degeneracy

struct DegeneracyOptions {
    InputOptions input;
    std::vector<long long> deltas;
    std::vector<double> exponents;
};

int run_degeneracy(const DegeneracyOptions& opt)
{
    GraphPtr graph;
    if (tkp_status s = load(opt.input, graph); s != TKP_OK) {
        return report(s);
    }
    uint32_t static_value = 0;
    if (tkp_status s = tkp_static_degeneracy(graph.get(), &static_value); s != TKP_OK) {
        return report(s);
    }
    std::cout << "dataset " << dataset_name(opt.input.path) << "\n";
    std::cout << "static " << static_value << "\n";
    std::vector<std::pair<std::string, long long>> requested;
    for (long long d : opt.deltas) {
        requested.emplace_back("delta=" + std::to_string(d), d);
    }
    for (double e : opt.exponents) {
        long long d = 0;
        if (tkp_status s = resolve_delta(graph.get(), std::nullopt, e, d); s != TKP_OK) {
            return report(s);
        }
        std::ostringstream name;
        name << "exp=" << e << " delta=" << d;
        requested.emplace_back(name.str(), d);
    }
    for (const auto& [name, delta] : requested) {
        uint32_t value = 0;
        if (tkp_status s = tkp_delta_slice_degeneracy(graph.get(), delta, &value); s != TKP_OK) {
            return report(s);
        }
        std::cout << name << " " << value << "\n";
    }
    return kOk;
}

// ------------------------------------------------------------------- oracle

struct OracleOptions {
    InputOptions input;
    long long delta = 0;
    unsigned k = 1;
    std::string plexes;
    bool connected = false;
};

struct OracleCollect {
    const tkp_graph* graph;
    std::size_t min_size;
    std::set<std::string>* lines;
};

void collect_oracle(const uint32_t* vertices, size_t count, int64_t first, int64_t last, void* user)
{
    auto* c = static_cast<OracleCollect*>(user);
    if (count >= c->min_size) {
        c->lines->insert(render_record(c->graph, vertices, count, first, last));
    }
}

// Canonical form of one output line; nullopt if malformed.
std::optional<std::string> canonical_line(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) {
        tokens.push_back(t);
    }
    if (tokens.size() < 3) {
        return std::nullopt;
    }
    long long first = 0;
    long long last = 0;
    try {
        std::size_t used = 0;
        first = std::stoll(tokens[tokens.size() - 2], &used);
        if (used != tokens[tokens.size() - 2].size()) {
            return std::nullopt;
        }
        last = std::stoll(tokens.back(), &used);
        if (used != tokens.back().size()) {
            return std::nullopt;
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    std::vector<std::string> labels(tokens.begin(), tokens.end() - 2);
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (const auto& l : labels) {
        out += l + ' ';
    }
    return out + std::to_string(first) + ' ' + std::to_string(last);
}

int run_oracle(const OracleOptions& opt)
{
    GraphPtr graph;
    if (tkp_status s = load(opt.input, graph); s != TKP_OK) {
        return report(s);
    }
    std::ifstream in(opt.plexes);
    if (!in) {
        std::cerr << "tkplex: cannot open " << opt.plexes << "\n";
        return kParseError;
    }
    std::set<std::string> claimed;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        auto c = canonical_line(line);
        if (!c) {
            std::cerr << "tkplex: " << opt.plexes << ": line " << line_no << ": malformed plex record\n";
            return kParseError;
        }
        claimed.insert(*c);
    }

    std::set<std::string> truth;
    OracleCollect collect{graph.get(), opt.connected ? 2 * static_cast<std::size_t>(opt.k) + 1 : 1, &truth};
    if (tkp_status s = tkp_oracle_enumerate(graph.get(), opt.delta, opt.k, collect_oracle, &collect, nullptr);
        s != TKP_OK) {
        return report(s);
    }

    std::vector<std::string> missing;
    std::vector<std::string> extra;
    std::set_difference(truth.begin(), truth.end(), claimed.begin(), claimed.end(), std::back_inserter(missing));
    std::set_difference(claimed.begin(), claimed.end(), truth.begin(), truth.end(), std::back_inserter(extra));
    for (const auto& m : missing) {
        std::cout << "missing " << m << "\n";
    }
    for (const auto& e : extra) {
        std::cout << "extra " << e << "\n";
    }
    std::cout << "oracle " << truth.size() << " claimed " << claimed.size() << " missing " << missing.size()
              << " extra " << extra.size() << "\n";
    return missing.empty() && extra.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Maximal temporal k-plex enumeration"};
    app.require_subcommand(1);

    EnumerateOptions enumerate;
    auto* cmd_enum = app.add_subcommand("enumerate", "Enumerate all maximal Δ-k-plexes");
    add_input_options(*cmd_enum, enumerate.input);
    auto* delta_opt = cmd_enum->add_option("--delta", enumerate.delta, "Frame width Δ (raw time steps)");
    auto* exp_opt =
        cmd_enum->add_option("--delta-exp", enumerate.delta_exp, "Scaled Δ = round(5^e * lifetime / (5m))");
    delta_opt->check(CLI::NonNegativeNumber);
    cmd_enum->add_option("--k", enumerate.k, "Non-neighbor budget k (self included)")->default_val(1);
    cmd_enum->add_flag("--pivoting", enumerate.pivoting, "Enable pivot pruning");
    cmd_enum->add_flag("--connected", enumerate.connected, "Only plexes of order >= 2k+1, prune unlinked candidates");
    cmd_enum->add_option("--time-limit", enumerate.time_limit, "Wall-clock limit in seconds")
        ->check(CLI::PositiveNumber);
    cmd_enum->add_option("--output", enumerate.output, "Write plex lines here instead of stdout");
    cmd_enum->add_option("--stats", enumerate.stats, "Write key=value statistics here");
    cmd_enum->add_flag("--degeneracy", enumerate.degeneracy, "Also report Δ-slice degeneracy");
    cmd_enum->add_flag("--bound", enumerate.bound, "Also report the recursive-call upper bound");
    cmd_enum->callback([&] {
        if (!delta_opt->count() && !exp_opt->count()) {
            throw CLI::RequiredError("--delta or --delta-exp");
        }
    });

    DegeneracyOptions degeneracy;
    auto* cmd_deg = app.add_subcommand("degeneracy", "Static and Δ-slice degeneracy");
    add_input_options(*cmd_deg, degeneracy.input);
    cmd_deg->add_option("--delta", degeneracy.deltas, "Raw Δ values")->delimiter(',');
    cmd_deg->add_option("--delta-exp", degeneracy.exponents, "Scaled Δ exponents")->delimiter(',');

    OracleOptions oracle;
    auto* cmd_oracle = app.add_subcommand("oracle", "Diff an enumerator output file against the exhaustive oracle");
    add_input_options(*cmd_oracle, oracle.input);
    cmd_oracle->add_option("--delta", oracle.delta, "Frame width Δ")->required();
    cmd_oracle->add_option("--k", oracle.k, "Non-neighbor budget k")->default_val(1);
    cmd_oracle->add_option("--plexes", oracle.plexes, "Enumerator output to check")->required();
    cmd_oracle->add_flag("--connected", oracle.connected, "Compare against plexes of order >= 2k+1 only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParameterError;
    }

    if (enumerate.k < 1 || oracle.k < 1) {
        std::cerr << "tkplex: k must be at least 1\n";
        return kParameterError;
    }
    if (*cmd_enum) {
        return run_enumerate(enumerate);
    }
    if (*cmd_deg) {
        return run_degeneracy(degeneracy);
    }
    return run_oracle(oracle);
}
