#include "tkplex/temporal_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace tkplex {

namespace {

std::vector<std::string> numbered_labels(std::size_t n)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return labels;
}

std::uint64_t pair_key(Vertex u, Vertex v)
{
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Batagelj-Zaversnik bucket peeling over an edge list of distinct pairs.
std::uint32_t peel_degeneracy(std::size_t n, const std::vector<std::uint64_t>& pairs)
{
    if (pairs.empty()) {
        return 0;
    }
    std::vector<std::uint32_t> degree(n, 0);
    for (auto key : pairs) {
        ++degree[key >> 32];
        ++degree[key & 0xffffffffu];
    }
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        offset[v + 1] = offset[v] + degree[v];
    }
    std::vector<Vertex> adjacency(offset[n]);
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (auto key : pairs) {
        const auto u = static_cast<Vertex>(key >> 32);
        const auto v = static_cast<Vertex>(key & 0xffffffffu);
        adjacency[fill[u]++] = v;
        adjacency[fill[v]++] = u;
    }

    const std::uint32_t max_degree = *std::max_element(degree.begin(), degree.end());
    std::vector<std::size_t> bin(max_degree + 2, 0);
    for (auto d : degree) {
        ++bin[d];
    }
    std::size_t start = 0;
    for (auto& b : bin) {
        const auto count = b;
        b = start;
        start += count;
    }
    std::vector<Vertex> order(n);
    std::vector<std::size_t> position(n);
    for (Vertex v = 0; v < n; ++v) {
        position[v] = bin[degree[v]]++;
        order[position[v]] = v;
    }
    for (std::size_t d = max_degree + 1; d > 0; --d) {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    std::uint32_t result = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        result = std::max(result, degree[v]);
        for (std::size_t e = offset[v]; e < offset[v + 1]; ++e) {
            const Vertex u = adjacency[e];
            if (degree[u] > degree[v]) {
                const std::uint32_t du = degree[u];
                const std::size_t pu = position[u];
                const std::size_t pw = bin[du];
                const Vertex w = order[pw];
                if (u != w) {
                    std::swap(order[pu], order[pw]);
                    position[u] = pw;
                    position[w] = pu;
                }
                ++bin[du];
                --degree[u];
            }
        }
    }
    return result;
}

}  // namespace

TemporalGraph::TemporalGraph(std::vector<std::string> labels, std::vector<TemporalEdge> edges,
                             TimeStep lifetime)
    : labels_(std::move(labels)), edges_(std::move(edges)), lifetime_(lifetime)
{
    if (lifetime_ < 1) {
        throw std::invalid_argument("lifetime must be at least 1");
    }
    const auto n = labels_.size();
    for (auto& e : edges_) {
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        }
        if (e.u >= n || e.v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.t < 1 || e.t > lifetime_) {
            throw std::invalid_argument("timestamp " + std::to_string(e.t) + " outside [1," +
                                        std::to_string(lifetime_) + "]");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
        return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

TemporalGraph::TemporalGraph(std::size_t vertex_count, std::vector<TemporalEdge> edges, TimeStep lifetime)
    : TemporalGraph(numbered_labels(vertex_count), std::move(edges), lifetime)
{
}

std::optional<Vertex> TemporalGraph::find_vertex(std::string_view label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return static_cast<Vertex>(i);
        }
    }
    return std::nullopt;
}

RawEdgeList read_edge_list(std::string_view text, const ParseOptions& options)
{
    struct Row {
        std::string first;
        std::string second;
        std::int64_t t;
        std::size_t line;
    };
    std::vector<Row> rows;
    std::vector<Row> loops;
    std::size_t self_loops = 0;
    std::size_t first_self_loop_line = 0;
    const std::size_t needed =
        std::max({options.columns.time, options.columns.first, options.columns.second}) + 1;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::vector<std::string_view> tokens;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        tokens.clear();
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            const std::size_t begin = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            if (i > begin) {
                tokens.push_back(line.substr(begin, i - begin));
            }
        }
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        if (tokens.size() < needed) {
            throw ParseError("expected at least " + std::to_string(needed) + " columns", line_no);
        }
        const auto time_token = tokens[options.columns.time];
        std::int64_t t = 0;
        auto [ptr, ec] = std::from_chars(time_token.data(), time_token.data() + time_token.size(), t);
        if (ec != std::errc{} || ptr != time_token.data() + time_token.size() || t < 0) {
            throw ParseError("invalid timestamp '" + std::string(time_token) + "'", line_no);
        }
        const auto a = tokens[options.columns.first];
        const auto b = tokens[options.columns.second];
        if (a == b) {
            if (self_loops++ == 0) {
                first_self_loop_line = line_no;
            }
            loops.push_back(Row{std::string(a), std::string(a), t, line_no});
            continue;
        }
        rows.push_back(Row{std::string(a), std::string(b), t, line_no});
    }

    if (self_loops > 0 && options.self_loops == SelfLoopPolicy::reject) {
        throw ParseError("self-loop rejected (" + std::to_string(self_loops) + " in input)",
                         first_self_loop_line);
    }
    if (rows.empty() && loops.empty()) {
        throw ParseError("empty input", 0);
    }

    RawEdgeList raw;
    raw.skipped_self_loops = self_loops;
    raw.labels.reserve(2 * rows.size() + loops.size());
    for (const auto& row : rows) {
        raw.labels.push_back(row.first);
        raw.labels.push_back(row.second);
    }
    for (const auto& row : loops) {
        raw.labels.push_back(row.first);
        raw.skipped_times.emplace_back(row.t, row.line);
    }
    std::sort(raw.labels.begin(), raw.labels.end());
    raw.labels.erase(std::unique(raw.labels.begin(), raw.labels.end()), raw.labels.end());
    auto index_of = [&](const std::string& label) {
        return static_cast<Vertex>(std::lower_bound(raw.labels.begin(), raw.labels.end(), label) -
                                   raw.labels.begin());
    };

    raw.edges.reserve(rows.size());
    for (const auto& row : rows) {
        Vertex u = index_of(row.first);
        Vertex v = index_of(row.second);
        if (u > v) {
            std::swap(u, v);
        }
        raw.edges.push_back(RawEdgeList::Edge{u, v, row.t, row.line});
    }
    std::stable_sort(raw.edges.begin(), raw.edges.end(), [](const auto& x, const auto& y) {
        return std::tie(x.t, x.u, x.v) < std::tie(y.t, y.u, y.v);
    });
    auto same = [](const auto& x, const auto& y) { return x.t == y.t && x.u == y.u && x.v == y.v; };
    if (options.dedupe) {
        raw.edges.erase(std::unique(raw.edges.begin(), raw.edges.end(), same), raw.edges.end());
    } else {
        auto dup = std::adjacent_find(raw.edges.begin(), raw.edges.end(), same);
        if (dup != raw.edges.end()) {
            throw ParseError("duplicate edge", std::max(dup->line, std::next(dup)->line));
        }
    }
    return raw;
}

TemporalGraph normalize_timestamps(const RawEdgeList& raw, TimeStep resolution)
{
    if (resolution < 1) {
        throw std::invalid_argument("resolution must be at least 1");
    }
    if (raw.edges.empty() && raw.skipped_times.empty()) {
        throw ParseError("empty input", 0);
    }
    std::int64_t min_t = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : raw.edges) {
        min_t = std::min(min_t, e.t);
    }
    for (const auto& [t, line] : raw.skipped_times) {
        min_t = std::min(min_t, t);
    }
    TimeStep lifetime = 1;
    auto shifted = [&](std::int64_t t, std::size_t line) {
        const std::int64_t offset = t - min_t;
        if (offset % resolution != 0) {
            throw ParseError("timestamp " + std::to_string(t) + " is not a multiple of resolution " +
                                 std::to_string(resolution) + " after shifting",
                             line);
        }
        const TimeStep out = offset / resolution + 1;
        lifetime = std::max(lifetime, out);
        return out;
    };
    std::vector<TemporalEdge> edges;
    edges.reserve(raw.edges.size());
    for (const auto& e : raw.edges) {
        edges.push_back(TemporalEdge{e.u, e.v, shifted(e.t, e.line)});
    }
    for (const auto& [t, line] : raw.skipped_times) {
        (void)shifted(t, line);
    }
    return TemporalGraph(raw.labels, std::move(edges), lifetime);
}

TemporalGraph parse_edge_list(std::string_view text, const ParseOptions& options)
{
    return normalize_timestamps(read_edge_list(text, options), options.resolution);
}

std::string render_edge_list(const TemporalGraph& graph)
{
    std::ostringstream os;
    for (const auto& e : graph.edges()) {
        os << e.t << ' ' << graph.label(e.u) << ' ' << graph.label(e.v) << '\n';
    }
    return os.str();
}

FrameDomain FrameDomain::make(TimeStep lifetime, TimeStep delta)
{
    if (delta < 0) {
        throw std::invalid_argument("delta must be non-negative");
    }
    if (delta >= lifetime) {
        throw std::invalid_argument("delta too large for lifetime (delta=" + std::to_string(delta) +
                                    ", lifetime=" + std::to_string(lifetime) + ")");
    }
    return FrameDomain{delta, lifetime - delta};
}

Interval frames_covered(TimeStep t, const FrameDomain& frames)
{
    return Interval(std::max<TimeStep>(1, t - frames.delta), std::min(frames.last_frame, t));
}

NonNeighborhoodIndex::NonNeighborhoodIndex(const TemporalGraph& graph, const FrameDomain& frames)
    : frames_(frames), full_(frames.full()), rows_(graph.vertex_count())
{
    if (frames.lifetime() != graph.lifetime()) {
        throw std::invalid_argument("frame domain does not match graph lifetime");
    }
    // Edges arrive sorted by time, so the covered frame windows of each pair
    // arrive with non-decreasing starts and can be merged by appending.
    std::map<std::uint64_t, IntervalSetBuilder> covered;
    for (const auto& e : graph.edges()) {
        const Interval window = frames_covered(e.t, frames);
        covered[pair_key(e.u, e.v)].append(window.start, window.end);
    }
    for (auto& [key, builder] : covered) {
        const auto u = static_cast<Vertex>(key >> 32);
        const auto v = static_cast<Vertex>(key & 0xffffffffu);
        IntervalSet neighbor = std::move(builder).finish();
        IntervalSet non_neighbor = subtract(full_, neighbor);
        rows_[u].push_back(Entry{v, non_neighbor, neighbor});
        rows_[v].push_back(Entry{u, std::move(non_neighbor), std::move(neighbor)});
    }
    for (auto& row : rows_) {
        std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.other < b.other; });
    }
}

const NonNeighborhoodIndex::Entry* NonNeighborhoodIndex::find(Vertex u, Vertex v) const
{
    const auto& row = rows_.at(u);
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Entry& e, Vertex value) { return e.other < value; });
    return it != row.end() && it->other == v ? &*it : nullptr;
}

const IntervalSet& NonNeighborhoodIndex::non_neighbor_frames(Vertex u, Vertex v) const
{
    if (u == v) {
        return full_;
    }
    const Entry* e = find(u, v);
    return e ? e->non_neighbor : full_;
}

IntervalSet NonNeighborhoodIndex::neighbor_frames(Vertex u, Vertex v) const
{
    if (u == v) {
        return none_;
    }
    const Entry* e = find(u, v);
    return e ? e->neighbor : none_;
}

std::uint32_t delta_slice_degeneracy(const TemporalGraph& graph, const FrameDomain& frames)
{
    if (frames.lifetime() != graph.lifetime()) {
        throw std::invalid_argument("frame domain does not match graph lifetime");
    }
    const auto& edges = graph.edges();
    std::uint32_t result = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
    std::vector<std::uint64_t> pairs;
    for (TimeStep i = 1; i <= frames.last_frame; ++i) {
        while (lo < edges.size() && edges[lo].t < i) {
            ++lo;
        }
        hi = std::max(hi, lo);
        while (hi < edges.size() && edges[hi].t <= i + frames.delta) {
            ++hi;
        }
        if (lo == hi) {
            continue;
        }
        pairs.clear();
        for (std::size_t e = lo; e < hi; ++e) {
            pairs.push_back(pair_key(edges[e].u, edges[e].v));
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        result = std::max(result, peel_degeneracy(graph.vertex_count(), pairs));
    }
    return result;
}

std::uint32_t union_graph_degeneracy(const TemporalGraph& graph)
{
    std::vector<std::uint64_t> pairs;
    pairs.reserve(graph.edge_count());
    for (const auto& e : graph.edges()) {
        pairs.push_back(pair_key(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return peel_degeneracy(graph.vertex_count(), pairs);
}

BigInt plex_count_upper_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t m,
                              std::uint64_t lifetime)
{
    BigInt binomial = 1;
    if (k > n) {
        binomial = 0;
    } else {
        for (std::uint64_t i = 1; i <= k; ++i) {
            binomial = binomial * (n - k + i) / i;
        }
    }
    BigInt power = 1;
    power <<= static_cast<unsigned>(d + k);
    return BigInt(n) * binomial * power * BigInt(std::min(m, lifetime));
}

TimeStep scaled_delta(TimeStep lifetime, std::size_t edge_count, double exponent)
{
    if (edge_count == 0) {
        throw std::invalid_argument("scaled delta needs at least one edge");
    }
    const long double value = std::pow(5.0L, static_cast<long double>(exponent)) *
                              static_cast<long double>(lifetime) /
                              (5.0L * static_cast<long double>(edge_count));
    return std::max<TimeStep>(0, static_cast<TimeStep>(std::llround(value)));
}

}  // namespace tkplex
