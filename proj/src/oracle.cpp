#include "tkplex/oracle.hpp"

#include <algorithm>
#include <string>

namespace tkplex::oracle {

namespace {

bool linked_in_frame(const TemporalGraph& graph, Vertex a, Vertex b, TimeStep frame, TimeStep delta)
{
    for (const auto& e : graph.edges()) {
        if (((e.u == a && e.v == b) || (e.u == b && e.v == a)) && e.t >= frame && e.t <= frame + delta) {
            return true;
        }
    }
    return false;
}

void check_parameters(const TemporalGraph& graph, TimeStep delta, std::uint32_t k)
{
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (delta < 0 || delta >= graph.lifetime()) {
        throw std::invalid_argument("delta too large for lifetime");
    }
}

}  // namespace

bool is_plex(const TemporalGraph& graph, TimeStep delta, std::uint32_t k, std::span<const Vertex> plex,
             const Interval& frames)
{
    check_parameters(graph, delta, k);
    for (TimeStep i = frames.start; i <= frames.end; ++i) {
        for (Vertex v : plex) {
            std::uint32_t missing = 0;
            for (Vertex u : plex) {
                if (u == v || !linked_in_frame(graph, u, v, i, delta)) {
                    ++missing;
                }
            }
            if (missing > k) {
                return false;
            }
        }
    }
    return true;
}

std::vector<PlexRecord> enumerate_all_maximal(const TemporalGraph& graph, TimeStep delta, std::uint32_t k,
                                              const Limits& limits)
{
    check_parameters(graph, delta, k);
    const std::size_t n = graph.vertex_count();
    if (n > limits.max_vertices || graph.lifetime() > limits.max_lifetime) {
        throw SizeGuardError("instance exceeds oracle size guard (" + std::to_string(n) + " vertices, lifetime " +
                             std::to_string(graph.lifetime()) + "; limits " + std::to_string(limits.max_vertices) +
                             " vertices, lifetime " + std::to_string(limits.max_lifetime) + ")");
    }
    const TimeStep frame_count = graph.lifetime() - delta;

    // linked[i][u][v]: u and v share an edge inside frame i (0-based frame).
    std::vector<std::vector<std::vector<bool>>> linked(
        static_cast<std::size_t>(frame_count), std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
    for (const auto& e : graph.edges()) {
        for (TimeStep i = 1; i <= frame_count; ++i) {
            if (e.t >= i && e.t <= i + delta) {
                linked[i - 1][e.u][e.v] = true;
                linked[i - 1][e.v][e.u] = true;
            }
        }
    }

    const std::uint32_t subsets = 1u << n;
    // feasible[mask * frame_count + i]: the vertex set `mask` is a k-plex in frame i.
    std::vector<char> feasible(static_cast<std::size_t>(subsets) * frame_count, 0);
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        for (TimeStep i = 0; i < frame_count; ++i) {
            bool ok = true;
            for (std::size_t v = 0; v < n && ok; ++v) {
                if (!(mask >> v & 1u)) {
                    continue;
                }
                std::uint32_t missing = 0;
                for (std::size_t u = 0; u < n; ++u) {
                    if ((mask >> u & 1u) && (u == v || !linked[i][u][v])) {
                        ++missing;
                    }
                }
                ok = missing <= k;
            }
            feasible[static_cast<std::size_t>(mask) * frame_count + i] = ok ? 1 : 0;
        }
    }
    auto frame_ok = [&](std::uint32_t mask, TimeStep i) {
        return feasible[static_cast<std::size_t>(mask) * frame_count + i] != 0;
    };

    std::vector<PlexRecord> out;
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        TimeStep i = 0;
        while (i < frame_count) {
            if (!frame_ok(mask, i)) {
                ++i;
                continue;
            }
            const TimeStep a = i;
            while (i < frame_count && frame_ok(mask, i)) {
                ++i;
            }
            const TimeStep b = i - 1;
            bool vertex_maximal = true;
            for (std::size_t v = 0; v < n && vertex_maximal; ++v) {
                if (mask >> v & 1u) {
                    continue;
                }
                const std::uint32_t grown = mask | (1u << v);
                bool extends = true;
                for (TimeStep j = a; j <= b && extends; ++j) {
                    extends = frame_ok(grown, j);
                }
                vertex_maximal = !extends;
            }
            if (vertex_maximal) {
                PlexRecord record;
                for (std::size_t v = 0; v < n; ++v) {
                    if (mask >> v & 1u) {
                        record.vertices.push_back(static_cast<Vertex>(v));
                    }
                }
                record.frames = Interval(a + 1, b + 1);
                out.push_back(std::move(record));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint32_t static_degeneracy(const std::vector<std::vector<bool>>& adjacency)
{
    const std::size_t n = adjacency.size();
    std::vector<bool> removed(n, false);
    std::uint32_t result = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::uint32_t best_degree = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (removed[v]) {
                continue;
            }
            std::uint32_t degree = 0;
            for (std::size_t u = 0; u < n; ++u) {
                if (u != v && !removed[u] && adjacency[v][u]) {
                    ++degree;
                }
            }
            if (best == n || degree < best_degree) {
                best = v;
                best_degree = degree;
            }
        }
        removed[best] = true;
        result = std::max(result, best_degree);
    }
    return result;
}

}  // namespace tkplex::oracle
