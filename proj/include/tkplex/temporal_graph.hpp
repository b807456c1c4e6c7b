#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tkplex/interval.hpp"

namespace tkplex {

using Vertex = std::uint32_t;

/// A time-stamped undirected edge ({u, v}, t) with u < v.
struct TemporalEdge {
    Vertex u = 0;
    Vertex v = 0;
    TimeStep t = 1;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

/// Input that cannot be turned into a temporal graph.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line)
    {
    }
    /// 1-based line number, or 0 when the error is not tied to a line.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Vertices with dense indices, time-stamped edges sorted by time, lifetime ω.
///
/// Immutable after construction. Edges are stored with u < v, sorted by
/// (t, u, v) and free of duplicates.
class TemporalGraph {
public:
    /// Validates and canonicalizes: rejects self-loops, out-of-range vertices
    /// and timestamps outside [1, lifetime]; sorts and removes duplicates.
    TemporalGraph(std::vector<std::string> labels, std::vector<TemporalEdge> edges, TimeStep lifetime);
    /// Unlabeled graph; labels become "0", "1", ...
    TemporalGraph(std::size_t vertex_count, std::vector<TemporalEdge> edges, TimeStep lifetime);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] TimeStep lifetime() const noexcept { return lifetime_; }
    [[nodiscard]] const std::vector<TemporalEdge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] const std::string& label(Vertex v) const { return labels_.at(v); }
    [[nodiscard]] std::optional<Vertex> find_vertex(std::string_view label) const;

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<TemporalEdge> edges_;
    TimeStep lifetime_;
};

/// Column layout of an edge-list line (0-based column indices).
struct ColumnSpec {
    std::size_t time = 0;
    std::size_t first = 1;
    std::size_t second = 2;
};

enum class SelfLoopPolicy { reject, skip };

struct ParseOptions {
    ColumnSpec columns;
    bool dedupe = true;
    SelfLoopPolicy self_loops = SelfLoopPolicy::reject;
    TimeStep resolution = 1;
};

/// Raw time-stamped edge list before timestamp normalization.
struct RawEdgeList {
    std::vector<std::string> labels;  // sorted, index = dense vertex id
    struct Edge {
        Vertex u;
        Vertex v;
        std::int64_t t;
        std::size_t line;
    };
    std::vector<Edge> edges;
    std::size_t skipped_self_loops = 0;
    /// Timestamps of skipped self-loops. Their vertex still gets a label and
    /// their time still counts toward the lifetime.
    std::vector<std::pair<std::int64_t, std::size_t>> skipped_times;  // (t, line)
};

/// Tokenizes whitespace-separated lines; '#' lines and blank lines are skipped.
/// Vertex labels are arbitrary strings and get dense indices in sorted label order.
[[nodiscard]] RawEdgeList read_edge_list(std::string_view text, const ParseOptions& options = {});

/// Shifts timestamps so the minimum maps to 1, then divides the offsets by
/// `resolution`: t' = (t - min) / r + 1. Throws ParseError if r does not
/// divide an offset, std::invalid_argument if r < 1.
[[nodiscard]] TemporalGraph normalize_timestamps(const RawEdgeList& raw, TimeStep resolution);

/// read_edge_list followed by normalize_timestamps(options.resolution).
[[nodiscard]] TemporalGraph parse_edge_list(std::string_view text, const ParseOptions& options = {});

/// Renders "t u v" lines with labels; parse_edge_list inverts it for graphs whose
/// earliest edge is at time 1.
[[nodiscard]] std::string render_edge_list(const TemporalGraph& graph);

/// Δ-frames Δ_i = [i, i+Δ] for i in [1, ω-Δ].
struct FrameDomain {
    TimeStep delta = 0;
    TimeStep last_frame = 1;

    /// Throws std::invalid_argument when delta < 0 or delta >= lifetime.
    static FrameDomain make(TimeStep lifetime, TimeStep delta);

    [[nodiscard]] TimeStep lifetime() const noexcept { return last_frame + delta; }
    [[nodiscard]] Interval full() const { return Interval(1, last_frame); }
};

/// Frames i with t in [i, i+Δ]: [max(1, t-Δ), min(ω-Δ, t)].
[[nodiscard]] Interval frames_covered(TimeStep t, const FrameDomain& frames);

/// Per-pair Δ-non-neighbor frame sets.
///
/// Pairs that never share an edge are stored implicitly: their non-neighbor set
/// is the full frame domain, as is every vertex's entry against itself.
class NonNeighborhoodIndex {
public:
    NonNeighborhoodIndex(const TemporalGraph& graph, const FrameDomain& frames);

    [[nodiscard]] const FrameDomain& frames() const noexcept { return frames_; }
    [[nodiscard]] const IntervalSet& full_domain() const noexcept { return full_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return rows_.size(); }

    /// Frames where u and v are non-neighbors. Full domain when u == v or the
    /// pair has no edge.
    [[nodiscard]] const IntervalSet& non_neighbor_frames(Vertex u, Vertex v) const;
    /// Frames where u and v are neighbors (complement within the frame domain).
    [[nodiscard]] IntervalSet neighbor_frames(Vertex u, Vertex v) const;

    struct Entry {
        Vertex other;
        IntervalSet non_neighbor;
        IntervalSet neighbor;
    };
    /// Explicit entries for pairs with at least one edge, sorted by `other`.
    [[nodiscard]] const std::vector<Entry>& explicit_entries(Vertex v) const { return rows_.at(v); }

private:
    [[nodiscard]] const Entry* find(Vertex u, Vertex v) const;

    FrameDomain frames_;
    IntervalSet full_;
    IntervalSet none_;
    std::vector<std::vector<Entry>> rows_;
};

/// Maximum over all Δ-frames of the degeneracy of the frame's snapshot graph.
[[nodiscard]] std::uint32_t delta_slice_degeneracy(const TemporalGraph& graph, const FrameDomain& frames);

/// Degeneracy of the static graph that has an edge wherever the temporal graph
/// has one at any time.
[[nodiscard]] std::uint32_t union_graph_degeneracy(const TemporalGraph& graph);

using BigInt = boost::multiprecision::cpp_int;

/// n · C(n, k) · 2^(d+k) · min(m, ω), exactly.
[[nodiscard]] BigInt plex_count_upper_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                                            std::uint64_t m, std::uint64_t lifetime);

/// Δ = max(0, round(5^e · ω / (5m))).
[[nodiscard]] TimeStep scaled_delta(TimeStep lifetime, std::size_t edge_count, double exponent);

}  // namespace tkplex
