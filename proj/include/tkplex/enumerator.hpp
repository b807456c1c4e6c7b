#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tkplex/interval.hpp"
#include "tkplex/pair_set.hpp"
#include "tkplex/plex_record.hpp"
#include "tkplex/pool.hpp"
#include "tkplex/temporal_graph.hpp"

namespace tkplex {

struct SearchConfig {
    TimeStep delta = 0;
    std::uint32_t k = 1;
    bool pivoting = false;
    bool connectedness = false;
    /// Wall-clock budget in seconds; checked on entry to every recursive call.
    std::optional<double> time_limit;

    /// Smallest plex order that is reported: 2k+1 in connected mode, else 1.
    [[nodiscard]] std::size_t min_size() const noexcept
    {
        return connectedness ? 2 * static_cast<std::size_t>(k) + 1 : 1;
    }
};

struct RunStats {
    std::uint64_t plex_count = 0;
    std::size_t max_plex_order = 0;
    TimeStep max_lifetime_length = 0;
    std::uint64_t recursive_calls = 0;
    double wall_time_seconds = 0.0;
    bool timed_out = false;
};

using PlexSink = std::function<void(const PlexRecord&)>;

/// Read-only view of one recursive call, handed to a CallObserver on entry.
struct CallState {
    std::span<const Vertex> plex;  // C, in insertion order
    const IntervalSet& frames;     // 𝓘
    const PairSet& candidates;     // P
    const PairSet& excluded;       // X
    const Pool& pool;              // B
};

/// Instrumentation hook invoked at the start of every recursive call.
using CallObserver = std::function<void(const CallState&)>;

/// UpdatePool: adds `added` (already a member of `plex`) to the pool and
/// returns the critical pairs, i.e. frames where a tracked vertex's count
/// reached exactly k. Tracked vertices are V(P) ∪ V(X) ∪ plex; members of
/// `plex` are updated over `added.frames`, the others over their own frames
/// restricted to `added.frames`.
[[nodiscard]] PairSet apply_pool_update(Pool& pool, std::span<const Vertex> plex, const VertexFrames& added,
                                        const PairSet& candidates, const PairSet& excluded,
                                        const NonNeighborhoodIndex& index, std::uint32_t k,
                                        PoolUndoLog* undo = nullptr);

/// Pure form of apply_pool_update.
[[nodiscard]] std::pair<Pool, PairSet> update_pool(const Pool& pool, std::span<const Vertex> plex,
                                                   const VertexFrames& added, const PairSet& candidates,
                                                   const PairSet& excluded, const NonNeighborhoodIndex& index,
                                                   std::uint32_t k);

/// Update: restricts every entry of `set` (except `added.vertex`) to
/// `added.frames` and removes the frames where some critical u in plex ∪ {w}
/// is a non-neighbor of w.
[[nodiscard]] PairSet update_candidates(const PairSet& set, std::span<const Vertex> plex, const PairSet& critical,
                                        const VertexFrames& added, const NonNeighborhoodIndex& index);

/// Intervals of `frames` that no entry of P or X reproduces exactly, as records
/// for `plex` (skipped entirely when |plex| < min_size).
[[nodiscard]] std::vector<PlexRecord> emit_maximal(std::span<const Vertex> plex, const IntervalSet& frames,
                                                   const PairSet& candidates, const PairSet& excluded,
                                                   std::size_t min_size);

/// Enumerates every maximal Δ-k-plex of `graph` exactly once.
///
/// Throws std::invalid_argument if k < 1 or Δ >= ω. On time-limit expiry the
/// search unwinds, records delivered so far stand, and stats.timed_out is set.
RunStats enumerate_maximal_plexes(const TemporalGraph& graph, const SearchConfig& config, const PlexSink& sink,
                                  const CallObserver& observer = {});

/// Same, reusing a prebuilt index (whose frame domain fixes Δ).
RunStats enumerate_maximal_plexes(const TemporalGraph& graph, const NonNeighborhoodIndex& index,
                                  const SearchConfig& config, const PlexSink& sink,
                                  const CallObserver& observer = {});

}  // namespace tkplex
