#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tkplex/interval.hpp"
#include "tkplex/pair_set.hpp"
#include "tkplex/temporal_graph.hpp"

namespace tkplex {

struct PivotChoice {
    Vertex pivot = 0;
    /// Candidates skipped in the current call, sorted. Never contains the pivot.
    std::vector<Vertex> suppressed;
};

/// Picks the pivot p in V(P) ∪ V(X) that is a neighbor of every plex member
/// throughout its own frames and suppresses the most candidates.
///
/// A candidate w is suppressed when its frames are covered by p's frames and p
/// is its neighbor on all of them; then p can join any plex built from
/// suppressed candidates alone, so none of those is maximal. Ties go to the
/// smallest vertex. Returns nothing when no vertex qualifies as a pivot.
[[nodiscard]] std::optional<PivotChoice> select_pivot(std::span<const Vertex> plex, const IntervalSet& frames,
                                                      const PairSet& candidates, const PairSet& excluded,
                                                      const NonNeighborhoodIndex& index);

/// Candidates with an edge to some plex member inside a frame shared by the
/// candidate's frames and `frames`. An empty plex keeps every candidate.
[[nodiscard]] PairSet connected_candidates(const PairSet& candidates, std::span<const Vertex> plex,
                                           const IntervalSet& frames, const NonNeighborhoodIndex& index);

}  // namespace tkplex
