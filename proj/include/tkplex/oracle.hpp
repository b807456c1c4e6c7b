#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tkplex/plex_record.hpp"
#include "tkplex/temporal_graph.hpp"

// Brute-force ground truth. Nothing here touches the interval algebra, the
// non-neighborhood index or the enumerator; agreement with them is the point.
namespace tkplex::oracle {

/// Instance too large for exhaustive search.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    std::size_t max_vertices = 12;
    TimeStep max_lifetime = 64;
};

/// Every v in `plex` has at most k vertices of `plex` (itself included) with no
/// edge to v inside [i, i+Δ], for every frame i of `frames`.
[[nodiscard]] bool is_plex(const TemporalGraph& graph, TimeStep delta, std::uint32_t k,
                           std::span<const Vertex> plex, const Interval& frames);

/// All maximal Δ-k-plexes, sorted by (vertex set, interval).
/// Throws SizeGuardError beyond `limits`, std::invalid_argument on bad Δ or k.
[[nodiscard]] std::vector<PlexRecord> enumerate_all_maximal(const TemporalGraph& graph, TimeStep delta,
                                                            std::uint32_t k, const Limits& limits = {});

/// Degeneracy by repeated removal of a minimum-degree vertex.
[[nodiscard]] std::uint32_t static_degeneracy(const std::vector<std::vector<bool>>& adjacency);

}  // namespace tkplex::oracle
