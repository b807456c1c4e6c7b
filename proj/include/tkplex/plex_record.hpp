#pragma once

#include <vector>

#include "tkplex/interval.hpp"
#include "tkplex/temporal_graph.hpp"

namespace tkplex {

/// A maximal Δ-k-plex: sorted vertex set and frame interval.
struct PlexRecord {
    std::vector<Vertex> vertices;
    Interval frames;

    friend bool operator==(const PlexRecord&, const PlexRecord&) = default;
    friend auto operator<=>(const PlexRecord&, const PlexRecord&) = default;
};

}  // namespace tkplex
