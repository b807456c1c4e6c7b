#include "tkplex/heuristics.hpp"

#include <algorithm>

namespace tkplex {

std::optional<PivotChoice> select_pivot(std::span<const Vertex> plex, const IntervalSet& /*frames*/,
                                        const PairSet& candidates, const PairSet& excluded,
                                        const NonNeighborhoodIndex& index)
{
    if (candidates.empty()) {
        return std::nullopt;
    }

    std::optional<PivotChoice> best;
    std::vector<Vertex> suppressed;
    auto consider = [&](const VertexFrames& p) {
        for (Vertex c : plex) {
            if (overlaps(p.frames, index.non_neighbor_frames(p.vertex, c))) {
                return;
            }
        }
        // Only pairs with an edge can be neighbors anywhere, so walk p's
        // explicit index row alongside the sorted candidates.
        suppressed.clear();
        const auto& row = index.explicit_entries(p.vertex);
        auto r = row.begin();
        for (const auto& w : candidates) {
            while (r != row.end() && r->other < w.vertex) {
                ++r;
            }
            if (r == row.end()) {
                break;
            }
            if (r->other != w.vertex) {
                continue;
            }
            if (is_covered(w.frames, p.frames) && !overlaps(w.frames, r->non_neighbor)) {
                suppressed.push_back(w.vertex);
            }
        }
        if (!best || suppressed.size() > best->suppressed.size() ||
            (suppressed.size() == best->suppressed.size() && p.vertex < best->pivot)) {
            best = PivotChoice{p.vertex, suppressed};
        }
    };
    for (const auto& p : candidates) {
        consider(p);
    }
    for (const auto& p : excluded) {
        consider(p);
    }
    return best;
}

PairSet connected_candidates(const PairSet& candidates, std::span<const Vertex> plex, const IntervalSet& frames,
                             const NonNeighborhoodIndex& index)
{
    if (plex.empty()) {
        return candidates;
    }
    PairSet out;
    for (const auto& w : candidates) {
        const IntervalSet live = intersect(w.frames, frames);
        if (live.empty()) {
            continue;
        }
        const bool linked = std::any_of(plex.begin(), plex.end(), [&](Vertex c) {
            return overlaps(live, index.neighbor_frames(w.vertex, c));
        });
        if (linked) {
            out.push_back_sorted(w.vertex, w.frames);
        }
    }
    return out;
}

}  // namespace tkplex
