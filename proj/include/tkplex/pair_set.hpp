#pragma once

#include <span>
#include <vector>

#include "tkplex/interval.hpp"
#include "tkplex/temporal_graph.hpp"

namespace tkplex {

/// A vertex-interval-set pair (v, 𝓘ᵥ).
struct VertexFrames {
    Vertex vertex = 0;
    IntervalSet frames;

    friend bool operator==(const VertexFrames&, const VertexFrames&) = default;
};

/// Set of vertex-interval-set pairs, at most one per vertex, none empty.
/// Entries are kept sorted by vertex.
class PairSet {
public:
    PairSet() = default;
    /// Entries may be in any order; duplicate vertices are united and empty
    /// interval sets dropped.
    explicit PairSet(std::vector<VertexFrames> entries);

    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }
    [[nodiscard]] const std::vector<VertexFrames>& entries() const noexcept { return entries_; }

    [[nodiscard]] bool contains(Vertex v) const noexcept { return find(v) != nullptr; }
    /// Entry for v, or nullptr.
    [[nodiscard]] const IntervalSet* find(Vertex v) const noexcept;
    [[nodiscard]] std::vector<Vertex> vertices() const;

    /// (v, 𝓘ᵥ) ⊔ self, in place.
    void merge(Vertex v, const IntervalSet& frames);
    /// Removes v's entry if present.
    void erase(Vertex v);

    /// Appends an entry; v must exceed every vertex already present and
    /// `frames` must be non-empty. Used by linear builders.
    void push_back_sorted(Vertex v, IntervalSet frames);

    friend bool operator==(const PairSet&, const PairSet&) = default;

private:
    std::vector<VertexFrames> entries_;
};

/// X[𝓘]: every entry intersected with `frames`; emptied entries dropped.
[[nodiscard]] PairSet restrict_time(const PairSet& set, const IntervalSet& frames);
/// X[V']: entries whose vertex is in `vertices` (any order).
[[nodiscard]] PairSet restrict_vertices(const PairSet& set, std::span<const Vertex> vertices);
/// (v, 𝓘ᵥ) ⊔ Y.
[[nodiscard]] PairSet merge(const VertexFrames& pair, const PairSet& set);
/// X ⊓ Y: common vertices with intersected frames; emptied entries dropped.
[[nodiscard]] PairSet intersect(const PairSet& a, const PairSet& b);

}  // namespace tkplex
