#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tkplex/interval.hpp"
#include "tkplex/temporal_graph.hpp"

namespace tkplex {

/// Maximal run of frames over which a vertex's count is constant.
struct CountRun {
    TimeStep start;
    TimeStep end;
    std::uint32_t count;

    friend bool operator==(const CountRun&, const CountRun&) = default;
};

/// B(w, t): per vertex and frame, the number of w's Δ-non-neighbors in the
/// current plex vertex set.
///
/// Each vertex holds a run-length sequence that partitions [1, last_frame];
/// consecutive runs always carry different counts.
class Pool {
public:
    Pool(std::size_t vertex_count, TimeStep last_frame);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return runs_.size(); }
    [[nodiscard]] TimeStep last_frame() const noexcept { return last_frame_; }
    [[nodiscard]] const std::vector<CountRun>& runs(Vertex w) const { return runs_.at(w); }
    [[nodiscard]] std::uint32_t count(Vertex w, TimeStep t) const;

    /// Adds one to w's count on every frame in `frames` and returns the frames
    /// where the count now equals `critical`. When `previous` is given, the
    /// replaced run sequence is moved into it.
    IntervalSet increment(Vertex w, const IntervalSet& frames, std::uint32_t critical,
                          std::vector<CountRun>* previous = nullptr);
    void restore(Vertex w, std::vector<CountRun> runs) { runs_.at(w) = std::move(runs); }

    friend bool operator==(const Pool&, const Pool&) = default;

private:
    TimeStep last_frame_;
    std::vector<std::vector<CountRun>> runs_;
};

/// Records replaced run sequences so a batch of increments can be rolled back.
class PoolUndoLog {
public:
    std::vector<CountRun>* slot(Vertex w)
    {
        saved_.emplace_back(w, std::vector<CountRun>{});
        return &saved_.back().second;
    }
    void rollback(Pool& pool)
    {
        for (auto it = saved_.rbegin(); it != saved_.rend(); ++it) {
            pool.restore(it->first, std::move(it->second));
        }
        saved_.clear();
    }

private:
    std::vector<std::pair<Vertex, std::vector<CountRun>>> saved_;
};

}  // namespace tkplex
