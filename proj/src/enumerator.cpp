#include "tkplex/enumerator.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tkplex/heuristics.hpp"

namespace tkplex {

namespace {

template <typename IsMember>
PairSet pool_update(Pool& pool, std::span<const Vertex> plex, IsMember is_member, const VertexFrames& added,
                    const PairSet& candidates, const PairSet& excluded, const NonNeighborhoodIndex& index,
                    std::uint32_t k, PoolUndoLog* undo)
{
    std::vector<VertexFrames> critical;
    auto bump = [&](Vertex w, const IntervalSet& frames) {
        if (frames.empty()) {
            return;
        }
        IntervalSet hit = pool.increment(w, frames, k, undo ? undo->slot(w) : nullptr);
        if (!hit.empty()) {
            critical.push_back(VertexFrames{w, std::move(hit)});
        }
    };

    for (Vertex c : plex) {
        if (c == added.vertex) {
            bump(c, added.frames);
        } else {
            bump(c, intersect(added.frames, index.non_neighbor_frames(added.vertex, c)));
        }
    }
    for (const auto* set : {&candidates, &excluded}) {
        for (const auto& w : *set) {
            if (is_member(w.vertex)) {
                continue;
            }
            const IntervalSet live = intersect(w.frames, added.frames);
            if (live.empty()) {
                continue;
            }
            bump(w.vertex, intersect(live, index.non_neighbor_frames(added.vertex, w.vertex)));
        }
    }

    std::sort(critical.begin(), critical.end(),
              [](const VertexFrames& a, const VertexFrames& b) { return a.vertex < b.vertex; });
    PairSet out;
    for (auto& e : critical) {
        out.push_back_sorted(e.vertex, std::move(e.frames));
    }
    return out;
}

template <typename IsMember>
PairSet candidate_update(const PairSet& set, IsMember is_member, const PairSet& critical, const VertexFrames& added,
                         const NonNeighborhoodIndex& index)
{
    std::vector<const VertexFrames*> critical_members;
    for (const auto& u : critical) {
        if (is_member(u.vertex)) {
            critical_members.push_back(&u);
        }
    }

    PairSet out;
    for (const auto& w : set) {
        if (w.vertex == added.vertex) {
            continue;
        }
        IntervalSet frames = intersect(w.frames, added.frames);
        for (const auto* u : critical_members) {
            if (frames.empty()) {
                break;
            }
            const IntervalSet blocked = intersect(u->frames, index.non_neighbor_frames(w.vertex, u->vertex));
            if (!blocked.empty()) {
                frames = subtract(frames, blocked);
            }
        }
        if (!frames.empty()) {
            if (const IntervalSet* self = critical.find(w.vertex)) {
                frames = subtract(frames, *self);
            }
        }
        if (!frames.empty()) {
            out.push_back_sorted(w.vertex, std::move(frames));
        }
    }
    return out;
}

auto sorted_membership(std::span<const Vertex> plex)
{
    std::vector<Vertex> sorted(plex.begin(), plex.end());
    std::sort(sorted.begin(), sorted.end());
    return [sorted = std::move(sorted)](Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
}

class Search {
public:
    Search(const TemporalGraph& graph, const NonNeighborhoodIndex& index, const SearchConfig& config,
           const PlexSink& sink, const CallObserver& observer)
        : index_(index),
          config_(config),
          sink_(sink),
          observer_(observer),
          pool_(graph.vertex_count(), index.frames().last_frame),
          in_plex_(graph.vertex_count(), 0)
    {
        plex_.reserve(graph.vertex_count());
    }

    RunStats run(const TemporalGraph& graph)
    {
        start_ = std::chrono::steady_clock::now();
        PairSet candidates;
        for (Vertex v = 0; v < graph.vertex_count(); ++v) {
            candidates.push_back_sorted(v, index_.full_domain());
        }
        recurse(index_.full_domain(), std::move(candidates), PairSet{});
        stats_.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return stats_;
    }

private:
    bool out_of_time()
    {
        if (!config_.time_limit) {
            return false;
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return elapsed > *config_.time_limit;
    }

    void recurse(const IntervalSet& frames, PairSet candidates, PairSet excluded)
    {
        if (stopped_) {
            return;
        }
        if (out_of_time()) {
            stopped_ = true;
            stats_.timed_out = true;
            return;
        }
        ++stats_.recursive_calls;
        if (observer_) {
            observer_(CallState{plex_, frames, candidates, excluded, pool_});
        }

        for (auto& record : emit_maximal(plex_, frames, candidates, excluded, config_.min_size())) {
            ++stats_.plex_count;
            stats_.max_plex_order = std::max(stats_.max_plex_order, record.vertices.size());
            stats_.max_lifetime_length = std::max(stats_.max_lifetime_length, record.frames.length());
            sink_(record);
        }

        std::vector<Vertex> order;
        if (config_.connectedness) {
            order = connected_candidates(candidates, plex_, frames, index_).vertices();
            if (order.empty()) {
                return;
            }
        } else {
            order = candidates.vertices();
        }
        std::vector<Vertex> suppressed;
        if (config_.pivoting) {
            if (auto choice = select_pivot(plex_, frames, candidates, excluded, index_)) {
                suppressed = std::move(choice->suppressed);
            }
        }

        auto is_member = [this](Vertex v) { return in_plex_[v] != 0; };
        for (Vertex v : order) {
            if (std::binary_search(suppressed.begin(), suppressed.end(), v)) {
                continue;
            }
            const VertexFrames added{v, *candidates.find(v)};
            plex_.push_back(v);
            in_plex_[v] = 1;

            PoolUndoLog undo;
            const PairSet critical = pool_update(pool_, plex_, is_member, added, candidates, excluded, index_,
                                                 config_.k, &undo);
            PairSet next_candidates = candidate_update(candidates, is_member, critical, added, index_);
            PairSet next_excluded = candidate_update(excluded, is_member, critical, added, index_);
            recurse(added.frames, std::move(next_candidates), std::move(next_excluded));

            undo.rollback(pool_);
            in_plex_[v] = 0;
            plex_.pop_back();
            candidates.erase(v);
            excluded.merge(v, added.frames);
            if (stopped_) {
                return;
            }
        }
    }

    const NonNeighborhoodIndex& index_;
    const SearchConfig& config_;
    const PlexSink& sink_;
    const CallObserver& observer_;
    Pool pool_;
    std::vector<Vertex> plex_;
    std::vector<char> in_plex_;
    RunStats stats_;
    std::chrono::steady_clock::time_point start_;
    bool stopped_ = false;
};

}  // namespace

PairSet apply_pool_update(Pool& pool, std::span<const Vertex> plex, const VertexFrames& added,
                          const PairSet& candidates, const PairSet& excluded, const NonNeighborhoodIndex& index,
                          std::uint32_t k, PoolUndoLog* undo)
{
    return pool_update(pool, plex, sorted_membership(plex), added, candidates, excluded, index, k, undo);
}

std::pair<Pool, PairSet> update_pool(const Pool& pool, std::span<const Vertex> plex, const VertexFrames& added,
                                     const PairSet& candidates, const PairSet& excluded,
                                     const NonNeighborhoodIndex& index, std::uint32_t k)
{
    Pool next = pool;
    PairSet critical = apply_pool_update(next, plex, added, candidates, excluded, index, k);
    return {std::move(next), std::move(critical)};
}

PairSet update_candidates(const PairSet& set, std::span<const Vertex> plex, const PairSet& critical,
                          const VertexFrames& added, const NonNeighborhoodIndex& index)
{
    return candidate_update(set, sorted_membership(plex), critical, added, index);
}

std::vector<PlexRecord> emit_maximal(std::span<const Vertex> plex, const IntervalSet& frames,
                                     const PairSet& candidates, const PairSet& excluded, std::size_t min_size)
{
    std::vector<PlexRecord> out;
    if (plex.empty() || plex.size() < min_size) {
        return out;
    }
    auto reproduced = [](const PairSet& set, const Interval& iv) {
        return std::any_of(set.begin(), set.end(), [&](const VertexFrames& e) { return e.frames.has_member(iv); });
    };
    std::vector<Vertex> sorted(plex.begin(), plex.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& iv : frames) {
        if (!reproduced(candidates, iv) && !reproduced(excluded, iv)) {
            out.push_back(PlexRecord{sorted, iv});
        }
    }
    return out;
}

RunStats enumerate_maximal_plexes(const TemporalGraph& graph, const NonNeighborhoodIndex& index,
                                  const SearchConfig& config, const PlexSink& sink, const CallObserver& observer)
{
    if (config.k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (config.delta != index.frames().delta || index.frames().lifetime() != graph.lifetime() ||
        index.vertex_count() != graph.vertex_count()) {
        throw std::invalid_argument("non-neighborhood index does not match graph and delta");
    }
    Search search(graph, index, config, sink, observer);
    return search.run(graph);
}

RunStats enumerate_maximal_plexes(const TemporalGraph& graph, const SearchConfig& config, const PlexSink& sink,
                                  const CallObserver& observer)
{
    if (config.k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    const NonNeighborhoodIndex index(graph, FrameDomain::make(graph.lifetime(), config.delta));
    return enumerate_maximal_plexes(graph, index, config, sink, observer);
}

}  // namespace tkplex
